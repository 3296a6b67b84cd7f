#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ltisec/json_io.hpp"

using namespace ltisec;

TEST_CASE("rational ingestion") {
    CHECK(rat_from_json(json(3)) == Rat(3));
    CHECK(rat_from_json(json("1/2")) == Rat(1, 2));
    CHECK(rat_from_json(json("0.5")) == Rat(1, 2));
    CHECK(rat_from_json(json::parse("0.5")) == Rat(1, 2));
    CHECK(rat_from_json(json::parse("-1.25")) == Rat(-5, 4));
    CHECK(rat_from_json(json::parse("1e2")) == Rat(100));
    CHECK(rat_from_json(json::parse("2.5e-1")) == Rat(1, 4));
    CHECK_THROWS_AS(rat_from_json(json(true)), ParseError);
}

TEST_CASE("rational serialization round-trips") {
    CHECK(rat_to_json(Rat(7)) == json(7));
    CHECK(rat_to_json(Rat(-1, 2)) == json("-1/2"));
    for (const Rat& r : {Rat(0), Rat(-3), Rat(22, 7), Rat(1, 1000000)})
        CHECK(rat_from_json(rat_to_json(r)) == r);
}

TEST_CASE("matrix round-trip") {
    Mat m{{Rat(1), Rat(1, 2)}, {Rat(-3), Rat(0)}};
    CHECK(mat_from_json(mat_to_json(m)) == m);
    CHECK_THROWS_AS(mat_from_json(json::parse("[[1,2],[3]]")), ParseError);
}

TEST_CASE("state set schema round-trip") {
    std::vector<StateSet> sets{
        StateSet::full_space(2),
        StateSet::finite({Vec{1, 0}, Vec{0, 1}}, 2),
        StateSet::lin(Subspace::span_of({Vec{0, 1}}, 2)),
        StateSet::coset(Vec{1, 0}, Subspace::span_of({Vec{0, 1}}, 2)),
        StateSet::poly({Vec{-1, 0}, Vec{1, 0}}, 2),
        StateSet::make_union({StateSet::poly({Vec{-1, 1}, Vec{1, 1}}, 2),
                              StateSet::finite({Vec{0, 0}}, 2)}),
        StateSet::complement_of(Subspace::span_of({Vec{1, 0}}, 2)),
    };
    for (const auto& s : sets) CHECK(state_set_from_json(state_set_to_json(s)) == s);
    CHECK_THROWS_AS(state_set_from_json(json::parse(R"({"kind":"blob"})")), ParseError);
}

TEST_CASE("model files parse exactly") {
    ParsedModel m = parse_model_file("models/two_state.json");
    CHECK(m.system.state_dim() == 2);
    CHECK(m.system.output_dim() == 1);
    CHECK(m.system.input_dim() == 2);
    CHECK(m.system.A() == Mat{{1, 1}, {0, 1}});
    CHECK(m.system.D().is_zero());
    CHECK(m.channel.B() == m.system.B());

    ParsedModel veh = parse_model_file("models/vehicle.json");
    CHECK(veh.system.B() == Mat{{Rat(1, 2)}, {Rat(1)}});

    CHECK_THROWS_AS(parse_model_file("models/no_such_file.json"), ParseError);
    CHECK_THROWS_AS(parse_model_json(json::parse(R"({"A":[[1]],"B":[[1],[1]],"C":[[1]]})")),
                    ModelError);
    // Rank-deficient stacked attack channel is rejected outright.
    CHECK_THROWS_AS(parse_model_json(json::parse(
                        R"({"A":[[1,0],[0,1]],"B":[[1],[2]],"C":[[1,0]],
                            "attack":{"B":[[0],[0]],"D":[[0]]}})")),
                    ModelError);
}

TEST_CASE("content digest is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
    CHECK(fnv1a64_hex("model") == fnv1a64_hex("model"));
}
