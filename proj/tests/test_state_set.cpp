#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ltisec/state_set.hpp"

#include <random>

using namespace ltisec;

namespace {

Subspace vertical() { return Subspace::span_of({Vec{0, 1}}, 2); }

StateSet box_boundary() {
    // The four edges of the unit sup-norm ball boundary.
    return StateSet::make_union({
        StateSet::poly({Vec{-1, 1}, Vec{1, 1}}, 2),
        StateSet::poly({Vec{-1, -1}, Vec{1, -1}}, 2),
        StateSet::poly({Vec{-1, -1}, Vec{-1, 1}}, 2),
        StateSet::poly({Vec{1, -1}, Vec{1, 1}}, 2),
    });
}

} // namespace

TEST_CASE("negate") {
    StateSet f = StateSet::finite({Vec{1, 0}}, 2);
    CHECK(negate(f) == StateSet::finite({Vec{-1, 0}}, 2));
    StateSet l = StateSet::lin(vertical());
    CHECK(negate(l) == l);
    StateSet seg = StateSet::poly({Vec{-1, 0}, Vec{1, 0}}, 2);
    CHECK(negate(seg) == seg);
}

TEST_CASE("minkowski sum with a subspace") {
    StateSet pt = StateSet::finite({Vec{1, 0}}, 2);
    StateSet sum = minkowski_with_subspace(pt, vertical());
    CHECK(sum == StateSet::coset(Vec{1, 0}, vertical()));
    CHECK(member(sum, Vec{1, 7}));
    CHECK(!member(sum, Vec{2, 0}));

    StateSet seg = StateSet::poly({Vec{-1, 0}, Vec{1, 0}}, 2);
    StateSet strip = minkowski_with_subspace(seg, vertical());
    CHECK(member(strip, Vec{Rat(1, 2), Rat(100)}));
    CHECK(member(strip, Vec{-1, -3}));
    CHECK(!member(strip, Vec{2, 0}));

    CHECK(minkowski_with_subspace(seg, Subspace::zero(2)) == seg);
    CHECK(minkowski_with_subspace(StateSet::full_space(2), vertical()) ==
          StateSet::full_space(2));
}

TEST_CASE("difference body") {
    CHECK(difference_body(StateSet::full_space(2)) == StateSet::full_space(2));
    StateSet f = StateSet::finite({Vec{1, 0}, Vec{1, 1}}, 2);
    CHECK(difference_body(f) ==
          StateSet::finite({Vec{0, -1}, Vec{0, 0}, Vec{0, 1}}, 2));
    StateSet l = StateSet::lin(vertical());
    CHECK(difference_body(l) == l);
}

TEST_CASE("membership") {
    CHECK(member(StateSet::lin(vertical()), Vec{0, 1}));
    StateSet seg = StateSet::poly({Vec{-1, 0}, Vec{1, 0}}, 2);
    CHECK(!member(seg, Vec{1, 1}));
    CHECK(member(seg, Vec{0, 0}));
    CHECK_THROWS_AS(member(seg, Vec{0, 0, 0}), DimensionError);
}

TEST_CASE("set containment") {
    StateSet seg = StateSet::poly({Vec{-1, 0}, Vec{1, 0}}, 2);
    StateSet strip = minkowski_with_subspace(seg, vertical());
    StateSet edges = StateSet::make_union({
        StateSet::poly({Vec{-1, 1}, Vec{1, 1}}, 2),
        StateSet::poly({Vec{-1, -1}, Vec{-1, 1}}, 2),
        StateSet::poly({Vec{1, -1}, Vec{1, 1}}, 2),
    });
    CHECK(contains_set(strip, edges));
    CHECK(contains_set(strip, box_boundary()));

    StateSet pt = StateSet::finite({Vec{1, 0}}, 2);
    CHECK(contains_set(pt, pt));
    StateSet coset = StateSet::coset(Vec{1, 0}, vertical());
    CHECK(contains_set(coset, StateSet::finite({Vec{1, 5}, Vec{1, -3}}, 2)));
    CHECK(!contains_set(coset, StateSet::finite({Vec{2, 0}}, 2)));
}

TEST_CASE("set minus and coset intersection") {
    StateSet a = StateSet::finite({Vec{1, 0}, Vec{0, 1}}, 2);
    StateSet b = StateSet::finite({Vec{1, 0}}, 2);
    CHECK(set_minus_finite(a, b) == StateSet::finite({Vec{0, 1}}, 2));

    StateSet c = StateSet::coset(Vec{1, 0}, vertical());
    CHECK(coset_intersect(c, StateSet::finite({Vec{1, 1}, Vec{2, 2}}, 2)) ==
          StateSet::finite({Vec{1, 1}}, 2));
    CHECK(coset_intersect(c, StateSet::full_space(2)) == c);
}

TEST_CASE("negate is an involution") {
    std::mt19937 rng(21);
    std::vector<StateSet> samples{
        StateSet::full_space(2),
        StateSet::lin(vertical()),
        StateSet::coset(Vec{1, 2}, vertical()),
        box_boundary(),
    };
    for (int t = 0; t < 20; ++t) {
        std::vector<Vec> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(fixtures::rand_vec(rng, 2));
        samples.push_back(StateSet::finite(pts, 2));
        samples.push_back(StateSet::poly(pts, 2));
    }
    for (const auto& s : samples) CHECK(negate(negate(s)) == s);
}

TEST_CASE("union membership distributes over members") {
    std::mt19937 rng(22);
    StateSet u = box_boundary();
    for (int t = 0; t < 50; ++t) {
        Vec x = fixtures::rand_vec(rng, 2);
        bool any = false;
        for (const auto& m : u.members()) any = any || member(m, x);
        CHECK(member(u, x) == any);
    }
}

TEST_CASE("finite minkowski sum agrees with the brute-force oracle") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        std::vector<Vec> pts;
        for (int i = 0; i < 3; ++i) pts.push_back(fixtures::rand_vec(rng, 3));
        StateSet s = StateSet::finite(pts, 3);
        Subspace v = image(fixtures::rand_mat(rng, 3, 1));
        StateSet sum = minkowski_with_subspace(s, v);
        Vec x = fixtures::rand_vec(rng, 3);
        bool oracle = false;
        for (const auto& p : pts) oracle = oracle || v.contains(vec_sub(x, p));
        CHECK(member(sum, x) == oracle);
    }
}

TEST_CASE("difference bodies are symmetric and contain the origin") {
    std::mt19937 rng(24);
    for (int t = 0; t < 30; ++t) {
        std::vector<Vec> pts;
        for (int i = 0; i < 3; ++i) pts.push_back(fixtures::rand_vec(rng, 2));
        StateSet db = difference_body(StateSet::finite(pts, 2));
        CHECK(member(db, Vec{0, 0}));
        CHECK(negate(db) == db);

        StateSet pb = difference_body(StateSet::poly(pts, 2));
        CHECK(member(pb, Vec{0, 0}));
        CHECK(negate(pb) == pb);
    }
}

TEST_CASE("finite containment agrees with folding member") {
    std::mt19937 rng(25);
    StateSet strip =
        minkowski_with_subspace(StateSet::poly({Vec{-1, 0}, Vec{1, 0}}, 2), vertical());
    for (int t = 0; t < 40; ++t) {
        std::vector<Vec> pts;
        for (int i = 0; i < 3; ++i) pts.push_back(fixtures::rand_vec(rng, 2));
        StateSet b = StateSet::finite(pts, 2);
        bool oracle = true;
        for (const auto& p : pts) oracle = oracle && member(strip, p);
        CHECK(contains_set(strip, b) == oracle);
    }
}

TEST_CASE("poly construction drops interior vertices") {
    StateSet p = StateSet::poly({Vec{0, 0}, Vec{2, 0}, Vec{1, 0}}, 2);
    CHECK(p.vertices().size() == 2);
    StateSet q = StateSet::poly({Vec{0, 0}, Vec{2, 0}, Vec{0, 2}, Vec{Rat(1, 2), Rat(1, 2)}}, 2);
    CHECK(q.vertices().size() == 3);
}

TEST_CASE("unsupported combinations are reported, not mis-answered") {
    StateSet comp = StateSet::complement_of(vertical());
    CHECK(member(comp, Vec{1, 0}));
    CHECK(!member(comp, Vec{0, 2}));
    StateSet seg = StateSet::poly({Vec{-1, 0}, Vec{1, 0}}, 2);
    CHECK_THROWS_AS((void)contains_set(seg, comp), UnsupportedCombination);
}
