// Command-line front end: load a model file, run an analysis, print a
// human-readable or JSON report.
//
// Exit codes: 0 = success / affirmative verdict, 1 = analysis answered
// "no/absent", 2 = input error, 3 = internal invariant failure.

#include "ltisec/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace ltisec;

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Vec parse_inline_vec(const std::string& text) {
    Vec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
    if (v.empty()) throw InputError("empty vector literal");
    return v;
}

std::string vec_to_text(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    return out + "]";
}

std::string subspace_to_text(const Subspace& s) {
    if (s.is_zero()) return "{0}";
    if (s.is_full()) return "R^" + std::to_string(s.ambient_dim());
    std::string out = "span{";
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (j) out += ", ";
        out += vec_to_text(s.basis().col(j));
    }
    return out + "}";
}

struct LoadedModel {
    ParsedModel parsed;
    std::string digest;
};

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open model file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return LoadedModel{parse_model_json(j), fnv1a64_hex(bytes)};
}

const StateSet& named_set(const ParsedModel& m, const std::string& name) {
    auto it = m.sets.find(name);
    if (it == m.sets.end()) throw InputError("model defines no set named '" + name + "'");
    return it->second;
}

StateSet resolve_set(const ParsedModel& m, const std::string& ref) {
    if (ref == "fullspace") return StateSet::full_space(m.system.state_dim());
    if (!ref.empty() && ref.front() == '{') {
        try {
            return state_set_from_json(json::parse(ref));
        } catch (const json::exception& e) {
            throw InputError(std::string("malformed inline set: ") + e.what());
        }
    }
    return named_set(m, ref);
}

json report_shell(const std::string& command, const LoadedModel& model) {
    return json{{"tool_version", kToolVersion},
                {"command", command},
                {"input_digest", model.digest}};
}

void emit(const json& report, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

std::string order_name(SubspaceOrder o) {
    switch (o) {
        case SubspaceOrder::Equal: return "equal";
        case SubspaceOrder::StrictSubset: return "strict-subset";
        case SubspaceOrder::StrictSuperset: return "strict-superset";
        case SubspaceOrder::Incomparable: return "incomparable";
    }
    return "?";
}

json seq_to_json(const StackedSeq& s) {
    return json{{"horizon", s.horizon}, {"width", s.width}, {"stacked", vec_to_json(s.stacked)}};
}

int cmd_wus(const LoadedModel& m, bool as_json) {
    Subspace v = wus_kernel_method(m.parsed.system);
    if (wus_recursive(m.parsed.system) != v)
        throw std::logic_error("the two subspace computations disagree");
    json rep = report_shell("wus", m);
    rep["dim"] = v.dim();
    rep["basis"] = subspace_to_json(v);
    rep["complement"] = subspace_to_json(orth_complement(v));
    std::string human = "weakly unobservable subspace: " + subspace_to_text(v) + "\n" +
                        "orthogonal complement: " + subspace_to_text(orth_complement(v)) + "\n";
    emit(rep, as_json, human);
    return 0;
}

int cmd_opacity_state(const LoadedModel& m, const std::string& xs, const std::string& xns,
                      bool as_json) {
    OpacityVerdict v = is_state_opaque(m.parsed.system, parse_inline_vec(xs),
                                       parse_inline_vec(xns));
    json rep = report_shell("opacity-state", m);
    rep["opaque"] = v.opaque;
    std::string human = std::string("opaque: ") + (v.opaque ? "yes" : "no") + "\n";
    if (v.witness) {
        rep["witness"] = json{{"x_ns", vec_to_json(v.witness->x_ns)},
                              {"delta", vec_to_json(v.witness->delta)},
                              {"zeroing", seq_to_json(v.witness->zeroing)}};
        human += "delta: " + vec_to_text(v.witness->delta) + "\n";
        human += "zeroing input: " + vec_to_text(v.witness->zeroing.stacked) + "\n";
    }
    emit(rep, as_json, human);
    return v.opaque ? 0 : 1;
}

int cmd_opacity_set(const LoadedModel& m, const std::string& xs_ref, const std::string& xns_ref,
                    const std::string& mode, bool as_json) {
    StateSet xs = resolve_set(m.parsed, xs_ref);
    StateSet xns = resolve_set(m.parsed, xns_ref);
    OpacityVerdict v = mode == "weak" ? is_weakly_opaque(m.parsed.system, xs, xns)
                                      : is_strongly_opaque(m.parsed.system, xs, xns);
    json rep = report_shell("opacity-set", m);
    rep["mode"] = mode;
    rep["opaque"] = v.opaque;
    std::string human = mode + " opacity: " + (v.opaque ? "yes" : "no") + "\n";
    if (v.failing_state) {
        rep["failing_state"] = vec_to_json(*v.failing_state);
        human += "failing secret state: " + vec_to_text(*v.failing_state) + "\n";
    }
    emit(rep, as_json, human);
    return v.opaque ? 0 : 1;
}

int cmd_largest_opaque(const LoadedModel& m, bool as_json) {
    LargestOpaqueSet l = largest_opaque_set(m.parsed.system);
    json rep = report_shell("largest-opaque", m);
    rep["secret"] = state_set_to_json(l.secret);
    rep["non_secret"] = state_set_to_json(l.non_secret);
    Subspace vperp = wus_complement(m.parsed.system);
    std::string human = "largest secret set: complement of " + subspace_to_text(vperp) + "\n" +
                        "non-secret set: " + subspace_to_text(vperp) + "\n";
    emit(rep, as_json, human);
    bool nonempty = !wus_kernel_method(m.parsed.system).is_zero();
    return nonempty ? 0 : 1;
}

int cmd_attack_synth(const LoadedModel& m, std::size_t horizon, bool horizon_set,
                     bool as_json) {
    std::size_t k = horizon_set ? horizon : 2 * m.parsed.system.state_dim() - 1;
    auto cert = synthesize_undetectable_attack(m.parsed.system, m.parsed.channel, k);
    json rep = report_shell("attack-synth", m);
    rep["horizon"] = k;
    rep["undetectable_attack_exists"] = cert.has_value();
    std::string human;
    if (cert) {
        // Re-verify before reporting; a bad certificate is an internal bug.
        Vec res = vec_add(observability_matrix(m.parsed.system, k) * cert->x0,
                          forced_response_matrix(m.parsed.system, m.parsed.channel, k) *
                              cert->attack.stacked);
        if (!vec_is_zero(res)) throw std::logic_error("certificate residual is nonzero");
        rep["certificate"] =
            json{{"x0", vec_to_json(cert->x0)}, {"attack", seq_to_json(cert->attack)}};
        human = "undetectable attack found\nmask x0: " + vec_to_text(cert->x0) +
                "\nattack: " + vec_to_text(cert->attack.stacked) + "\n";
    } else {
        human = "every attack through this channel is detectable\n";
    }
    emit(rep, as_json, human);
    return cert ? 0 : 1;
}

int cmd_attack_check(const LoadedModel& m, const std::string& attack_text,
                     const std::string& x0_ref, bool as_json) {
    Vec raw = parse_inline_vec(attack_text);
    std::size_t q = m.parsed.channel.input_dim();
    if (raw.size() % q != 0)
        throw InputError("attack length must be a multiple of the channel width");
    InputSeq attack = InputSeq::from_vec(std::move(raw), q);
    StateSet x0 = resolve_set(m.parsed, x0_ref);
    bool undet = is_attack_undetectable(m.parsed.system, m.parsed.channel, attack, x0);
    json rep = report_shell("attack-check", m);
    rep["horizon"] = attack.horizon;
    rep["undetectable"] = undet;
    emit(rep, as_json, std::string("undetectable: ") + (undet ? "yes" : "no") + "\n");
    return undet ? 0 : 1;
}

int cmd_tradeoff(const LoadedModel& m, const std::string& x01_ref, const std::string& x02_ref,
                 std::size_t horizon, bool as_json) {
    StateSet x01 = resolve_set(m.parsed, x01_ref);
    StateSet x02 = resolve_set(m.parsed, x02_ref);
    TradeoffReport r = x0_expansion_tradeoff(m.parsed.system, m.parsed.channel, x01, x02,
                                             horizon);
    json rep = report_shell("tradeoff", m);
    rep["horizon"] = r.horizon;
    rep["opacity_grows"] = r.opacity_grows;
    rep["attacks_grow"] = r.attacks_grow;
    rep["shortcut_square_full_rank"] = r.shortcut_square_full_rank;
    std::string human = std::string("opaque set grows: ") + (r.opacity_grows ? "yes" : "no") +
                        "\nundetectable attack set grows: " + (r.attacks_grow ? "yes" : "no") +
                        "\n";
    if (r.opacity_witness) {
        rep["opacity_witness"] = vec_to_json(*r.opacity_witness);
        human += "new opaque state: " + vec_to_text(*r.opacity_witness) + "\n";
    }
    if (r.attack_mask) rep["attack_mask"] = vec_to_json(*r.attack_mask);
    if (r.new_attack) {
        rep["new_attack"] = seq_to_json(*r.new_attack);
        human += "fresh undetectable attack: " + vec_to_text(r.new_attack->stacked) + "\n";
    }
    emit(rep, as_json, human);
    return (r.opacity_grows || r.attacks_grow) ? 0 : 1;
}

int cmd_simulate(const LoadedModel& m, const std::string& x0_text, const std::string& u_text,
                 const std::string& attack_text, bool as_json) {
    Vec x0 = parse_inline_vec(x0_text);
    Vec u_raw = parse_inline_vec(u_text);
    std::size_t p = m.parsed.system.input_dim();
    if (u_raw.size() % p != 0) throw InputError("input length must be a multiple of p");
    InputSeq u = InputSeq::from_vec(std::move(u_raw), p);
    OutputSeq y = simulate(m.parsed.system, x0, u);
    if (!attack_text.empty()) {
        std::size_t q = m.parsed.channel.input_dim();
        Vec a_raw = parse_inline_vec(attack_text);
        if (a_raw.size() % q != 0)
            throw InputError("attack length must be a multiple of the channel width");
        InputSeq att = InputSeq::from_vec(std::move(a_raw), q);
        if (att.horizon != u.horizon)
            throw InputError("attack and input horizons must match");
        OutputSeq extra = simulate_attacked(m.parsed.system, m.parsed.channel,
                                            Vec(x0.size(), Rat(0)), att);
        y.stacked = vec_add(y.stacked, extra.stacked);
    }
    json rep = report_shell("simulate", m);
    rep["output"] = seq_to_json(y);
    emit(rep, as_json, "outputs: " + vec_to_text(y.stacked) + "\n");
    return 0;
}

// Built-in golden suite over the embedded benchmark models.
int cmd_golden_suite(bool as_json) {
    auto two_state = [] {
        return LtiSystem(Mat{{1, 1}, {0, 1}}, Mat{{1, 1}, {1, 0}}, Mat{{1, 0}});
    };
    auto feedthrough = [] {
        return LtiSystem(Mat{{1, 1}, {0, 1}}, Mat{{1, 1}, {1, 0}}, Mat{{1, 0}}, Mat{{1, 0}});
    };
    auto full_output = [] {
        return LtiSystem(Mat{{1, 1}, {0, 1}}, Mat{{1, 1}, {1, 0}}, Mat::identity(2));
    };
    auto vehicle = [] {
        return LtiSystem(Mat{{1, 1}, {0, 1}}, Mat{{Rat(1, 2)}, {Rat(1)}}, Mat{{1, 0}});
    };

    std::vector<std::pair<std::string, bool>> items;
    auto add = [&](const std::string& name, bool ok) { items.emplace_back(name, ok); };

    add("two-state V = span{[0,1]}",
        wus_kernel_method(two_state()) == Subspace::span_of({Vec{0, 1}}, 2));
    add("feedthrough variant V = R^2", wus_kernel_method(feedthrough()).is_full());
    add("full-output variant V = 0", wus_kernel_method(full_output()).is_zero());
    add("forced response matrix over two steps",
        forced_response_matrix(two_state(), 2) ==
            Mat{{0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {2, 1, 1, 1, 0, 0}});
    add("shared output sequence [1,4,8]",
        simulate(two_state(), Vec{1, 1}, InputSeq::from_vec(Vec{1, 1, 1, 1, 1, 1}, 2))
                .stacked == Vec{1, 4, 8} &&
        simulate(two_state(), Vec{1, 0}, InputSeq::from_vec(Vec{1, 2, 1, 2, 1, 2}, 2))
                .stacked == Vec{1, 4, 8});
    add("state pair ([1,1],[1,0]) opaque",
        is_state_opaque(two_state(), Vec{1, 1}, Vec{1, 0}).opaque);
    add("full-output variant admits no opaque pair and no certificate",
        !is_state_opaque(full_output(), Vec{1, 1}, Vec{1, 0}).opaque &&
            !synthesize_undetectable_attack(full_output(),
                                            AttackChannel(full_output().B(),
                                                          full_output().D()),
                                            3)
                 .has_value());
    {
        LtiSystem sys = two_state();
        AttackChannel chan(sys.B(), sys.D());
        InputSeq att = InputSeq::from_vec(Vec{0, -1, 0, -1, 0, -1}, 2);
        add("attack [0,-1,0,-1,0,-1] undetectable at horizon 2",
            is_attack_undetectable(sys, chan, att, StateSet::full_space(2)));
    }
    {
        LtiSystem veh = vehicle();
        AttackChannel chan(veh.B(), veh.D());
        InputSeq us = InputSeq::from_vec(Vec{2, 2, 2, 2}, 1);
        InputSeq att = InputSeq::from_vec(Vec{2, -2, 2, 0}, 1);
        InputSeq total = InputSeq::from_vec(vec_add(us.stacked, att.stacked), 1);
        add("vehicle attack [2,-2,2,0] undetectable at horizon 3",
            is_attack_undetectable(veh, chan, att, StateSet::full_space(2)));
        add("vehicle trajectories [1,2,5,10] and [1,3,7,13]",
            simulate(veh, Vec{1, 0}, us).stacked == Vec{1, 2, 5, 10} &&
                simulate(veh, Vec{1, 0}, total).stacked == Vec{1, 3, 7, 13});
    }
    add("largest non-secret set is span{[1,0]}",
        wus_complement(two_state()) == Subspace::span_of({Vec{1, 0}}, 2));

    bool all_ok = true;
    json rep{{"tool_version", kToolVersion}, {"command", "golden-suite"}};
    json jitems = json::array();
    std::string human;
    for (const auto& [name, ok] : items) {
        all_ok = all_ok && ok;
        jitems.push_back(json{{"name", name}, {"pass", ok}});
        human += std::string(ok ? "PASS  " : "FAIL  ") + name + "\n";
    }
    rep["items"] = jitems;
    rep["all_pass"] = all_ok;
    emit(rep, as_json, human);
    return all_ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact opacity and attack-detectability analysis for discrete-time "
                 "linear systems"};
    app.require_subcommand(1);

    std::string model_path, xs, xns, mode = "strong", attack, x0_ref = "fullspace";
    std::string x01_ref, x02_ref, x0_text, u_text, attack_text;
    std::size_t horizon = 0;
    bool as_json = false;

    auto add_common = [&](CLI::App* sub, bool needs_model = true) {
        if (needs_model) sub->add_option("--model", model_path, "model JSON file")->required();
        sub->add_flag("--json", as_json, "machine-readable JSON report");
    };

    auto* wus = app.add_subcommand("wus", "compute the weakly unobservable subspace");
    add_common(wus);

    auto* ops = app.add_subcommand("opacity-state", "decide opacity of a state pair");
    add_common(ops);
    ops->add_option("--xs", xs, "secret state, e.g. 1,1")->required();
    ops->add_option("--xns", xns, "non-secret state, e.g. 1,0")->required();

    auto* opset = app.add_subcommand("opacity-set", "decide weak/strong set opacity");
    add_common(opset);
    opset->add_option("--secret", x01_ref, "secret set (name, inline JSON, or fullspace)")
        ->required();
    opset->add_option("--non-secret", x02_ref, "non-secret set")->required();
    opset->add_option("--mode", mode, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));

    auto* largest = app.add_subcommand("largest-opaque", "largest opaque secret set");
    add_common(largest);

    auto* synth = app.add_subcommand("attack-synth", "synthesize an undetectable attack");
    add_common(synth);
    auto* hopt = synth->add_option("--horizon", horizon, "attack horizon (default 2n-1)");

    auto* check = app.add_subcommand("attack-check", "check a given attack sequence");
    add_common(check);
    check->add_option("--attack", attack, "stacked attack sequence, e.g. 0,-1,0,-1")->required();
    check->add_option("--x0-set", x0_ref, "initial-state set (default fullspace)");

    auto* trade = app.add_subcommand("tradeoff", "initial-set expansion trade-off");
    add_common(trade);
    trade->add_option("--x01", x01_ref, "smaller initial-state set")->required();
    trade->add_option("--x02", x02_ref, "larger initial-state set")->required();
    trade->add_option("--horizon", horizon, "horizon")->required();

    auto* sim = app.add_subcommand("simulate", "exact trajectory simulation");
    add_common(sim);
    sim->add_option("--x0", x0_text, "initial state, e.g. 1,0")->required();
    sim->add_option("--u", u_text, "stacked input sequence")->required();
    sim->add_option("--attack", attack_text, "optional stacked attack sequence");

    auto* golden = app.add_subcommand("golden-suite", "run the built-in benchmark checks");
    add_common(golden, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (golden->parsed()) return cmd_golden_suite(as_json);
        LoadedModel m = load_model(model_path);
        if (wus->parsed()) return cmd_wus(m, as_json);
        if (ops->parsed()) return cmd_opacity_state(m, xs, xns, as_json);
        if (opset->parsed()) return cmd_opacity_set(m, x01_ref, x02_ref, mode, as_json);
        if (largest->parsed()) return cmd_largest_opaque(m, as_json);
        if (synth->parsed()) return cmd_attack_synth(m, horizon, hopt->count() > 0, as_json);
        if (check->parsed()) return cmd_attack_check(m, attack, x0_ref, as_json);
        if (trade->parsed()) return cmd_tradeoff(m, x01_ref, x02_ref, horizon, as_json);
        if (sim->parsed()) return cmd_simulate(m, x0_text, u_text, attack_text, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
