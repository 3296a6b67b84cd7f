#include "ltisec/attack.hpp"

#include <algorithm>

namespace ltisec {

bool is_attack_undetectable(const LtiSystem& sys, const AttackChannel& chan,
                            const InputSeq& attack, const StateSet& x0_set) {
    if (x0_set.ambient_dim() != sys.state_dim())
        throw DimensionError("initial-state set ambient mismatch");
    if (attack.width != chan.input_dim()) throw DimensionError("attack width mismatch");
    const std::size_t k = attack.horizon;
    Vec y = forced_response_matrix(sys, chan, k) * attack.stacked;
    Mat obs = observability_matrix(sys, k);
    return member(linear_image(obs, difference_body(x0_set)), y);
}

std::optional<AttackCertificate> synthesize_undetectable_attack(const LtiSystem& sys,
                                                                const AttackChannel& chan,
                                                                std::size_t k) {
    LtiSystem attacked = chan.attacked_system(sys);
    Subspace v = wus_kernel_method(attacked);
    if (v.is_zero()) return std::nullopt;
    Vec x0 = v.basis().col(0);
    auto attack = zeroing_input(attacked, x0, k);
    if (!attack)
        throw std::logic_error("WUS member without zeroing attack; internal invariant broken");
    return AttackCertificate{std::move(x0), std::move(*attack), k};
}

SubspaceOrder channel_range_inclusion(const Mat& chan_a, const Mat& chan_b) {
    if (chan_a.rows() != chan_b.rows())
        throw DimensionError("stacked channel height mismatch");
    Subspace ra = image(chan_a);
    Subspace rb = image(chan_b);
    bool le = subspace_leq(ra, rb);
    bool ge = subspace_leq(rb, ra);
    return le && ge ? SubspaceOrder::Equal
           : le     ? SubspaceOrder::StrictSubset
           : ge     ? SubspaceOrder::StrictSuperset
                    : SubspaceOrder::Incomparable;
}

MonotonicityVerdict wus_monotonicity_check(const LtiSystem& sys, const AttackChannel& chan) {
    Subspace v_sys = wus_kernel_method(sys);
    Subspace v_att = wus_kernel_method(chan.attacked_system(sys));
    SubspaceOrder order = channel_range_inclusion(vstack(chan.B(), chan.D()),
                                                  vstack(sys.B(), sys.D()));
    bool held = true;
    if (order == SubspaceOrder::Equal)
        held = (v_sys == v_att);
    else if (order == SubspaceOrder::StrictSuperset) // channel range contains (B,D) range
        held = subspace_leq(v_sys, v_att);
    else if (order == SubspaceOrder::StrictSubset)
        held = subspace_leq(v_att, v_sys);
    return {std::move(v_sys), std::move(v_att), order, held};
}

CoexistenceReport coexistence_report(const LtiSystem& sys, const AttackChannel& chan) {
    CoexistenceReport report{Subspace::zero(sys.state_dim()),
                             false,
                             std::nullopt,
                             Subspace::zero(sys.state_dim()),
                             false,
                             std::nullopt,
                             SubspaceOrder::Equal};
    report.v_sys = wus_kernel_method(sys);
    report.opaque_set_exists = !report.v_sys.is_zero();
    if (report.opaque_set_exists) {
        Vec x_s = report.v_sys.basis().col(0);
        Vec x_ns(sys.state_dim(), Rat(0));
        report.opaque_pair = {std::move(x_s), std::move(x_ns)};
    }
    std::size_t horizon = 2 * sys.state_dim() - 1;
    report.certificate = synthesize_undetectable_attack(sys, chan, horizon);
    report.v_attacked = wus_kernel_method(chan.attacked_system(sys));
    report.undetectable_attack_exists = report.certificate.has_value();
    report.channel_relation =
        channel_range_inclusion(vstack(chan.B(), chan.D()), vstack(sys.B(), sys.D()));
    return report;
}

TradeoffReport x0_expansion_tradeoff(const LtiSystem& sys, const AttackChannel& chan,
                                     const StateSet& x01, const StateSet& x02, std::size_t k) {
    using K = StateSet::Kind;
    TradeoffReport report;
    report.horizon = k;

    if (x01.kind() == K::Finite && x02.kind() == K::Finite) {
        if (!contains_set(x02, x01) || x01 == x02)
            throw std::invalid_argument("x01 must be a strict subset of x02");
    } else {
        throw UnsupportedCombination("x0_expansion_tradeoff needs finite initial-state sets");
    }

    // Opacity side (Theorem on X0 expansion, statement 1): some new state's
    // V-coset meets x02 beyond the state itself.
    Subspace v = wus_kernel_method(sys);
    StateSet fresh = set_minus_finite(x02, x01);
    for (const auto& x : fresh.points()) {
        StateSet hits = coset_intersect(StateSet::coset(x, v), x02);
        for (const auto& h : hits.points())
            if (h != x) {
                report.opacity_grows = true;
                report.opacity_witness = x;
                break;
            }
        if (report.opacity_grows) break;
    }

    // Attack side (statement 2).
    const Mat& d = chan.D();
    if (d.rows() == d.cols() && rank(d) == d.rows()) {
        report.attacks_grow = true;
        report.shortcut_square_full_rank = true;
        return report;
    }

    Mat obs = observability_matrix(sys, k);
    Mat f = forced_response_matrix(sys, chan, k);
    StateSet db1 = difference_body(x01);
    StateSet db2 = difference_body(x02);
    std::vector<Vec> images1;
    for (const auto& z : db1.points()) images1.push_back(obs * z);
    for (const auto& z : db2.points()) {
        Vec y = vec_neg(obs * z);
        if (std::find(images1.begin(), images1.end(), vec_neg(y)) != images1.end()) continue;
        auto u = solve(f, y);
        if (!u) continue;
        // A fresh output target reachable through the channel: the solving
        // attack lies outside the x01-undetectable set.
        report.attacks_grow = true;
        report.attack_mask = z;
        report.new_attack = InputSeq::from_vec(std::move(*u), chan.input_dim());
        break;
    }
    return report;
}

} // namespace ltisec
