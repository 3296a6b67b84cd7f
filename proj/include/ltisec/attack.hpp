#pragma once

#include "ltisec/opacity.hpp"

namespace ltisec {

// Evidence that an attack is undetectable: the masking initial-state
// difference x0 and the attack sequence satisfy O_k x0 + F_k attack = 0.
struct AttackCertificate {
    Vec x0;
    InputSeq attack;
    std::size_t horizon;
};

// Is the attack indistinguishable from some attack-free trajectory when the
// system may start anywhere in x0_set? Decided via membership of F attack in
// O_k applied to the difference body of x0_set.
bool is_attack_undetectable(const LtiSystem& sys, const AttackChannel& chan,
                            const InputSeq& attack, const StateSet& x0_set);

// Nonzero undetectable attack at horizon k when V of the attacked system is
// nonzero (X0 = R^n semantics); nullopt when every attack is detectable.
std::optional<AttackCertificate> synthesize_undetectable_attack(const LtiSystem& sys,
                                                                const AttackChannel& chan,
                                                                std::size_t k);

// Relation of the two stacked channel ranges (column spaces).
SubspaceOrder channel_range_inclusion(const Mat& chan_a, const Mat& chan_b);

// Diagnostic: the WUS inclusion implied by the channel range relation must
// hold; a violation signals an implementation bug.
struct MonotonicityVerdict {
    Subspace v_sys;
    Subspace v_attacked;
    SubspaceOrder channel_order; // range[B~;D~] vs range[B;D]
    bool implication_held;
};
MonotonicityVerdict wus_monotonicity_check(const LtiSystem& sys, const AttackChannel& chan);

// Joint existence report: opaque sets exist iff V(sys) != 0, undetectable
// attacks exist iff V of the attacked system != 0, tied together by the
// channel range relation.
struct CoexistenceReport {
    Subspace v_sys;
    bool opaque_set_exists;
    std::optional<std::pair<Vec, Vec>> opaque_pair; // (x_s, x_ns)

    Subspace v_attacked;
    bool undetectable_attack_exists;
    std::optional<AttackCertificate> certificate;

    SubspaceOrder channel_relation;
};
CoexistenceReport coexistence_report(const LtiSystem& sys, const AttackChannel& chan);

// Effect of expanding the initial-state set from x01 to x02 on both the
// opaque set and the undetectable attack set at horizon k.
struct TradeoffReport {
    bool opacity_grows = false;
    std::optional<Vec> opacity_witness; // new opaque state in x02 \ x01

    bool attacks_grow = false;
    bool shortcut_square_full_rank = false; // decided by the square full-rank D~ rule
    std::optional<Vec> attack_mask;         // z with a fresh undetectable attack
    std::optional<InputSeq> new_attack;

    std::size_t horizon = 0;
};
TradeoffReport x0_expansion_tradeoff(const LtiSystem& sys, const AttackChannel& chan,
                                     const StateSet& x01, const StateSet& x02, std::size_t k);

} // namespace ltisec
