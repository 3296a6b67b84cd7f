#pragma once

#include "ltisec/state_set.hpp"
#include "ltisec/wus.hpp"

namespace ltisec {

// Constructive evidence that a secret state is indistinguishable from its
// partner: delta = x_s - x_ns lies in the WUS and `zeroing` drives delta's
// output to zero over horizon 2n-1, so U_ns = U_s - zeroing replays any
// secret trajectory from the partner.
struct OpacityWitness {
    Vec x_ns;
    Vec delta;
    InputSeq zeroing;
};

struct OpacityVerdict {
    bool opaque = false;
    std::optional<OpacityWitness> witness;
    std::optional<Vec> failing_state; // strong-opacity counterexample
};

// Is x_s opaque w.r.t. the single partner x_ns? Requires x_s != x_ns.
OpacityVerdict is_state_opaque(const LtiSystem& sys, const Vec& x_s, const Vec& x_ns);

// Every partner that renders x opaque lies in this coset x + V (x itself
// excluded by callers).
StateSet opaque_partner_coset(const LtiSystem& sys, const Vec& x);

// Some secret state has a partner in xns (difference in the WUS).
OpacityVerdict is_weakly_opaque(const LtiSystem& sys, const StateSet& xs, const StateSet& xns);

// Every secret state has a partner: xs inside xns (+) V.
OpacityVerdict is_strongly_opaque(const LtiSystem& sys, const StateSet& xs, const StateSet& xns);

// The maximal-cardinality strongly opaque secret set for X0 = R^n: everything
// except one representative per V-coset.
struct LargestOpaqueSet {
    StateSet secret;     // R^n minus V-perp
    StateSet non_secret; // V-perp
};
LargestOpaqueSet largest_opaque_set(const LtiSystem& sys);

enum class SubspaceOrder { Equal, StrictSubset, StrictSuperset, Incomparable };

struct CapacityComparison {
    SubspaceOrder order; // relation of V(sys1) to V(sys2)
    Subspace v1;
    Subspace v2;
    // true iff sys2 can host a strictly more opaque set than any in sys1
    bool second_strictly_more_opaque;
};
CapacityComparison opacity_capacity_compare(const LtiSystem& sys1, const LtiSystem& sys2);

// Constructive one-step extension of a finite strongly opaque pair: relabels
// one non-secret state as secret when its coset retains a partner. Returns
// extended = false when no relabeling preserves strong opacity.
struct ExtensionResult {
    bool extended = false;
    StateSet xs2;
    StateSet xns2;
};
ExtensionResult extend_opaque_set(const LtiSystem& sys2, const StateSet& xs1,
                                  const StateSet& xns1);

} // namespace ltisec
