#include "ltisec/opacity.hpp"

#include <algorithm>

namespace ltisec {

namespace {

void check_pair_preconditions(const StateSet& xs, const StateSet& xns) {
    using K = StateSet::Kind;
    if (xs.kind() == K::Finite && xns.kind() == K::Finite) {
        if (xs.is_empty() || xns.is_empty())
            throw std::invalid_argument("secret and non-secret sets must be nonempty");
        for (const auto& p : xs.points())
            if (member(xns, p))
                throw std::invalid_argument("secret and non-secret sets must be disjoint");
    }
}

} // namespace

OpacityVerdict is_state_opaque(const LtiSystem& sys, const Vec& x_s, const Vec& x_ns) {
    if (x_s == x_ns) throw std::invalid_argument("is_state_opaque requires distinct states");
    Vec delta = vec_sub(x_s, x_ns);
    Subspace v = wus_kernel_method(sys);
    OpacityVerdict verdict;
    if (!v.contains(delta)) {
        verdict.opaque = false;
        return verdict;
    }
    std::size_t horizon = 2 * sys.state_dim() - 1;
    auto zeroing = zeroing_input(sys, delta, horizon);
    if (!zeroing)
        throw std::logic_error("WUS member without zeroing input; internal invariant broken");
    verdict.opaque = true;
    verdict.witness = OpacityWitness{x_ns, std::move(delta), std::move(*zeroing)};
    return verdict;
}

StateSet opaque_partner_coset(const LtiSystem& sys, const Vec& x) {
    return StateSet::coset(x, wus_kernel_method(sys));
}

OpacityVerdict is_weakly_opaque(const LtiSystem& sys, const StateSet& xs, const StateSet& xns) {
    check_pair_preconditions(xs, xns);
    Subspace v = wus_kernel_method(sys);
    OpacityVerdict verdict;

    if (xs.kind() == StateSet::Kind::Finite && xns.kind() == StateSet::Kind::Finite) {
        for (const auto& s : xs.points())
            for (const auto& ns : xns.points()) {
                if (s == ns) continue;
                if (v.contains(vec_sub(s, ns))) {
                    verdict.opaque = true;
                    std::size_t horizon = 2 * sys.state_dim() - 1;
                    Vec delta = vec_sub(s, ns);
                    auto zeroing = zeroing_input(sys, delta, horizon);
                    verdict.witness = OpacityWitness{ns, std::move(delta), std::move(*zeroing)};
                    return verdict;
                }
            }
        verdict.opaque = false;
        return verdict;
    }

    // (Xs (+) -Xns) meets V  <=>  the quotient images of Xs and Xns intersect.
    verdict.opaque = sets_intersect(quotient_image(xs, v), quotient_image(xns, v));
    return verdict;
}

OpacityVerdict is_strongly_opaque(const LtiSystem& sys, const StateSet& xs, const StateSet& xns) {
    check_pair_preconditions(xs, xns);
    Subspace v = wus_kernel_method(sys);
    OpacityVerdict verdict;
    StateSet reach = minkowski_with_subspace(xns, v);
    verdict.opaque = contains_set(reach, xs);
    if (!verdict.opaque && xs.kind() == StateSet::Kind::Finite) {
        for (const auto& p : xs.points())
            if (!member(reach, p)) {
                verdict.failing_state = p;
                break;
            }
    }
    return verdict;
}

LargestOpaqueSet largest_opaque_set(const LtiSystem& sys) {
    Subspace vperp = wus_complement(sys);
    return {StateSet::complement_of(vperp), StateSet::lin(vperp)};
}

CapacityComparison opacity_capacity_compare(const LtiSystem& sys1, const LtiSystem& sys2) {
    if (sys1.state_dim() != sys2.state_dim())
        throw DimensionError("systems must share the state dimension");
    Subspace v1 = wus_kernel_method(sys1);
    Subspace v2 = wus_kernel_method(sys2);
    bool le = subspace_leq(v1, v2);
    bool ge = subspace_leq(v2, v1);
    SubspaceOrder order = le && ge   ? SubspaceOrder::Equal
                          : le       ? SubspaceOrder::StrictSubset
                          : ge       ? SubspaceOrder::StrictSuperset
                                     : SubspaceOrder::Incomparable;
    return {order, std::move(v1), std::move(v2), order == SubspaceOrder::StrictSubset};
}

ExtensionResult extend_opaque_set(const LtiSystem& sys2, const StateSet& xs1,
                                  const StateSet& xns1) {
    using K = StateSet::Kind;
    if (xs1.kind() != K::Finite || xns1.kind() != K::Finite)
        throw UnsupportedCombination("extend_opaque_set expects finite sets");
    if (xns1.is_empty()) throw std::invalid_argument("non-secret set must be nonempty");
    if (!xs1.is_empty() && !is_strongly_opaque(sys2, xs1, xns1).opaque)
        throw std::invalid_argument("input pair is not strongly opaque under the target system");

    Subspace v2 = wus_kernel_method(sys2);
    std::vector<Vec> all = xs1.points();
    all.insert(all.end(), xns1.points().begin(), xns1.points().end());
    StateSet pool = StateSet::finite(all, xs1.ambient_dim());

    // Points are already in lexicographic order; the first verified
    // relabeling wins.
    for (const auto& x : xns1.points()) {
        StateSet coset_hits = coset_intersect(StateSet::coset(x, v2), pool);
        bool has_partner = false;
        for (const auto& h : coset_hits.points())
            if (h != x) { has_partner = true; break; }
        if (!has_partner) continue;

        std::vector<Vec> xs2 = xs1.points();
        xs2.push_back(x);
        std::vector<Vec> xns2;
        for (const auto& p : xns1.points())
            if (p != x) xns2.push_back(p);
        if (xns2.empty()) continue;
        StateSet cand_s = StateSet::finite(std::move(xs2), xs1.ambient_dim());
        StateSet cand_ns = StateSet::finite(std::move(xns2), xs1.ambient_dim());
        if (is_strongly_opaque(sys2, cand_s, cand_ns).opaque)
            return {true, std::move(cand_s), std::move(cand_ns)};
    }
    return {false, StateSet::finite({}, xs1.ambient_dim()), StateSet::finite({}, xs1.ambient_dim())};
}

} // namespace ltisec
