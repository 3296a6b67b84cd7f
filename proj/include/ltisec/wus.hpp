#pragma once

#include "ltisec/lti.hpp"
#include "ltisec/subspace.hpp"

#include <optional>

namespace ltisec {

// Weakly unobservable subspace V: initial states from which some input keeps
// the whole output sequence at zero. Two independent computations are
// provided; they must agree in canonical form.

// Projection onto the state block of ker[O_{n-1} | F_{n-1}].
Subspace wus_kernel_method(const LtiSystem& sys);

// Fixed point of the non-increasing chain
//   V_0 = R^n,   V_{k+1} = { x : [A;C] x  in  (V_k x 0) + range[B;D] }.
Subspace wus_recursive(const LtiSystem& sys);

// Orthogonal complement of the WUS.
Subspace wus_complement(const LtiSystem& sys);

// An input with O_k x0 + F_k U = 0, when one exists. Free variables are zero,
// so the witness is deterministic.
std::optional<InputSeq> zeroing_input(const LtiSystem& sys, const Vec& x0, std::size_t k);

} // namespace ltisec
