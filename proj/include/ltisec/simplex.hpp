#pragma once

#include "ltisec/matrix.hpp"

namespace ltisec {

// Exact linear programming over the rationals:
//   minimize c^T x  subject to  A x = b,  x >= 0.
// Two-phase tableau simplex with Bland's rule, so termination is guaranteed
// and every pivot is exact.

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rat objective; // meaningful when Optimal
    Vec x;         // meaningful when Optimal
};

LpResult lp_minimize(const Mat& A, const Vec& b, const Vec& c);

// Phase-1 feasibility of {x >= 0 : A x = b}.
bool lp_feasible(const Mat& A, const Vec& b);

// Convex-combination membership: is x in conv(points)?
bool in_convex_hull(const Vec& x, const std::vector<Vec>& points);

} // namespace ltisec
