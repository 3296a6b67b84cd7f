#include "ltisec/simplex.hpp"

namespace ltisec {

namespace {

struct Tableau {
    // rows x (ncols + 1); last column is the rhs, kept nonnegative.
    std::vector<Vec> t;
    std::vector<std::size_t> basis; // basis[i] = column basic in row i
    std::size_t ncols;

    Rat& at(std::size_t i, std::size_t j) { return t[i][j]; }
    Rat& rhs(std::size_t i) { return t[i][ncols]; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rat inv = Rat(1) / t[pr][pc];
        for (auto& v : t[pr]) v *= inv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            Rat f = t[i][pc];
            for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    }

    // Minimizes cost over columns [0, limit). Returns false on unboundedness.
    bool run(const Vec& cost, std::size_t limit) {
        for (;;) {
            // reduced costs r_j = cost_j - sum_i cost_basis[i] * t[i][j]
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                bool basic = false;
                for (auto b : basis)
                    if (b == j) { basic = true; break; }
                if (basic) continue;
                Rat r = cost[j];
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (t[i][j] != 0 && cost[basis[i]] != 0) r -= cost[basis[i]] * t[i][j];
                if (r < 0) { enter = j; break; } // Bland: first improving column
            }
            if (enter == limit) return true;

            std::size_t leave = t.size();
            Rat best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = rhs(i) / t[i][enter];
                if (leave == t.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t.size()) return false;
            pivot(leave, enter);
        }
    }

    Rat objective(const Vec& cost) const {
        Rat z = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (cost[basis[i]] != 0) z += cost[basis[i]] * t[i][ncols];
        return z;
    }
};

} // namespace

LpResult lp_minimize(const Mat& A, const Vec& b, const Vec& c) {
    if (b.size() != A.rows() || c.size() != A.cols())
        throw DimensionError("LP shape mismatch");
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();

    Tableau tab;
    tab.ncols = n + m;
    tab.t.assign(m, Vec(n + m + 1, Rat(0)));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rat sgn = (b[i] < 0) ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sgn * A(i, j);
        tab.t[i][n + i] = 1;
        tab.t[i][n + m] = sgn * b[i];
        tab.basis[i] = n + i;
    }

    Vec phase1(n + m, Rat(0));
    for (std::size_t j = n; j < n + m; ++j) phase1[j] = 1;
    tab.run(phase1, n + m); // phase 1 cannot be unbounded (cost bounded below by 0)
    if (tab.objective(phase1) != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive remaining artificial variables out of the basis.
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
        if (tab.basis[i] < n) continue;
        std::size_t pc = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.t[i][j] != 0) { pc = j; break; }
        if (pc < n) tab.pivot(i, pc);
        // otherwise the row is redundant; it stays with rhs 0 and never pivots
    }

    Vec phase2(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    if (!tab.run(phase2, n)) return {LpStatus::Unbounded, Rat(0), {}};

    Vec x(n, Rat(0));
    for (std::size_t i = 0; i < tab.t.size(); ++i)
        if (tab.basis[i] < n) x[tab.basis[i]] = tab.t[i][tab.ncols];
    return {LpStatus::Optimal, tab.objective(phase2), x};
}

bool lp_feasible(const Mat& A, const Vec& b) {
    Vec c(A.cols(), Rat(0));
    return lp_minimize(A, b, c).status == LpStatus::Optimal;
}

bool in_convex_hull(const Vec& x, const std::vector<Vec>& points) {
    if (points.empty()) return false;
    const std::size_t d = x.size();
    for (const auto& p : points)
        if (p.size() != d) throw DimensionError("hull point dimension mismatch");
    // lambda >= 0, sum lambda = 1, sum lambda_i p_i = x
    Mat A(d + 1, points.size());
    Vec b(d + 1, Rat(0));
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) A(i, k) = points[k][i];
        A(d, k) = 1;
    }
    for (std::size_t i = 0; i < d; ++i) b[i] = x[i];
    b[d] = 1;
    return lp_feasible(A, b);
}

} // namespace ltisec
