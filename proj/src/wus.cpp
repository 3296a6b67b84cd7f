#include "ltisec/wus.hpp"

namespace ltisec {

Subspace wus_kernel_method(const LtiSystem& sys) {
    const std::size_t n = sys.state_dim();
    const std::size_t k = n - 1;
    Mat stacked = hstack(observability_matrix(sys, k), forced_response_matrix(sys, k));
    Mat ker = kernel(stacked).basis(); // (n + (k+1)p) x d
    Mat proj(n, ker.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
    return image(proj);
}

Subspace wus_recursive(const LtiSystem& sys) {
    const std::size_t n = sys.state_dim();
    const std::size_t m = sys.output_dim();
    Mat ac = vstack(sys.A(), sys.C());       // (n+m) x n
    Mat bd = vstack(sys.B(), sys.D());       // (n+m) x p

    Subspace v = Subspace::full(n);
    for (;;) {
        // target = (V x 0) + range[B;D] inside R^{n+m}
        Mat v_lifted = vstack(v.basis(), Mat::zero(m, v.dim()));
        Subspace target = subspace_sum(image(v_lifted), image(bd));
        // preimage of target under [A;C]: kernel of Q^T [A;C] for Q spanning
        // the complement of target
        Mat q = orth_complement(target).basis();
        Subspace next = kernel(q.transpose() * ac);
        if (next == v) return v;
        v = next;
    }
}

Subspace wus_complement(const LtiSystem& sys) { return orth_complement(wus_kernel_method(sys)); }

std::optional<InputSeq> zeroing_input(const LtiSystem& sys, const Vec& x0, std::size_t k) {
    if (x0.size() != sys.state_dim()) throw DimensionError("initial state dimension mismatch");
    Vec rhs = vec_neg(observability_matrix(sys, k) * x0);
    auto u = solve(forced_response_matrix(sys, k), rhs);
    if (!u) return std::nullopt;
    return InputSeq::from_vec(std::move(*u), sys.input_dim());
}

} // namespace ltisec
