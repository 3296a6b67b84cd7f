#include "ltisec/lti.hpp"

#include "ltisec/subspace.hpp"

namespace ltisec {

LtiSystem::LtiSystem(Mat a, Mat b, Mat c, Mat d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_.rows() != a_.cols()) throw ModelError("A must be square");
    const std::size_t n = a_.rows();
    if (b_.rows() != n) throw ModelError("B row count must match A");
    if (c_.cols() != n) throw ModelError("C column count must match A");
    if (d_.rows() != c_.rows() || d_.cols() != b_.cols())
        throw ModelError("D must be m x p");
    if (n == 0 || c_.rows() == 0 || b_.cols() == 0)
        throw ModelError("state, output and input dimensions must be positive");
}

LtiSystem::LtiSystem(Mat a, Mat b, Mat c)
    : LtiSystem(a, b, Mat(c), Mat::zero(c.rows(), b.cols())) {}

AttackChannel::AttackChannel(Mat b, Mat d) : b_(std::move(b)), d_(std::move(d)) {
    if (b_.cols() != d_.cols()) throw ModelError("attack B and D must share a column count");
    if (b_.cols() == 0) throw ModelError("attack channel needs at least one input");
    Mat stacked = vstack(b_, d_);
    if (rank(stacked) != stacked.cols())
        throw ModelError("stacked attack channel [B;D] must have full column rank");
}

LtiSystem AttackChannel::attacked_system(const LtiSystem& sys) const {
    if (b_.rows() != sys.state_dim() || d_.rows() != sys.output_dim())
        throw ModelError("attack channel dimensions do not match the system");
    return LtiSystem(sys.A(), b_, sys.C(), d_);
}

StackedSeq StackedSeq::zero(std::size_t horizon, std::size_t width) {
    return {horizon, width, Vec((horizon + 1) * width, Rat(0))};
}

StackedSeq StackedSeq::from_vec(Vec v, std::size_t width) {
    if (width == 0 || v.size() % width != 0 || v.empty())
        throw DimensionError("stacked sequence length must be a positive multiple of width");
    std::size_t horizon = v.size() / width - 1;
    return {horizon, width, std::move(v)};
}

Vec StackedSeq::block(std::size_t t) const {
    Vec out(width);
    for (std::size_t i = 0; i < width; ++i) out[i] = stacked[t * width + i];
    return out;
}

Mat observability_matrix(const LtiSystem& sys, std::size_t k) {
    Mat out = sys.C();
    Mat power = sys.C();
    for (std::size_t i = 1; i <= k; ++i) {
        power = power * sys.A();
        out = vstack(out, power);
    }
    return out;
}

namespace {

Mat forced_response_impl(const Mat& a, const Mat& b, const Mat& c, const Mat& d, std::size_t k) {
    const std::size_t m = c.rows();
    const std::size_t p = b.cols();
    // blocks[0] = D, blocks[i] = C A^{i-1} B
    std::vector<Mat> blocks;
    blocks.push_back(d);
    Mat capow = c;
    for (std::size_t i = 1; i <= k; ++i) {
        blocks.push_back(capow * b);
        capow = capow * a;
    }
    Mat f((k + 1) * m, (k + 1) * p);
    for (std::size_t bi = 0; bi <= k; ++bi)
        for (std::size_t bj = 0; bj <= bi; ++bj) {
            const Mat& blk = blocks[bi - bj];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < p; ++j)
                    f(bi * m + i, bj * p + j) = blk(i, j);
        }
    return f;
}

OutputSeq simulate_impl(const Mat& a, const Mat& b, const Mat& c, const Mat& d, const Vec& x0,
                        const InputSeq& u) {
    if (x0.size() != a.rows()) throw DimensionError("initial state dimension mismatch");
    if (u.width != b.cols()) throw DimensionError("input width mismatch");
    const std::size_t m = c.rows();
    OutputSeq y = OutputSeq::zero(u.horizon, m);
    Vec x = x0;
    for (std::size_t t = 0; t <= u.horizon; ++t) {
        Vec ut = u.block(t);
        Vec yt = vec_add(c * x, d * ut);
        for (std::size_t i = 0; i < m; ++i) y.stacked[t * m + i] = yt[i];
        x = vec_add(a * x, b * ut);
    }
    return y;
}

} // namespace

Mat forced_response_matrix(const LtiSystem& sys, std::size_t k) {
    return forced_response_impl(sys.A(), sys.B(), sys.C(), sys.D(), k);
}

Mat forced_response_matrix(const LtiSystem& sys, const AttackChannel& chan, std::size_t k) {
    return forced_response_impl(sys.A(), chan.B(), sys.C(), chan.D(), k);
}

OutputSeq simulate(const LtiSystem& sys, const Vec& x0, const InputSeq& u) {
    return simulate_impl(sys.A(), sys.B(), sys.C(), sys.D(), x0, u);
}

OutputSeq simulate_attacked(const LtiSystem& sys, const AttackChannel& chan, const Vec& x0,
                            const InputSeq& u) {
    return simulate_impl(sys.A(), chan.B(), sys.C(), chan.D(), x0, u);
}

bool is_observable(const LtiSystem& sys) {
    return rank(observability_matrix(sys, sys.state_dim() - 1)) == sys.state_dim();
}

} // namespace ltisec
