#pragma once

#include "ltisec/matrix.hpp"

namespace ltisec {

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Discrete-time LTI system
//   x(k+1) = A x(k) + B u(k)
//   y(k)   = C x(k) + D u(k)
// D may be omitted at construction and defaults to the zero feedthrough.
class LtiSystem {
public:
    LtiSystem(Mat a, Mat b, Mat c, Mat d);
    LtiSystem(Mat a, Mat b, Mat c); // D = 0

    std::size_t state_dim() const { return a_.rows(); }   // n
    std::size_t output_dim() const { return c_.rows(); }  // m
    std::size_t input_dim() const { return b_.cols(); }   // p

    const Mat& A() const { return a_; }
    const Mat& B() const { return b_; }
    const Mat& C() const { return c_; }
    const Mat& D() const { return d_; }

private:
    Mat a_, b_, c_, d_;
};

// Attack injection channel (B~, D~). The stacked [B~; D~] must have full
// column rank; construction rejects rank-deficient channels.
class AttackChannel {
public:
    AttackChannel(Mat b, Mat d);

    std::size_t input_dim() const { return b_.cols(); } // q
    const Mat& B() const { return b_; }
    const Mat& D() const { return d_; }

    // The attacked system (A, B~, C, D~) sharing sys's A and C.
    LtiSystem attacked_system(const LtiSystem& sys) const;

private:
    Mat b_, d_;
};

// Stacked input/output sequences over a horizon: k+1 blocks of `width`
// entries each.
struct StackedSeq {
    std::size_t horizon; // k
    std::size_t width;
    Vec stacked;         // length (k+1) * width

    static StackedSeq zero(std::size_t horizon, std::size_t width);
    static StackedSeq from_vec(Vec v, std::size_t width);

    Vec block(std::size_t t) const;
    bool is_zero() const { return vec_is_zero(stacked); }

    friend bool operator==(const StackedSeq& a, const StackedSeq& b) = default;
};

using InputSeq = StackedSeq;
using OutputSeq = StackedSeq;

// O_k = [C; CA; ...; CA^k], shape (k+1)m x n.
Mat observability_matrix(const LtiSystem& sys, std::size_t k);

// Lower block-triangular Toeplitz map from stacked inputs to stacked outputs:
// D on the diagonal, CA^{i-1}B on the i-th subdiagonal. Shape (k+1)m x (k+1)p.
Mat forced_response_matrix(const LtiSystem& sys, std::size_t k);
Mat forced_response_matrix(const LtiSystem& sys, const AttackChannel& chan, std::size_t k);

// Output sequence by forward state recursion; equals O_k x0 + F_k U exactly.
OutputSeq simulate(const LtiSystem& sys, const Vec& x0, const InputSeq& u);
OutputSeq simulate_attacked(const LtiSystem& sys, const AttackChannel& chan, const Vec& x0,
                            const InputSeq& u);

bool is_observable(const LtiSystem& sys);

} // namespace ltisec
