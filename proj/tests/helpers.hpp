#pragma once

#include "ltisec/attack.hpp"

#include <random>

namespace ltisec::fixtures {

// Two-state chain with position-only output. Small enough to verify by hand,
// rich enough to exercise every analysis: V = span{[0,1]}.
inline LtiSystem two_state_system() {
    Mat a{{1, 1}, {0, 1}};
    Mat b{{1, 1}, {1, 0}};
    Mat c{{1, 0}};
    return LtiSystem(a, b, c);
}

// Same dynamics with direct feedthrough D = [1,0]; V expands to R^2.
inline LtiSystem feedthrough_variant() {
    Mat a{{1, 1}, {0, 1}};
    Mat b{{1, 1}, {1, 0}};
    Mat c{{1, 0}};
    Mat d{{1, 0}};
    return LtiSystem(a, b, c, d);
}

// Full state measurement; V collapses to 0.
inline LtiSystem full_output_variant() {
    Mat a{{1, 1}, {0, 1}};
    Mat b{{1, 1}, {1, 0}};
    Mat c = Mat::identity(2);
    return LtiSystem(a, b, c);
}

// Longitudinal vehicle model: position/velocity double integrator with a
// half-step position coupling and position output.
inline LtiSystem vehicle_system() {
    Mat a{{1, 1}, {0, 1}};
    Mat b{{Rat(1, 2)}, {Rat(1)}};
    Mat c{{1, 0}};
    return LtiSystem(a, b, c);
}

// Self-channel: attacks enter through the plant's own (B, D).
inline AttackChannel self_channel(const LtiSystem& sys) {
    return AttackChannel(sys.B(), sys.D());
}

inline Rat rand_entry(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    return Rat(d(rng));
}

inline Mat rand_mat(std::mt19937& rng, std::size_t r, std::size_t c) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_entry(rng);
    return m;
}

inline Vec rand_vec(std::mt19937& rng, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rand_entry(rng);
    return v;
}

// Random small system: n in 1..4, m and p in 1..3, entries in {-2..2}.
inline LtiSystem rand_system(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dn(1, 4), dm(1, 3);
    std::size_t n = dn(rng), m = dm(rng), p = dm(rng);
    return LtiSystem(rand_mat(rng, n, n), rand_mat(rng, n, p), rand_mat(rng, m, n),
                     rand_mat(rng, m, p));
}

// Random system that is observable and whose stacked [B; D] has full column
// rank, so it doubles as its own valid attack channel.
inline LtiSystem rand_observable_system(std::mt19937& rng) {
    for (;;) {
        LtiSystem sys = rand_system(rng);
        if (!is_observable(sys)) continue;
        Mat stacked = vstack(sys.B(), sys.D());
        if (rank(stacked) != stacked.cols()) continue;
        return sys;
    }
}

} // namespace ltisec::fixtures
