#pragma once

#include "ltisec/matrix.hpp"

namespace ltisec {

// Linear subspace of R^n held in canonical reduced column-echelon form, so
// two subspaces are equal iff their basis matrices are identical. d = 0
// encodes the zero subspace.
class Subspace {
public:
    // Canonicalizes the column span of `spanning`.
    explicit Subspace(const Mat& spanning);

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return basis_.rows(); }
    std::size_t dim() const { return basis_.cols(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Vec& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    Mat basis_; // n x d, reduced column-echelon, full column rank
};

// Canonical column space of m.
Subspace image(const Mat& m);

// Canonical {x : m x = 0}.
Subspace kernel(const Mat& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& s, const Vec& v);
Subspace orth_complement(const Subspace& s);

// Coordinates of v modulo s: W^T v for W the canonical basis of s-perp.
// Vectors share an s-coset iff their quotient coordinates are equal.
Vec quotient_coords(const Subspace& s, const Vec& v);

} // namespace ltisec
