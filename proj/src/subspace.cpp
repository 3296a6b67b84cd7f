#include "ltisec/subspace.hpp"

namespace ltisec {

namespace {

// Reduced column-echelon form with zero columns dropped: transpose of the
// RREF of the transpose. Unique for a given column space.
Mat canonical_column_basis(const Mat& spanning) {
    Rref rr = rref(spanning.transpose());
    Mat cols(spanning.rows(), rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < spanning.rows(); ++j) cols(j, i) = rr.mat(i, j);
    return cols;
}

} // namespace

Subspace::Subspace(const Mat& spanning) : basis_(canonical_column_basis(spanning)) {}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(Mat::zero(ambient_dim, 0)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(Mat::identity(ambient_dim)); }

Subspace Subspace::span_of(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    if (vectors.empty()) return zero(ambient_dim);
    return Subspace(Mat::from_columns(vectors));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_dim()) throw DimensionError("vector/subspace ambient mismatch");
    return solve(basis_, v).has_value();
}

Subspace image(const Mat& m) { return Subspace(m); }

Subspace kernel(const Mat& m) { return Subspace(nullspace_matrix(m)); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace ambient mismatch");
    return Subspace(hstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace ambient mismatch");
    // (a cap b) = (a-perp + b-perp)-perp
    return orth_complement(subspace_sum(orth_complement(a), orth_complement(b)));
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace ambient mismatch");
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (!b.contains(a.basis().col(j))) return false;
    return true;
}

bool subspace_contains(const Subspace& s, const Vec& v) { return s.contains(v); }

Subspace orth_complement(const Subspace& s) { return kernel(s.basis().transpose()); }

Vec quotient_coords(const Subspace& s, const Vec& v) {
    if (v.size() != s.ambient_dim()) throw DimensionError("vector/subspace ambient mismatch");
    return orth_complement(s).basis().transpose() * v;
}

} // namespace ltisec
