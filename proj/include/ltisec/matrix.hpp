#pragma once

#include "ltisec/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace ltisec {

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<Rat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
bool vec_is_zero(const Vec& a);
// Lexicographic order; used wherever a deterministic scan order is required.
bool vec_lex_less(const Vec& a, const Vec& b);

// Dense matrix with exact rational entries, row-major. Dimensions are fixed
// at construction.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols);
    // Column vector from a Vec.
    static Mat column(const Vec& v);
    static Mat from_rows(const std::vector<Vec>& rows);
    static Mat from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Mat transpose() const;
    bool is_zero() const;

    friend bool operator==(const Mat& a, const Mat& b) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rat& s, const Mat& a);
Vec operator*(const Mat& a, const Vec& x);

// [A B] side by side / stacked.
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct Rref {
    Mat mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
Rref rref(const Mat& m);

std::size_t rank(const Mat& m);

// Nullspace of m as an n x d matrix whose columns span {x : mx = 0}.
// The basis is the standard free-variable one; callers wanting the canonical
// form go through Subspace.
Mat nullspace_matrix(const Mat& m);

// One exact solution of m x = b, or nullopt when inconsistent. Free variables
// are set to zero under the natural column order, so the result is
// deterministic.
std::optional<Vec> solve(const Mat& m, const Vec& b);

} // namespace ltisec
