#pragma once

#include "ltisec/simplex.hpp"
#include "ltisec/subspace.hpp"

#include <vector>

namespace ltisec {

struct UnsupportedCombination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symbolic set of states in R^n.
//
// Variants:
//   FullSpace        all of R^n
//   Finite           explicit point list (possibly empty; the empty set)
//   Lin              a linear subspace
//   Coset            offset + subspace
//   Poly             convex hull of a vertex list (V-representation)
//   Union            finite union of the above (flattened)
//   ComplementOfSubspace   R^n minus a subspace (intensional; membership only)
//   Lifted           Minkowski sum of a convex body with a subspace, stored as
//                    the body's image in the quotient modulo that subspace
//
// Construction normalizes: finite lists are sorted and deduplicated, poly
// vertex lists drop points interior to the hull of the others, cosets with a
// zero subspace collapse to a single point and with a full subspace to
// FullSpace, unions are flattened.
class StateSet {
public:
    enum class Kind { FullSpace, Finite, Lin, Coset, Poly, Union, ComplementOfSubspace, Lifted };

    static StateSet full_space(std::size_t ambient_dim);
    static StateSet finite(std::vector<Vec> points, std::size_t ambient_dim);
    static StateSet lin(const Subspace& s);
    static StateSet coset(Vec offset, const Subspace& s);
    static StateSet poly(std::vector<Vec> vertices, std::size_t ambient_dim);
    static StateSet make_union(std::vector<StateSet> members);
    static StateSet complement_of(const Subspace& s);
    // Convex body (given by quotient-space vertices) summed with `v`;
    // `quotient_vertices` live in dimension ambient_dim - dim(v).
    static StateSet lifted(const Subspace& v, std::vector<Vec> quotient_vertices,
                           std::size_t ambient_dim);

    Kind kind() const { return kind_; }
    std::size_t ambient_dim() const { return ambient_; }
    bool is_empty() const;

    const std::vector<Vec>& points() const { return points_; }    // Finite
    const std::vector<Vec>& vertices() const { return points_; }  // Poly / Lifted quotient body
    const Subspace& subspace() const { return sub_; }             // Lin / Coset / Complement / Lifted
    const Vec& offset() const { return offset_; }                 // Coset
    const std::vector<StateSet>& members() const { return members_; } // Union

    friend bool operator==(const StateSet& a, const StateSet& b) = default;

private:
    StateSet(Kind k, std::size_t ambient) : kind_(k), ambient_(ambient), sub_(Mat::zero(0, 0)) {}

    Kind kind_;
    std::size_t ambient_;
    std::vector<Vec> points_;
    Subspace sub_;
    Vec offset_;
    std::vector<StateSet> members_;
};

// {-s : s in S}, same variant.
StateSet negate(const StateSet& s);

// S (+) V for a subspace V.
StateSet minkowski_with_subspace(const StateSet& s, const Subspace& v);

// S (+) (-S).
StateSet difference_body(const StateSet& s);

bool member(const StateSet& s, const Vec& x);

// Every point of b lies in a. Exact on the supported fragment; throws
// UnsupportedCombination outside it.
bool contains_set(const StateSet& a, const StateSet& b);

// Nonempty intersection test on the supported fragment.
bool sets_intersect(const StateSet& a, const StateSet& b);

// Both arguments Finite.
StateSet set_minus_finite(const StateSet& a, const StateSet& b);

// c must be a Coset (or Lin / Finite-singleton, treated as degenerate cosets).
StateSet coset_intersect(const StateSet& c, const StateSet& s);

// {m x : x in s}.
StateSet linear_image(const Mat& m, const StateSet& s);

// Image of s in the quotient modulo v, expressed in quotient coordinates
// (dimension = ambient - dim v).
StateSet quotient_image(const StateSet& s, const Subspace& v);

// Canonical 2D convex hull (counterclockwise) of exact rational points.
std::vector<Vec> convex_hull_2d(std::vector<Vec> points);

} // namespace ltisec
