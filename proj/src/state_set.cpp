#include "ltisec/state_set.hpp"

#include <algorithm>

namespace ltisec {

namespace {

std::vector<Vec> sorted_unique(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), vec_lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Deterministic V-rep canonicalization: lexicographic order, then drop every
// vertex lying in the hull of the remaining ones.
std::vector<Vec> canonical_vertices(std::vector<Vec> verts) {
    verts = sorted_unique(std::move(verts));
    for (std::size_t i = 0; i < verts.size();) {
        std::vector<Vec> others;
        others.reserve(verts.size() - 1);
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (j != i) others.push_back(verts[j]);
        if (!others.empty() && in_convex_hull(verts[i], others))
            verts.erase(verts.begin() + i);
        else
            ++i;
    }
    return verts;
}

void check_ambient(const StateSet& s, std::size_t n, const char* what) {
    if (s.ambient_dim() != n) throw DimensionError(std::string("ambient mismatch in ") + what);
}

} // namespace

StateSet StateSet::full_space(std::size_t n) { return StateSet(Kind::FullSpace, n); }

StateSet StateSet::finite(std::vector<Vec> points, std::size_t n) {
    for (const auto& p : points)
        if (p.size() != n) throw DimensionError("finite point dimension mismatch");
    StateSet s(Kind::Finite, n);
    s.points_ = sorted_unique(std::move(points));
    return s;
}

StateSet StateSet::lin(const Subspace& sub) {
    if (sub.is_full()) return full_space(sub.ambient_dim());
    if (sub.is_zero()) return finite({Vec(sub.ambient_dim(), Rat(0))}, sub.ambient_dim());
    StateSet s(Kind::Lin, sub.ambient_dim());
    s.sub_ = sub;
    return s;
}

StateSet StateSet::coset(Vec offset, const Subspace& sub) {
    if (offset.size() != sub.ambient_dim()) throw DimensionError("coset offset dimension mismatch");
    if (sub.is_full()) return full_space(sub.ambient_dim());
    if (sub.is_zero()) return finite({std::move(offset)}, sub.ambient_dim());
    // Canonical coset representative: zero out the pivot coordinates of the
    // offset against the reduced column-echelon basis, so equal cosets compare
    // equal syntactically.
    const Mat& basis = sub.basis();
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::size_t pivot = 0;
        while (pivot < basis.rows() && basis(pivot, j) == Rat(0)) ++pivot;
        Rat coeff = offset[pivot];
        for (std::size_t i = 0; i < basis.rows(); ++i) offset[i] -= coeff * basis(i, j);
    }
    if (vec_is_zero(offset)) return lin(sub);
    StateSet s(Kind::Coset, sub.ambient_dim());
    s.sub_ = sub;
    s.offset_ = std::move(offset);
    return s;
}

StateSet StateSet::poly(std::vector<Vec> vertices, std::size_t n) {
    for (const auto& p : vertices)
        if (p.size() != n) throw DimensionError("poly vertex dimension mismatch");
    if (vertices.empty()) throw std::invalid_argument("poly requires at least one vertex");
    StateSet s(Kind::Poly, n);
    s.points_ = canonical_vertices(std::move(vertices));
    return s;
}

StateSet StateSet::make_union(std::vector<StateSet> members) {
    std::vector<StateSet> flat;
    std::size_t n = members.empty() ? 0 : members.front().ambient_dim();
    for (auto& m : members) {
        check_ambient(m, n, "union");
        if (m.kind_ == Kind::Union) {
            for (auto& c : m.members_) flat.push_back(std::move(c));
        } else if (!m.is_empty()) {
            flat.push_back(std::move(m));
        }
    }
    for (const auto& m : flat)
        if (m.kind_ == Kind::FullSpace) return full_space(n);
    if (flat.empty()) return finite({}, n);
    if (flat.size() == 1) return flat.front();
    StateSet s(Kind::Union, n);
    s.members_ = std::move(flat);
    return s;
}

StateSet StateSet::complement_of(const Subspace& sub) {
    StateSet s(Kind::ComplementOfSubspace, sub.ambient_dim());
    s.sub_ = sub;
    return s;
}

StateSet StateSet::lifted(const Subspace& v, std::vector<Vec> quotient_vertices, std::size_t n) {
    if (v.ambient_dim() != n) throw DimensionError("lifted subspace ambient mismatch");
    std::size_t q = n - v.dim();
    for (const auto& p : quotient_vertices)
        if (p.size() != q) throw DimensionError("lifted quotient vertex dimension mismatch");
    if (quotient_vertices.empty()) throw std::invalid_argument("lifted requires vertices");
    if (v.is_full()) return full_space(n);
    StateSet s(Kind::Lifted, n);
    s.sub_ = v;
    s.points_ = canonical_vertices(std::move(quotient_vertices));
    return s;
}

bool StateSet::is_empty() const {
    if (kind_ == Kind::Finite) return points_.empty();
    if (kind_ == Kind::Union) {
        for (const auto& m : members_)
            if (!m.is_empty()) return false;
        return true;
    }
    if (kind_ == Kind::ComplementOfSubspace) return sub_.is_full();
    return false;
}

// ---------------------------------------------------------------------------
// negate / translate / Minkowski
// ---------------------------------------------------------------------------

StateSet negate(const StateSet& s) {
    using K = StateSet::Kind;
    switch (s.kind()) {
        case K::FullSpace:
        case K::Lin:
        case K::ComplementOfSubspace:
            return s;
        case K::Finite: {
            std::vector<Vec> pts;
            for (const auto& p : s.points()) pts.push_back(vec_neg(p));
            return StateSet::finite(std::move(pts), s.ambient_dim());
        }
        case K::Coset:
            return StateSet::coset(vec_neg(s.offset()), s.subspace());
        case K::Poly: {
            std::vector<Vec> v;
            for (const auto& p : s.vertices()) v.push_back(vec_neg(p));
            return StateSet::poly(std::move(v), s.ambient_dim());
        }
        case K::Lifted: {
            std::vector<Vec> v;
            for (const auto& p : s.vertices()) v.push_back(vec_neg(p));
            return StateSet::lifted(s.subspace(), std::move(v), s.ambient_dim());
        }
        case K::Union: {
            std::vector<StateSet> ms;
            for (const auto& m : s.members()) ms.push_back(negate(m));
            return StateSet::make_union(std::move(ms));
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

StateSet translate(const StateSet& s, const Vec& p) {
    using K = StateSet::Kind;
    switch (s.kind()) {
        case K::FullSpace:
            return s;
        case K::Finite: {
            std::vector<Vec> pts;
            for (const auto& q : s.points()) pts.push_back(vec_add(q, p));
            return StateSet::finite(std::move(pts), s.ambient_dim());
        }
        case K::Lin:
            return StateSet::coset(p, s.subspace());
        case K::Coset:
            return StateSet::coset(vec_add(s.offset(), p), s.subspace());
        case K::Poly: {
            std::vector<Vec> v;
            for (const auto& q : s.vertices()) v.push_back(vec_add(q, p));
            return StateSet::poly(std::move(v), s.ambient_dim());
        }
        case K::Lifted: {
            Vec qp = quotient_coords(s.subspace(), p);
            std::vector<Vec> v;
            for (const auto& q : s.vertices()) v.push_back(vec_add(q, qp));
            return StateSet::lifted(s.subspace(), std::move(v), s.ambient_dim());
        }
        case K::Union: {
            std::vector<StateSet> ms;
            for (const auto& m : s.members()) ms.push_back(translate(m, p));
            return StateSet::make_union(std::move(ms));
        }
        default:
            throw UnsupportedCombination("translate of complement set");
    }
}

// Minkowski sum of two members from the supported fragment; used by
// difference_body on unions.
StateSet minkowski_pair(const StateSet& a, const StateSet& b) {
    using K = StateSet::Kind;
    if (a.is_empty() || b.is_empty()) return StateSet::finite({}, a.ambient_dim());
    if (a.kind() == K::FullSpace || b.kind() == K::FullSpace)
        return StateSet::full_space(a.ambient_dim());
    if (a.kind() == K::Union) {
        std::vector<StateSet> ms;
        for (const auto& m : a.members()) ms.push_back(minkowski_pair(m, b));
        return StateSet::make_union(std::move(ms));
    }
    if (b.kind() == K::Union) return minkowski_pair(b, a);
    if (a.kind() == K::Finite) {
        std::vector<StateSet> ms;
        for (const auto& p : a.points()) ms.push_back(translate(b, p));
        return StateSet::make_union(std::move(ms));
    }
    if (b.kind() == K::Finite) return minkowski_pair(b, a);
    if (a.kind() == K::Lin) return minkowski_with_subspace(b, a.subspace());
    if (b.kind() == K::Lin) return minkowski_with_subspace(a, b.subspace());
    if (a.kind() == K::Coset)
        return translate(minkowski_with_subspace(b, a.subspace()), a.offset());
    if (b.kind() == K::Coset) return minkowski_pair(b, a);
    if (a.kind() == K::Poly && b.kind() == K::Poly) {
        std::vector<Vec> v;
        for (const auto& p : a.vertices())
            for (const auto& q : b.vertices()) v.push_back(vec_add(p, q));
        return StateSet::poly(std::move(v), a.ambient_dim());
    }
    throw UnsupportedCombination("minkowski sum of these set variants");
}

} // namespace

StateSet minkowski_with_subspace(const StateSet& s, const Subspace& v) {
    using K = StateSet::Kind;
    if (v.ambient_dim() != s.ambient_dim())
        throw DimensionError("ambient mismatch in minkowski_with_subspace");
    if (v.is_zero()) return s;
    switch (s.kind()) {
        case K::FullSpace:
            return s;
        case K::Finite: {
            std::vector<StateSet> ms;
            for (const auto& p : s.points()) ms.push_back(StateSet::coset(p, v));
            return StateSet::make_union(std::move(ms));
        }
        case K::Lin:
            return StateSet::lin(subspace_sum(s.subspace(), v));
        case K::Coset:
            return StateSet::coset(s.offset(), subspace_sum(s.subspace(), v));
        case K::Poly: {
            std::vector<Vec> qv;
            for (const auto& p : s.vertices()) qv.push_back(quotient_coords(v, p));
            return StateSet::lifted(v, std::move(qv), s.ambient_dim());
        }
        case K::Lifted: {
            if (s.subspace() == v) return s;
            throw UnsupportedCombination("summing a lifted set with a different subspace");
        }
        case K::Union: {
            std::vector<StateSet> ms;
            for (const auto& m : s.members()) ms.push_back(minkowski_with_subspace(m, v));
            return StateSet::make_union(std::move(ms));
        }
        default:
            throw UnsupportedCombination("minkowski sum with a complement set");
    }
}

StateSet difference_body(const StateSet& s) {
    using K = StateSet::Kind;
    switch (s.kind()) {
        case K::FullSpace:
        case K::Lin:
            return s;
        case K::Finite: {
            std::vector<Vec> d;
            for (const auto& p : s.points())
                for (const auto& q : s.points()) d.push_back(vec_sub(p, q));
            return StateSet::finite(std::move(d), s.ambient_dim());
        }
        case K::Coset:
            return StateSet::lin(s.subspace());
        case K::Poly: {
            std::vector<Vec> d;
            for (const auto& p : s.vertices())
                for (const auto& q : s.vertices()) d.push_back(vec_sub(p, q));
            return StateSet::poly(std::move(d), s.ambient_dim());
        }
        case K::Union: {
            std::vector<StateSet> ms;
            for (const auto& a : s.members())
                for (const auto& b : s.members()) ms.push_back(minkowski_pair(a, negate(b)));
            return StateSet::make_union(std::move(ms));
        }
        default:
            throw UnsupportedCombination("difference body of this set variant");
    }
}

// ---------------------------------------------------------------------------
// membership
// ---------------------------------------------------------------------------

bool member(const StateSet& s, const Vec& x) {
    using K = StateSet::Kind;
    if (x.size() != s.ambient_dim()) throw DimensionError("ambient mismatch in member");
    switch (s.kind()) {
        case K::FullSpace:
            return true;
        case K::Finite:
            return std::find(s.points().begin(), s.points().end(), x) != s.points().end();
        case K::Lin:
            return s.subspace().contains(x);
        case K::Coset:
            return s.subspace().contains(vec_sub(x, s.offset()));
        case K::Poly:
            return in_convex_hull(x, s.vertices());
        case K::Lifted:
            return in_convex_hull(quotient_coords(s.subspace(), x), s.vertices());
        case K::ComplementOfSubspace:
            return !s.subspace().contains(x);
        case K::Union:
            for (const auto& m : s.members())
                if (member(m, x)) return true;
            return false;
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// images
// ---------------------------------------------------------------------------

StateSet linear_image(const Mat& m, const StateSet& s) {
    using K = StateSet::Kind;
    if (m.cols() != s.ambient_dim()) throw DimensionError("ambient mismatch in linear_image");
    switch (s.kind()) {
        case K::FullSpace:
            return StateSet::lin(image(m));
        case K::Finite: {
            std::vector<Vec> pts;
            for (const auto& p : s.points()) pts.push_back(m * p);
            return StateSet::finite(std::move(pts), m.rows());
        }
        case K::Lin:
            return StateSet::lin(image(m * s.subspace().basis()));
        case K::Coset:
            return StateSet::coset(m * s.offset(), image(m * s.subspace().basis()));
        case K::Poly: {
            std::vector<Vec> v;
            for (const auto& p : s.vertices()) v.push_back(m * p);
            return StateSet::poly(std::move(v), m.rows());
        }
        case K::Union: {
            std::vector<StateSet> ms;
            for (const auto& c : s.members()) ms.push_back(linear_image(m, c));
            return StateSet::make_union(std::move(ms));
        }
        default:
            throw UnsupportedCombination("linear image of this set variant");
    }
}

StateSet quotient_image(const StateSet& s, const Subspace& v) {
    using K = StateSet::Kind;
    if (v.ambient_dim() != s.ambient_dim())
        throw DimensionError("ambient mismatch in quotient_image");
    if (s.kind() == K::Lifted) {
        if (s.subspace() == v)
            return StateSet::poly(s.vertices(), s.ambient_dim() - v.dim());
        throw UnsupportedCombination("quotient of a lifted set by a different subspace");
    }
    if (s.kind() == K::ComplementOfSubspace)
        throw UnsupportedCombination("quotient image of a complement set");
    if (s.kind() == K::Union) {
        std::vector<StateSet> ms;
        for (const auto& m : s.members()) ms.push_back(quotient_image(m, v));
        return StateSet::make_union(std::move(ms));
    }
    Mat w = orth_complement(v).basis().transpose();
    if (s.kind() == K::FullSpace) return StateSet::full_space(w.rows());
    return linear_image(w, s);
}

// ---------------------------------------------------------------------------
// finite set algebra and coset intersection
// ---------------------------------------------------------------------------

StateSet set_minus_finite(const StateSet& a, const StateSet& b) {
    if (a.kind() != StateSet::Kind::Finite || b.kind() != StateSet::Kind::Finite)
        throw UnsupportedCombination("set_minus_finite expects finite sets");
    check_ambient(b, a.ambient_dim(), "set_minus_finite");
    std::vector<Vec> out;
    for (const auto& p : a.points())
        if (!member(b, p)) out.push_back(p);
    return StateSet::finite(std::move(out), a.ambient_dim());
}

namespace {

// Exact segment endpoints of {p + t w : t real} intersected with conv(verts):
// minimizes / maximizes t by LP over (lambda, t+, t-).
std::optional<std::pair<Rat, Rat>> line_poly_range(const Vec& p, const Vec& w,
                                                   const std::vector<Vec>& verts) {
    const std::size_t d = p.size();
    const std::size_t k = verts.size();
    Mat A(d + 1, k + 2);
    Vec b(d + 1);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i) A(i, j) = verts[j][i];
        A(d, j) = 1;
    }
    for (std::size_t i = 0; i < d; ++i) {
        A(i, k) = -w[i];
        A(i, k + 1) = w[i];
        b[i] = p[i];
    }
    b[d] = 1;
    Vec cmin(k + 2, Rat(0));
    cmin[k] = 1;
    cmin[k + 1] = -1;
    LpResult lo = lp_minimize(A, b, cmin);
    if (lo.status != LpStatus::Optimal) return std::nullopt; // infeasible (hull is bounded)
    Vec cmax = cmin;
    cmax[k] = -1;
    cmax[k + 1] = 1;
    LpResult hi = lp_minimize(A, b, cmax);
    return std::make_pair(lo.objective, -hi.objective);
}

} // namespace

StateSet coset_intersect(const StateSet& c, const StateSet& s) {
    using K = StateSet::Kind;
    check_ambient(s, c.ambient_dim(), "coset_intersect");
    const std::size_t n = c.ambient_dim();

    // Degenerate coset forms.
    if (c.kind() == K::Finite) {
        std::vector<Vec> pts;
        for (const auto& p : c.points())
            if (member(s, p)) pts.push_back(p);
        return StateSet::finite(std::move(pts), n);
    }
    Vec p;
    Subspace w = Subspace::zero(n);
    if (c.kind() == K::Coset) {
        p = c.offset();
        w = c.subspace();
    } else if (c.kind() == K::Lin) {
        p = Vec(n, Rat(0));
        w = c.subspace();
    } else if (c.kind() == K::FullSpace) {
        return s;
    } else {
        throw UnsupportedCombination("coset_intersect expects a coset-like first argument");
    }

    switch (s.kind()) {
        case K::FullSpace:
            return c;
        case K::Finite: {
            std::vector<Vec> pts;
            for (const auto& q : s.points())
                if (w.contains(vec_sub(q, p))) pts.push_back(q);
            return StateSet::finite(std::move(pts), n);
        }
        case K::Lin:
        case K::Coset: {
            // x = p + W a with x in offset2 + S2  <=>  Q^T W a = Q^T (offset2 - p)
            Vec p2 = (s.kind() == K::Coset) ? s.offset() : Vec(n, Rat(0));
            Mat q = orth_complement(s.subspace()).basis().transpose();
            auto a0 = solve(q * w.basis(), q * vec_sub(p2, p));
            if (!a0) return StateSet::finite({}, n);
            Vec point = vec_add(p, w.basis() * *a0);
            Subspace dir = image(w.basis() * kernel(q * w.basis()).basis());
            return StateSet::coset(std::move(point), dir);
        }
        case K::Poly: {
            if (w.dim() == 1) {
                auto range = line_poly_range(p, w.basis().col(0), s.vertices());
                if (!range) return StateSet::finite({}, n);
                Vec lo = vec_add(p, range->first * Mat::identity(n) * w.basis().col(0));
                Vec hi = vec_add(p, range->second * Mat::identity(n) * w.basis().col(0));
                if (lo == hi) return StateSet::finite({lo}, n);
                return StateSet::poly({lo, hi}, n);
            }
            throw UnsupportedCombination("coset_intersect with a polytope needs a 1-d coset");
        }
        case K::Union: {
            std::vector<StateSet> ms;
            for (const auto& m : s.members()) ms.push_back(coset_intersect(c, m));
            return StateSet::make_union(std::move(ms));
        }
        case K::ComplementOfSubspace: {
            // coset minus subspace: not representable in the fragment unless disjoint
            // or fully inside.
            StateSet inside = coset_intersect(c, StateSet::lin(s.subspace()));
            if (inside.is_empty()) return c;
            if (inside == c) return StateSet::finite({}, n);
            throw UnsupportedCombination("coset partially meets the excluded subspace");
        }
        default:
            throw UnsupportedCombination("coset_intersect with this set variant");
    }
}

// ---------------------------------------------------------------------------
// 2D hull and the union-cover decision used by contains_set
// ---------------------------------------------------------------------------

namespace {

int orient2d(const Vec& a, const Vec& b, const Vec& c) {
    Rat cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    if (cr > 0) return 1;
    if (cr < 0) return -1;
    return 0;
}

} // namespace

std::vector<Vec> convex_hull_2d(std::vector<Vec> points) {
    points = sorted_unique(std::move(points));
    if (points.size() <= 2) return points;
    std::vector<Vec> hull;
    // lower
    for (const auto& p : points) {
        while (hull.size() >= 2 && orient2d(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    // upper
    std::size_t lower = hull.size() + 1;
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
        while (hull.size() >= lower && orient2d(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    if (hull.size() < 3) { // collinear input
        return {points.front(), points.back()};
    }
    return hull;
}

namespace {

using Halfplane = std::pair<Vec, Rat>; // a . x <= b

// Halfplane description of a convex set in working dimension d (1 or 2).
// Returns nullopt when the variant has no such description.
std::optional<std::vector<Halfplane>> convex_halfplanes(const StateSet& m) {
    using K = StateSet::Kind;
    const std::size_t d = m.ambient_dim();

    auto point_planes = [&](const Vec& p) {
        std::vector<Halfplane> hs;
        for (std::size_t i = 0; i < d; ++i) {
            Vec e(d, Rat(0)), ne(d, Rat(0));
            e[i] = 1;
            ne[i] = -1;
            hs.push_back({e, p[i]});
            hs.push_back({ne, -p[i]});
        }
        return hs;
    };

    switch (m.kind()) {
        case K::FullSpace:
            return std::vector<Halfplane>{};
        case K::Finite:
            if (m.points().size() == 1) return point_planes(m.points().front());
            return std::nullopt; // caller splits multi-point finites
        case K::Lin:
        case K::Coset: {
            Vec p = (m.kind() == K::Coset) ? m.offset() : Vec(d, Rat(0));
            Mat q = orth_complement(m.subspace()).basis().transpose();
            std::vector<Halfplane> hs;
            for (std::size_t r = 0; r < q.rows(); ++r) {
                Vec a = q.row(r);
                Rat b = 0;
                for (std::size_t i = 0; i < d; ++i) b += a[i] * p[i];
                hs.push_back({a, b});
                hs.push_back({vec_neg(a), -b});
            }
            return hs;
        }
        case K::Poly: {
            const auto& verts = m.vertices();
            if (verts.size() == 1) return point_planes(verts.front());
            if (d == 1) {
                Rat lo = verts.front()[0], hi = verts.front()[0];
                for (const auto& v : verts) {
                    lo = std::min(lo, v[0]);
                    hi = std::max(hi, v[0]);
                }
                return std::vector<Halfplane>{{{Rat(1)}, hi}, {{Rat(-1)}, -lo}};
            }
            if (d != 2) return std::nullopt;
            if (verts.size() == 2) {
                // segment: supporting line both ways plus endpoint cuts
                Vec dir = vec_sub(verts[1], verts[0]);
                Vec nrm = {dir[1], -dir[0]};
                Rat c0 = nrm[0] * verts[0][0] + nrm[1] * verts[0][1];
                Rat t0 = dir[0] * verts[0][0] + dir[1] * verts[0][1];
                Rat t1 = dir[0] * verts[1][0] + dir[1] * verts[1][1];
                if (t0 > t1) std::swap(t0, t1);
                return std::vector<Halfplane>{
                    {nrm, c0}, {vec_neg(nrm), -c0}, {dir, t1}, {vec_neg(dir), -t0}};
            }
            std::vector<Vec> hull = convex_hull_2d(verts);
            std::vector<Halfplane> hs;
            for (std::size_t i = 0; i < hull.size(); ++i) {
                const Vec& p = hull[i];
                const Vec& q = hull[(i + 1) % hull.size()];
                Vec dir = vec_sub(q, p);
                // hull is counterclockwise; outward normal is (dy, -dx)
                Vec a = {dir[1], -dir[0]};
                hs.push_back({a, a[0] * p[0] + a[1] * p[1]});
            }
            return hs;
        }
        default:
            return std::nullopt;
    }
}

bool satisfies(const Vec& v, const std::vector<Halfplane>& hs) {
    for (const auto& [a, b] : hs) {
        Rat s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += a[i] * v[i];
        if (s > b) return false;
    }
    return true;
}

// Splits a convex piece (vertex list) by the line a.x = b into the <= and >=
// sides. Crossing points of all vertex pairs are included; extras are interior
// and canonicalized away.
std::pair<std::vector<Vec>, std::vector<Vec>> split_piece(const std::vector<Vec>& piece,
                                                          const Vec& a, const Rat& b) {
    std::vector<Rat> s(piece.size());
    for (std::size_t i = 0; i < piece.size(); ++i) {
        s[i] = -b;
        for (std::size_t k = 0; k < a.size(); ++k) s[i] += a[k] * piece[i][k];
    }
    std::vector<Vec> le, ge;
    for (std::size_t i = 0; i < piece.size(); ++i) {
        if (s[i] <= 0) le.push_back(piece[i]);
        if (s[i] >= 0) ge.push_back(piece[i]);
    }
    for (std::size_t i = 0; i < piece.size(); ++i)
        for (std::size_t j = i + 1; j < piece.size(); ++j) {
            if ((s[i] < 0 && s[j] > 0) || (s[i] > 0 && s[j] < 0)) {
                Rat t = s[i] / (s[i] - s[j]);
                Vec x(piece[i].size());
                for (std::size_t k = 0; k < x.size(); ++k)
                    x[k] = piece[i][k] + t * (piece[j][k] - piece[i][k]);
                le.push_back(x);
                ge.push_back(std::move(x));
            }
        }
    return {canonical_vertices(std::move(le)), canonical_vertices(std::move(ge))};
}

// Is conv(body) covered by the union of the given convex members? Exact in
// working dimension <= 2: the body is refined along every member boundary, so
// each final piece is inside a single member or disjoint from all of them.
bool covered_by_union(const std::vector<Vec>& body, const std::vector<StateSet>& raw_members) {
    std::vector<std::vector<Halfplane>> members;
    for (const auto& m : raw_members) {
        if (m.is_empty()) continue;
        if (m.kind() == StateSet::Kind::Finite && m.points().size() > 1) {
            for (const auto& p : m.points()) {
                auto hs = convex_halfplanes(StateSet::finite({p}, m.ambient_dim()));
                members.push_back(std::move(*hs));
            }
            continue;
        }
        auto hs = convex_halfplanes(m);
        if (!hs) throw UnsupportedCombination("union member outside the coverable fragment");
        if (hs->empty()) return true; // full space member
        members.push_back(std::move(*hs));
    }
    if (members.empty()) return false;

    std::vector<std::vector<Vec>> pieces{canonical_vertices(body)};
    for (const auto& hs : members)
        for (const auto& [a, b] : hs) {
            std::vector<std::vector<Vec>> next;
            for (const auto& piece : pieces) {
                auto [le, ge] = split_piece(piece, a, b);
                if (!le.empty()) next.push_back(std::move(le));
                if (!ge.empty()) next.push_back(std::move(ge));
            }
            pieces = std::move(next);
        }

    for (const auto& piece : pieces) {
        bool ok = false;
        for (const auto& hs : members) {
            bool all = true;
            for (const auto& v : piece)
                if (!satisfies(v, hs)) { all = false; break; }
            if (all) { ok = true; break; }
        }
        if (!ok) return false;
    }
    return true;
}

bool is_convex_variant(const StateSet& s) {
    using K = StateSet::Kind;
    switch (s.kind()) {
        case K::FullSpace:
        case K::Lin:
        case K::Coset:
        case K::Poly:
        case K::Lifted:
            return true;
        case K::Finite:
            return s.points().size() <= 1;
        default:
            return false;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// containment
// ---------------------------------------------------------------------------

bool contains_set(const StateSet& a, const StateSet& b) {
    using K = StateSet::Kind;
    check_ambient(b, a.ambient_dim(), "contains_set");
    if (b.is_empty()) return true;
    if (a.kind() == K::FullSpace) return true;

    if (b.kind() == K::Finite) {
        for (const auto& p : b.points())
            if (!member(a, p)) return false;
        return true;
    }
    if (b.kind() == K::Union) {
        for (const auto& m : b.members())
            if (!contains_set(a, m)) return false;
        return true;
    }

    // Reduce a lifted right-hand side or left-hand side to the quotient space.
    if (a.kind() == K::Lifted) {
        StateSet qa = StateSet::poly(a.vertices(), a.ambient_dim() - a.subspace().dim());
        return contains_set(qa, quotient_image(b, a.subspace()));
    }
    if (a.kind() == K::Union) {
        // A union whose members all carry the same lift subspace is compared in
        // that quotient.
        bool all_lifted = true;
        for (const auto& m : a.members())
            if (m.kind() != K::Lifted || !(m.subspace() == a.members().front().subspace()))
                all_lifted = false;
        if (all_lifted) {
            const Subspace& v = a.members().front().subspace();
            std::vector<StateSet> qm;
            for (const auto& m : a.members())
                qm.push_back(StateSet::poly(m.vertices(), m.ambient_dim() - v.dim()));
            return contains_set(StateSet::make_union(std::move(qm)), quotient_image(b, v));
        }
    }

    if (b.kind() == K::Poly) {
        if (is_convex_variant(a)) {
            for (const auto& v : b.vertices())
                if (!member(a, v)) return false;
            return true;
        }
        if (a.kind() == K::Finite) {
            if (b.vertices().size() > 1) return false;
            return member(a, b.vertices().front());
        }
        if (a.kind() == K::ComplementOfSubspace)
            return !sets_intersect(StateSet::lin(a.subspace()), b);
        if (a.kind() == K::Union) {
            if (a.ambient_dim() <= 2) return covered_by_union(b.vertices(), a.members());
            throw UnsupportedCombination(
                "polytope vs union containment needs working dimension <= 2");
        }
        throw UnsupportedCombination("contains_set for this variant pair");
    }

    if (b.kind() == K::Lin || b.kind() == K::Coset) {
        Vec pb = (b.kind() == K::Coset) ? b.offset() : Vec(b.ambient_dim(), Rat(0));
        const Subspace& sb = b.subspace();
        switch (a.kind()) {
            case K::Lin:
                return subspace_leq(sb, a.subspace()) && a.subspace().contains(pb);
            case K::Coset:
                return subspace_leq(sb, a.subspace()) &&
                       a.subspace().contains(vec_sub(pb, a.offset()));
            case K::ComplementOfSubspace:
                return coset_intersect(b, StateSet::lin(a.subspace())).is_empty();
            case K::Union:
                for (const auto& m : a.members())
                    if (is_convex_variant(m) && contains_set(m, b)) return true;
                throw UnsupportedCombination("coset vs union containment");
            default:
                return false; // finite / poly cannot contain an affine set
        }
    }

    if (b.kind() == K::ComplementOfSubspace) {
        if (a.kind() == K::ComplementOfSubspace)
            return subspace_leq(a.subspace(), b.subspace());
        throw UnsupportedCombination("complement set containment in this variant");
    }
    if (b.kind() == K::Lifted) {
        StateSet qb = StateSet::poly(b.vertices(), b.ambient_dim() - b.subspace().dim());
        if (a.kind() == K::Lifted && a.subspace() == b.subspace())
            return contains_set(StateSet::poly(a.vertices(), qb.ambient_dim()), qb);
        throw UnsupportedCombination("lifted set containment in this variant");
    }
    if (b.kind() == K::FullSpace) return false;
    throw UnsupportedCombination("contains_set for this variant pair");
}

// ---------------------------------------------------------------------------
// intersection tests
// ---------------------------------------------------------------------------

bool sets_intersect(const StateSet& a, const StateSet& b) {
    using K = StateSet::Kind;
    check_ambient(b, a.ambient_dim(), "sets_intersect");
    if (a.is_empty() || b.is_empty()) return false;
    if (a.kind() == K::FullSpace || b.kind() == K::FullSpace) return true;

    if (a.kind() == K::Union) {
        for (const auto& m : a.members())
            if (sets_intersect(m, b)) return true;
        return false;
    }
    if (b.kind() == K::Union) return sets_intersect(b, a);

    if (a.kind() == K::Finite) {
        for (const auto& p : a.points())
            if (member(b, p)) return true;
        return false;
    }
    if (b.kind() == K::Finite) return sets_intersect(b, a);

    if (a.kind() == K::Lin || a.kind() == K::Coset) return !coset_intersect(a, b).is_empty();
    if (b.kind() == K::Lin || b.kind() == K::Coset) return sets_intersect(b, a);

    if (a.kind() == K::Poly && b.kind() == K::Poly) {
        // convex combinations of each meeting: sum l_i p_i - sum m_j q_j = 0
        const std::size_t d = a.ambient_dim();
        const auto& pa = a.vertices();
        const auto& pb = b.vertices();
        Mat A(d + 2, pa.size() + pb.size());
        Vec rhs(d + 2, Rat(0));
        for (std::size_t j = 0; j < pa.size(); ++j) {
            for (std::size_t i = 0; i < d; ++i) A(i, j) = pa[j][i];
            A(d, j) = 1;
        }
        for (std::size_t j = 0; j < pb.size(); ++j) {
            for (std::size_t i = 0; i < d; ++i) A(i, pa.size() + j) = -pb[j][i];
            A(d + 1, pa.size() + j) = 1;
        }
        rhs[d] = 1;
        rhs[d + 1] = 1;
        return lp_feasible(A, rhs);
    }
    if (a.kind() == K::Poly && b.kind() == K::Lifted) {
        StateSet qa = quotient_image(a, b.subspace());
        return sets_intersect(qa, StateSet::poly(b.vertices(), qa.ambient_dim()));
    }
    if (a.kind() == K::Lifted && b.kind() == K::Poly) return sets_intersect(b, a);
    if (a.kind() == K::Lifted && b.kind() == K::Lifted && a.subspace() == b.subspace()) {
        std::size_t qd = a.ambient_dim() - a.subspace().dim();
        return sets_intersect(StateSet::poly(a.vertices(), qd), StateSet::poly(b.vertices(), qd));
    }

    if (a.kind() == K::ComplementOfSubspace) {
        // complement meets b iff b is not inside the excluded subspace
        if (b.kind() == K::ComplementOfSubspace)
            return !a.subspace().is_full() && !b.subspace().is_full();
        return !contains_set(StateSet::lin(a.subspace()), b);
    }
    if (b.kind() == K::ComplementOfSubspace) return sets_intersect(b, a);

    throw UnsupportedCombination("sets_intersect for this variant pair");
}

} // namespace ltisec
