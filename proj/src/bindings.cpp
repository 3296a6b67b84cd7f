// Python bindings. Rationals cross the boundary as strings (or ints), so the
// arithmetic stays exact end to end.

#include "ltisec/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace ltisec;

namespace {

Rat rat_from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rat(Int(py::str(h).cast<std::string>()));
    if (py::isinstance<py::str>(h)) return parse_rat(h.cast<std::string>());
    throw py::type_error("rational entries must be int or str, got " +
                         std::string(py::str(h.get_type())));
}

Vec vec_from_py(const py::sequence& seq) {
    Vec v;
    for (const auto& e : seq) v.push_back(rat_from_py(e));
    return v;
}

Mat mat_from_py(const py::sequence& rows) {
    std::vector<Vec> r;
    for (const auto& row : rows) r.push_back(vec_from_py(row.cast<py::sequence>()));
    if (r.empty()) throw py::value_error("matrix needs at least one row");
    return Mat::from_rows(r);
}

py::list vec_to_py(const Vec& v) {
    py::list out;
    for (const auto& x : v) out.append(rat_to_string(x));
    return out;
}

py::list mat_to_py(const Mat& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(vec_to_py(m.row(i)));
    return out;
}

py::list basis_to_py(const Subspace& s) {
    py::list out;
    for (std::size_t j = 0; j < s.dim(); ++j) out.append(vec_to_py(s.basis().col(j)));
    return out;
}

LtiSystem system_from_py(const py::sequence& a, const py::sequence& b, const py::sequence& c,
                         const py::object& d) {
    Mat am = mat_from_py(a), bm = mat_from_py(b), cm = mat_from_py(c);
    if (d.is_none()) return LtiSystem(am, bm, cm);
    return LtiSystem(am, bm, cm, mat_from_py(d.cast<py::sequence>()));
}

StateSet finite_from_py(const py::sequence& points, std::size_t ambient) {
    std::vector<Vec> pts;
    for (const auto& p : points) pts.push_back(vec_from_py(p.cast<py::sequence>()));
    return StateSet::finite(std::move(pts), ambient);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact opacity and attack-detectability analysis for discrete-time "
              "linear systems";

    m.def(
        "wus",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d) {
            return basis_to_py(wus_kernel_method(system_from_py(a, b, c, d)));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D") = py::none(),
        "Canonical basis columns of the weakly unobservable subspace.");

    m.def(
        "wus_complement",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d) {
            return basis_to_py(wus_complement(system_from_py(a, b, c, d)));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D") = py::none());

    m.def(
        "observability_matrix",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, std::size_t k) {
            return mat_to_py(observability_matrix(system_from_py(a, b, c, d), k));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("k"));

    m.def(
        "forced_response_matrix",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, std::size_t k) {
            return mat_to_py(forced_response_matrix(system_from_py(a, b, c, d), k));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("k"));

    m.def(
        "simulate",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, const py::sequence& x0, const py::sequence& u) {
            LtiSystem sys = system_from_py(a, b, c, d);
            InputSeq seq = InputSeq::from_vec(vec_from_py(u), sys.input_dim());
            return vec_to_py(simulate(sys, vec_from_py(x0), seq).stacked);
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("x0"), py::arg("u"),
        "Stacked output sequence, exact.");

    m.def(
        "is_state_opaque",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, const py::sequence& xs, const py::sequence& xns) {
            OpacityVerdict v =
                is_state_opaque(system_from_py(a, b, c, d), vec_from_py(xs), vec_from_py(xns));
            py::dict out;
            out["opaque"] = v.opaque;
            if (v.witness) {
                out["delta"] = vec_to_py(v.witness->delta);
                out["zeroing"] = vec_to_py(v.witness->zeroing.stacked);
            }
            return out;
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("xs"), py::arg("xns"));

    m.def(
        "is_strongly_opaque_finite",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, const py::sequence& xs, const py::sequence& xns) {
            LtiSystem sys = system_from_py(a, b, c, d);
            return is_strongly_opaque(sys, finite_from_py(xs, sys.state_dim()),
                                      finite_from_py(xns, sys.state_dim()))
                .opaque;
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("secret"),
        py::arg("non_secret"));

    m.def(
        "is_weakly_opaque_finite",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, const py::sequence& xs, const py::sequence& xns) {
            LtiSystem sys = system_from_py(a, b, c, d);
            return is_weakly_opaque(sys, finite_from_py(xs, sys.state_dim()),
                                    finite_from_py(xns, sys.state_dim()))
                .opaque;
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("secret"),
        py::arg("non_secret"));

    m.def(
        "largest_opaque_non_secret",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d) {
            return basis_to_py(wus_complement(system_from_py(a, b, c, d)));
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D") = py::none(),
        "Basis of the non-secret subspace; the secret set is its complement.");

    m.def(
        "synthesize_undetectable_attack",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, const py::sequence& bt, const py::sequence& dt,
           std::size_t k) -> py::object {
            LtiSystem sys = system_from_py(a, b, c, d);
            AttackChannel chan(mat_from_py(bt), mat_from_py(dt));
            auto cert = synthesize_undetectable_attack(sys, chan, k);
            if (!cert) return py::none();
            py::dict out;
            out["x0"] = vec_to_py(cert->x0);
            out["attack"] = vec_to_py(cert->attack.stacked);
            out["horizon"] = cert->horizon;
            return out;
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("Bt"), py::arg("Dt"),
        py::arg("k"));

    m.def(
        "is_attack_undetectable",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, const py::sequence& bt, const py::sequence& dt,
           const py::sequence& attack, const py::object& x0_points) {
            LtiSystem sys = system_from_py(a, b, c, d);
            AttackChannel chan(mat_from_py(bt), mat_from_py(dt));
            InputSeq seq = InputSeq::from_vec(vec_from_py(attack), chan.input_dim());
            StateSet x0 = x0_points.is_none()
                              ? StateSet::full_space(sys.state_dim())
                              : finite_from_py(x0_points.cast<py::sequence>(),
                                               sys.state_dim());
            return is_attack_undetectable(sys, chan, seq, x0);
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("Bt"), py::arg("Dt"),
        py::arg("attack"), py::arg("x0_points") = py::none(),
        "x0_points = None means the initial state ranges over all of R^n.");

    m.def(
        "zeroing_input",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d, const py::sequence& x0, std::size_t k) -> py::object {
            auto u = zeroing_input(system_from_py(a, b, c, d), vec_from_py(x0), k);
            if (!u) return py::none();
            return vec_to_py(u->stacked);
        },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("x0"), py::arg("k"));

    m.def(
        "is_observable",
        [](const py::sequence& a, const py::sequence& b, const py::sequence& c,
           const py::object& d) { return is_observable(system_from_py(a, b, c, d)); },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D") = py::none());
}
