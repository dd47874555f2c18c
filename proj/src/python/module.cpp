#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mlv/evaluator.hpp"
#include "mlv/formulas.hpp"
#include "mlv/leveln_algebra.hpp"
#include "mlv/mlv_algebra.hpp"
#include "mlv/textio.hpp"

namespace py = pybind11;
using namespace mlv;

namespace {

NCPoly parse(const std::string& text, const std::string& family, int level) {
    Alphabet fam = family == "levelN" ? Alphabet::LevelN : Alphabet::Mlv;
    return parse_poly(text, fam, level);
}

py::dict approx_dict(const ComplexApprox& v) {
    py::dict d;
    d["value"] = v.value;
    d["err"] = v.err;
    return d;
}

EvalConfig make_cfg(long trunc, int max_power, long zeta_trunc) {
    EvalConfig cfg;
    cfg.trunc = trunc;
    cfg.max_power = max_power;
    cfg.zeta_trunc = zeta_trunc;
    return cfg;
}

} // namespace

PYBIND11_MODULE(mlvkernel, m) {
    m.doc() = "Exact algebra and numerical evaluation of twisted multiple sums";

    py::register_exception<ParseError>(m, "MlvParseError");
    py::register_exception<DomainError>(m, "MlvDomainError");
    py::register_exception<DivergenceError>(m, "MlvDivergenceError");

    py::class_<NCPoly>(m, "Poly")
        .def("__str__", [](const NCPoly& p) { return to_string(p); })
        .def("__repr__",
             [](const NCPoly& p) { return "Poly(\"" + to_string(p) + "\")"; })
        .def("__add__", [](const NCPoly& a, const NCPoly& b) { return a + b; })
        .def("__sub__", [](const NCPoly& a, const NCPoly& b) { return a - b; })
        .def("__eq__", [](const NCPoly& a, const NCPoly& b) { return a == b; })
        .def_property_readonly("level", &NCPoly::level)
        .def_property_readonly("term_count", &NCPoly::term_count)
        .def("is_zero", &NCPoly::is_zero);

    m.def("parse", &parse, py::arg("text"), py::arg("family") = "harmonic",
          py::arg("level") = 1, "Parse a word polynomial");

    m.def("stuffle", &stuffle);
    m.def("shuffle", &shuffle);
    m.def("stuffle_N", &stuffle_N);
    m.def("shuffle_N", &shuffle_N);
    m.def("map_I", &map_I);
    m.def("map_I_inv", &map_I_inv);
    m.def("map_J", &map_J);
    m.def("map_J_inv", &map_J_inv);
    m.def("fds_element", &fds_element);
    m.def("fds_element_star", &fds_element_star);
    m.def("fds_N_element", &fds_N_element);
    m.def(
        "regularize",
        [](const NCPoly& p, const std::string& side) {
            RegularizedPoly r =
                regularize(p, side == "shuffle" ? Product::Shuffle : Product::Stuffle);
            return r.coeffs;
        },
        py::arg("poly"), py::arg("side") = "star",
        "Coefficients of the y0-degree decomposition, constant term first");

    m.def(
        "eval_poly",
        [](const NCPoly& p, long trunc, int max_power, const std::string& interp) {
            return approx_dict(eval_poly(
                p, make_cfg(trunc, max_power, 1000000),
                interp == "shuffle" ? Product::Shuffle : Product::Stuffle));
        },
        py::arg("poly"), py::arg("trunc") = 20000, py::arg("max_power") = 9,
        py::arg("interp") = "star");

    m.def(
        "eval_zeta_N",
        [](const std::vector<int>& k, const std::vector<int>& a, int level, long trunc) {
            return approx_dict(
                eval_zeta_N(IndexVector{k, a}, level, make_cfg(trunc, 9, 1000000)));
        },
        py::arg("k"), py::arg("a"), py::arg("level"), py::arg("trunc") = 20000);

    m.def(
        "eval_zeta_N_direct",
        [](const std::vector<int>& k, const std::vector<int>& a, int level,
           long zeta_trunc) {
            return approx_dict(eval_zeta_N_direct(IndexVector{k, a}, level,
                                                  make_cfg(20000, 9, zeta_trunc)));
        },
        py::arg("k"), py::arg("a"), py::arg("level"), py::arg("zeta_trunc") = 1000000);

    m.def(
        "verify",
        [](const std::string& suite, int level, int kmax, int jobs) {
            SuiteConfig cfg;
            cfg.level = level;
            cfg.kmax = kmax;
            cfg.jobs = jobs;
            py::list out;
            for (const auto& r : run_suite(suite, cfg)) {
                py::dict d;
                d["id"] = r.id;
                d["pass"] = r.pass;
                d["residual"] = r.residual;
                d["budget"] = r.budget;
                d["informational"] = r.informational;
                d["note"] = r.note;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("level") = 0, py::arg("kmax") = 5,
        py::arg("jobs") = 1);
}
