#include "bargheat/bargmann.hpp"
#include "bargheat/cli.hpp"
#include "bargheat/errors.hpp"
#include "bargheat/heatsolve.hpp"
#include "bargheat/operators.hpp"
#include "bargheat/suites.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace bargheat;

namespace {

ops::Kind kind_of(const std::string& name) {
    const auto k = ops::parse_kind(name);
    if (!k) throw UsageError("unknown operator '" + name + "'");
    return *k;
}

py::list reports_to_list(const suites::Reports& reports) {
    py::list out;
    for (const auto& r : reports) {
        py::dict d;
        d["check"] = r.check;
        d["params"] = r.params;
        d["defect"] = r.defect;
        d["tolerance"] = r.tolerance;
        d["passed"] = r.pass;
        d["seconds"] = r.seconds;
        out.append(d);
    }
    return out;
}

suites::SuiteOptions suite_options(std::optional<double> a, int order, double tolerance) {
    return {a, order, tolerance};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bargmann transform, closed-form heat flows and their verification suites";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_TypeError);
    py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<Side>(m, "Side").value("REAL", Side::Real).value("COMPLEX", Side::Complex);
    py::enum_<bargmann::Method>(m, "Method")
        .value("EXACT", bargmann::Method::Exact)
        .value("SERIES", bargmann::Method::Series)
        .value("QUADRATURE", bargmann::Method::Quadrature);
    py::enum_<heat::MehlerForm>(m, "MehlerForm")
        .value("PRODUCT", heat::MehlerForm::Product)
        .value("HYPERBOLIC", heat::MehlerForm::Hyperbolic)
        .value("HYPERBOLIC_UNHALVED", heat::MehlerForm::HyperbolicUnhalved);

    py::class_<PolyGauss>(m, "PolyGauss", "p(v) exp(alpha v^2 + beta v)")
        .def(py::init<Side, std::vector<cplx>, cplx, cplx>(), py::arg("side"), py::arg("coeffs"),
             py::arg("alpha") = cplx(0.0), py::arg("beta") = cplx(0.0))
        .def_static("parse", &cli::parse_init, py::arg("text"), py::arg("fallback") = Side::Real,
                    "Expression in x or z (or a text record).")
        .def_static("from_record", &from_record)
        .def("to_record", &to_record)
        .def_property_readonly("side", &PolyGauss::side)
        .def_property_readonly("coeffs", &PolyGauss::coeffs)
        .def_property_readonly("alpha", &PolyGauss::alpha)
        .def_property_readonly("beta", &PolyGauss::beta)
        .def_property_readonly("degree", &PolyGauss::degree)
        .def("is_zero", &PolyGauss::is_zero)
        .def("in_l2", &PolyGauss::in_l2)
        .def("__call__", &PolyGauss::operator(), py::arg("v"))
        .def("derivative", [](const PolyGauss& g) { return derivative(g); })
        .def("integral", [](const PolyGauss& g) { return integral(g); })
        .def("distance", [](const PolyGauss& f, const PolyGauss& g) { return distance(f, g); })
        .def("__add__", [](const PolyGauss& f, const PolyGauss& g) { return f + g; })
        .def("__sub__", [](const PolyGauss& f, const PolyGauss& g) { return f - g; })
        .def("__mul__", [](const PolyGauss& f, cplx s) { return s * f; })
        .def("__rmul__", [](const PolyGauss& f, cplx s) { return s * f; })
        .def("__neg__", [](const PolyGauss& f) { return -f; })
        .def("__eq__", [](const PolyGauss& f, const PolyGauss& g) { return f == g; })
        .def("__repr__", [](const PolyGauss& g) { return "PolyGauss('" + to_record(g) + "')"; });

    m.def(
        "forward", [](const PolyGauss& f, double a, cplx z) { return bargmann::forward(f, {a}, z); }, py::arg("f"),
        py::arg("a"), py::arg("z"), "B_a f at z, exact path.");
    m.def(
        "forward_quadrature",
        [](const PolyGauss& f, double a, cplx z, int order) { return bargmann::forward_quadrature(f, {a, order}, z); },
        py::arg("f"), py::arg("a"), py::arg("z"), py::arg("order") = 64);
    m.def(
        "forward_image", [](const PolyGauss& f, double a) { return bargmann::forward_image(f, {a}); }, py::arg("f"),
        py::arg("a"));
    m.def(
        "inverse",
        [](const PolyGauss& F, double a, double x, bargmann::Method method, int order) {
            return bargmann::inverse(F, {a, order}, x, method);
        },
        py::arg("F"), py::arg("a"), py::arg("x"), py::arg("method") = bargmann::Method::Series,
        py::arg("order") = 64);
    m.def(
        "inverse_image", [](const PolyGauss& F, double a) { return bargmann::inverse_image(F, {a}); }, py::arg("F"),
        py::arg("a"));

    m.def(
        "apply", [](const std::string& op, double a, const PolyGauss& g) { return ops::apply({kind_of(op), a}, g); },
        py::arg("op"), py::arg("a"), py::arg("g"));
    m.def(
        "intertwine_residual",
        [](const std::string& name, const PolyGauss& f, double a) {
            for (auto id : {ops::Identity::LadderPosition, ops::Identity::LadderMomentum, ops::Identity::LadderLowering,
                            ops::Identity::LadderRaising, ops::Identity::HarmonicToEuler,
                            ops::Identity::EulerToHarmonic})
                if (ops::identity_name(id) == name) return ops::intertwine_residual(id, f, a);
            throw UsageError("unknown identity '" + name + "'");
        },
        py::arg("identity"), py::arg("f"), py::arg("a"));

    m.def(
        "solve",
        [](const std::string& op, double a, double t, const PolyGauss& init, cplx point, bargmann::Method method,
           int order) { return heat::solution_value({{kind_of(op), a}, t, init}, point, method, order); },
        py::arg("op"), py::arg("a"), py::arg("t"), py::arg("init"), py::arg("point"),
        py::arg("method") = bargmann::Method::Exact, py::arg("order") = 64);
    m.def(
        "solution_image",
        [](const std::string& op, double a, double t, const PolyGauss& init) {
            return heat::solution_image({{kind_of(op), a}, t, init});
        },
        py::arg("op"), py::arg("a"), py::arg("t"), py::arg("init"));
    m.def(
        "conjugation_image",
        [](const std::string& op, double a, double t, const PolyGauss& init) {
            return heat::conjugation_image({{kind_of(op), a}, t, init});
        },
        py::arg("op"), py::arg("a"), py::arg("t"), py::arg("init"));
    m.def(
        "exact_residual",
        [](const std::string& op, double a, double t, const PolyGauss& init) {
            return heat::exact_residual({{kind_of(op), a}, t, init});
        },
        py::arg("op"), py::arg("a"), py::arg("t"), py::arg("init"));

    m.def("mehler_kernel", &heat::mehler_kernel, py::arg("a"), py::arg("t"), py::arg("x"), py::arg("s"),
          py::arg("form") = heat::MehlerForm::Product);
    m.def(
        "harmonic_kernel_complex",
        [](double a, double t, cplx z, cplx w, bool two_i) {
            return heat::harmonic_kernel_complex(a, t, z, w,
                                                 two_i ? heat::Prefactor::TwoI : heat::Prefactor::Reproducing);
        },
        py::arg("a"), py::arg("t"), py::arg("z"), py::arg("w"), py::arg("two_i") = false);

    m.def("suite_names", &suites::suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, std::optional<double> a, int order, double tolerance) {
            return reports_to_list(suites::run_suite(name, suite_options(a, order, tolerance)));
        },
        py::arg("name"), py::arg("a") = py::none(), py::arg("order") = 64, py::arg("tolerance") = 1e-8);
    m.def(
        "table",
        [](std::optional<double> a, int order, double tolerance) {
            return reports_to_list(suites::table(suite_options(a, order, tolerance)));
        },
        py::arg("a") = py::none(), py::arg("order") = 64, py::arg("tolerance") = 1e-8);

    m.def(
        "run_config",
        [](const std::string& text) {
            cli::RunConfig config;
            cli::apply_config_text(text, config);
            std::ostringstream out, err;
            const int status = cli::run(config, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("text"), "Runs a 'key = value' config; returns (status, stdout, stderr).");
}
