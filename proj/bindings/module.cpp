#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resint/catalog.hpp"
#include "resint/contour.hpp"
#include "resint/errors.hpp"
#include "resint/expr.hpp"
#include "resint/realaxis.hpp"
#include "resint/residues.hpp"
#include "resint/theorems.hpp"

namespace py = pybind11;
using namespace resint;

namespace {

Params make_params(double a, double b, double r, double c) {
    Params p;
    p.a = a;
    p.b = b;
    p.r = r;
    p.c = c;
    return p;
}

} // namespace

PYBIND11_MODULE(_resint, m) {
    m.doc() = "Residue-method evaluation and numerical verification of "
              "oscillatory improper integrals";

    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);
    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<Error>(m, "ResintError", PyExc_RuntimeError);

    py::class_<QuadratureResult>(m, "QuadratureResult")
        .def_readonly("value", &QuadratureResult::value)
        .def_readonly("error_estimate", &QuadratureResult::error_estimate)
        .def_readonly("evaluations", &QuadratureResult::evaluations)
        .def_readonly("converged", &QuadratureResult::converged)
        .def("__repr__", [](const QuadratureResult& r) {
            return "QuadratureResult(value=(" + std::to_string(r.value.real()) +
                   "+" + std::to_string(r.value.imag()) + "j), err=" +
                   std::to_string(r.error_estimate) + ")";
        });

    // expressions
    py::class_<Expr>(m, "Expr")
        .def("dump", &Expr::dump)
        .def("__call__",
             [](const Expr& e, Complex z) { return eval_expr(e, z); });
    m.def("parse_expr", [](const std::string& s) { return parse_expr(s); },
          py::arg("text"));
    m.def("eval_expr", &eval_expr, py::arg("expr"), py::arg("z"));

    // rational functions
    py::class_<PoleMultiplicity>(m, "PoleMultiplicity")
        .def_readonly("location", &PoleMultiplicity::location)
        .def_readonly("multiplicity", &PoleMultiplicity::multiplicity);
    py::class_<RationalFn>(m, "RationalFn")
        .def(py::init<std::vector<Complex>, std::vector<Complex>>(),
             py::arg("num"), py::arg("den"))
        .def("__call__", &RationalFn::operator())
        .def("poles", [](const RationalFn& f) { return rational_poles(f); })
        .def_property_readonly("deg_num", &RationalFn::deg_num)
        .def_property_readonly("deg_den", &RationalFn::deg_den);

    // envelopes
    py::class_<SeriesEnvelope>(m, "SeriesEnvelope")
        .def_static("exp_a_minus_one", &SeriesEnvelope::exp_a_minus_one,
                    py::arg("a"), py::arg("b"))
        .def_static("one_minus_cos_a", &SeriesEnvelope::one_minus_cos_a,
                    py::arg("a"), py::arg("b"))
        .def_static("sin_a", &SeriesEnvelope::sin_a, py::arg("a"), py::arg("b"))
        .def_static("geom_inverse", &SeriesEnvelope::geom_inverse, py::arg("a"),
                    py::arg("c"), py::arg("b"))
        .def_static("log_ratio", &SeriesEnvelope::log_ratio, py::arg("a"),
                    py::arg("c"), py::arg("sign"), py::arg("b"))
        .def_static("monomial", &SeriesEnvelope::monomial, py::arg("b"))
        .def_static("general", &SeriesEnvelope::general, py::arg("coefficients"),
                    py::arg("b"))
        .def("coefficient", &SeriesEnvelope::coefficient, py::arg("n"))
        .def("tail_sum", &SeriesEnvelope::tail_sum)
        .def("g", &SeriesEnvelope::g, py::arg("w"))
        .def("f1", &SeriesEnvelope::f1, py::arg("z"));
    m.def(
        "envelope_bounds",
        [](const SeriesEnvelope& g, double y) {
            EnvelopeBounds b = envelope_bounds(g, y);
            return py::make_tuple(b.sup_bound, b.tail_integral_bound);
        },
        py::arg("g"), py::arg("y"));

    // contours
    py::class_<Rectangle>(m, "Rectangle")
        .def(py::init<double, double, double, double>(), py::arg("x1"),
             py::arg("x2"), py::arg("y1"), py::arg("y2"))
        .def_readonly("x1", &Rectangle::x1)
        .def_readonly("x2", &Rectangle::x2)
        .def_readonly("y1", &Rectangle::y1)
        .def_readonly("y2", &Rectangle::y2);
    m.def("integrate_segment", &integrate_segment, py::arg("f"),
          py::arg("z_start"), py::arg("z_end"), py::arg("tol") = 1e-10);
    m.def("integrate_rectangle", &integrate_rectangle, py::arg("f"),
          py::arg("rect"), py::arg("tol") = 1e-10);
    m.def("two_path_difference", &two_path_difference, py::arg("f"),
          py::arg("rect"), py::arg("tol") = 1e-10);
    m.def("integrate_circle", &integrate_circle, py::arg("f"), py::arg("center"),
          py::arg("radius"), py::arg("n_points") = 64);
    m.def("semicircle_integral", &semicircle_integral, py::arg("f"), py::arg("R"),
          py::arg("tol") = 1e-10);
    m.def("vertical_tail_integral", &vertical_tail_integral, py::arg("f1"),
          py::arg("f2"), py::arg("x"), py::arg("tol") = 1e-10);

    // residues
    m.def("residue_simple_pole_formula", &residue_simple_pole_formula,
          py::arg("num"), py::arg("den"), py::arg("z0"));
    m.def("residue_via_circle", &residue_via_circle, py::arg("f"), py::arg("z0"),
          py::arg("radius"), py::arg("n_points") = 64);
    m.def("residue_limit_extrapolated", &residue_limit_extrapolated, py::arg("f"),
          py::arg("z0"));

    // theorems
    py::enum_<IntegrandPart>(m, "IntegrandPart")
        .value("RealPart", IntegrandPart::RealPart)
        .value("ImaginaryPart", IntegrandPart::ImaginaryPart);
    py::class_<HypothesisCheck>(m, "HypothesisCheck")
        .def_readonly("name", &HypothesisCheck::name)
        .def_readonly("satisfied", &HypothesisCheck::satisfied)
        .def_readonly("witness", &HypothesisCheck::witness);
    py::class_<HypothesisReport>(m, "HypothesisReport")
        .def_readonly("checks", &HypothesisReport::checks)
        .def_readonly("overall", &HypothesisReport::overall);
    py::class_<HalfPlaneProblem>(m, "HalfPlaneProblem")
        .def(py::init<SeriesEnvelope, RationalFn, IntegrandPart>(), py::arg("f1"),
             py::arg("f2"), py::arg("part") = IntegrandPart::ImaginaryPart);
    m.def("check_theorem2_hypotheses", &check_theorem2_hypotheses, py::arg("p"));
    m.def("evaluate_by_theorem", &evaluate_by_theorem, py::arg("p"),
          py::arg("enforce_hypotheses") = true);
    m.def("rectangle_epsilon_check", &rectangle_epsilon_check, py::arg("p"),
          py::arg("eps"));
    m.def(
        "jordan_bounds",
        [](double R, double b) {
            JordanBounds jb = jordan_bounds(R, b);
            py::dict d;
            d["numeric"] = jb.numeric;
            d["lemma_bound"] = jb.lemma_bound;
            d["naive_bound_limit"] = jb.naive_bound_limit;
            d["theta_integral"] = jb.theta_integral;
            return d;
        },
        py::arg("R"), py::arg("b"));

    // real axis
    m.def("accelerate_sequence", &accelerate_sequence, py::arg("partial_sums"));
    m.def("divergence_series_f", &divergence_series_f, py::arg("a"), py::arg("b"),
          py::arg("x"));
    m.def(
        "dirichlet_bound_check",
        [](double a, const std::vector<double>& rs) {
            DirichletCheck c = dirichlet_bound_check(a, rs);
            py::dict d;
            d["passed"] = c.passed;
            d["bound"] = c.bound;
            d["integrals"] = c.integrals;
            d["failure_witness"] = c.failure_witness;
            return d;
        },
        py::arg("a"), py::arg("R_samples"));
    m.def(
        "divergence_probe",
        [](double a, double b, double r, const std::vector<double>& grid) {
            DivergenceProbe p = divergence_probe(a, b, r, grid);
            return py::make_tuple(p.raw, p.stabilized);
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("R_grid"));

    // catalog
    m.def("formulas", [] {
        std::vector<std::string> names;
        for (FormulaId id : all_formulas()) names.push_back(formula_name(id));
        return names;
    });
    m.def("formula_description",
          [](const std::string& name) {
              return formula_description(formula_from_name(name));
          },
          py::arg("formula"));
    m.def(
        "closed_form",
        [](const std::string& name, double a, double b, double r, double c) {
            return closed_form(formula_from_name(name), make_params(a, b, r, c));
        },
        py::arg("formula"), py::arg("a") = 1.0, py::arg("b") = 1.0,
        py::arg("r") = 1.0, py::arg("c") = 2.0);
    m.def(
        "evaluate_catalog_integral",
        [](const std::string& name, double a, double b, double r, double c,
           double tol, int max_chunks) {
            return evaluate_real_integral(
                build_integrand(formula_from_name(name), make_params(a, b, r, c)),
                tol, max_chunks);
        },
        py::arg("formula"), py::arg("a") = 1.0, py::arg("b") = 1.0,
        py::arg("r") = 1.0, py::arg("c") = 2.0, py::arg("tol") = 1e-8,
        py::arg("max_chunks") = 512);
    m.def(
        "route_value",
        [](const std::string& name, double a, double b, double r, double c,
           bool blunder) {
            const FormulaId id = formula_from_name(name);
            return route_value(build_route(id, make_params(a, b, r, c), blunder),
                               !blunder);
        },
        py::arg("formula"), py::arg("a") = 1.0, py::arg("b") = 1.0,
        py::arg("r") = 1.0, py::arg("c") = 2.0, py::arg("blunder") = false);
    m.def(
        "verify_formula",
        [](const std::string& name, double a, double b, double r, double c,
           double tol, int max_chunks) {
            VerificationReport rep = verify_formula(
                formula_from_name(name), make_params(a, b, r, c), tol, max_chunks);
            py::dict d;
            d["formula"] = formula_name(rep.id);
            d["closed_form"] = rep.closed_value;
            if (rep.numeric) {
                d["numeric"] = rep.numeric->value;
                d["numeric_rel_error"] = rep.numeric->rel_error;
            }
            if (rep.theorem) {
                d["theorem"] = rep.theorem->value;
                d["theorem_rel_error"] = rep.theorem->rel_error;
            }
            d["errors"] = rep.errors;
            d["pass"] = rep.pass;
            return d;
        },
        py::arg("formula"), py::arg("a") = 1.0, py::arg("b") = 1.0,
        py::arg("r") = 1.0, py::arg("c") = 2.0, py::arg("tol") = 1e-6,
        py::arg("max_chunks") = 512);
    m.def(
        "reduce_fake_parameter",
        [](double a, double b, double r, double c) {
            Params p = reduce_fake_parameter(make_params(a, b, r, c));
            return py::make_tuple(p.a, p.b, p.r, p.c);
        },
        py::arg("a"), py::arg("b"), py::arg("r"), py::arg("c") = 2.0);

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
