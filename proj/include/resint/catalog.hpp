#ifndef RESINT_CATALOG_HPP
#define RESINT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "resint/realaxis.hpp"
#include "resint/theorems.hpp"

namespace resint {

// Positive parameters of the catalog integrands. c is used only by the
// entries that demand c > a.
struct Params {
    double a = 1.0;
    double b = 1.0;
    double r = 1.0;
    double c = 2.0;
};

enum class FormulaId {
    F1_quiz,
    F2_parameters,
    F5_discont,
    F6_hyper_one,
    F7_hyper_two,
    F8_denom_one,
    F9_log_one,
    F10_log_two,
    FD_dissertation,
};

const std::vector<FormulaId>& all_formulas();
std::string formula_name(FormulaId id);
FormulaId formula_from_name(const std::string& name); // throws ParamError
std::string formula_description(FormulaId id);
bool formula_uses_c(FormulaId id);
bool formula_has_route(FormulaId id); // false only for FD_dissertation

// Validates positivity and the c > a constraint where demanded; F1 pins
// (a,b,r) = (1,1,1) and F5 pins r = 1.
Params canonical_params(FormulaId id, const Params& p);

// The printed closed form of the entry.
double closed_form(FormulaId id, const Params& p);

// Real-axis integrand for the numeric path.
OscillatoryIntegrand build_integrand(FormulaId id, const Params& p);

// Envelope/rational/part/prefactor assembly behind each entry:
//   value = prefactor * part(2 pi i * sum of residues) + constant_offset.
struct DerivationRoute {
    SeriesEnvelope g;
    RationalFn f2;
    IntegrandPart part;
    double prefactor;
    double constant_offset;

    HalfPlaneProblem problem() const { return {g, f2, part}; }
};

// blunder = true retains the constant term the exponential envelope must
// drop (the documented historical failure; exponential entries only) and
// bypasses hypothesis enforcement when the route is evaluated.
DerivationRoute build_route(FormulaId id, const Params& p, bool blunder = false);

// Residue-route evaluation of the entry's value.
double route_value(const DerivationRoute& route, bool enforce_hypotheses = true);

// b is a fake parameter: (a, b, r, c) -> (a, 1, b*r, c). The closed forms
// built on the odd kernel x/(x^2+r^2) are invariant; the even-kernel entry
// F9 picks up the substitution Jacobian, closed_form(p) = b * closed_form
// (reduced p).
Params reduce_fake_parameter(const Params& p);
double fake_parameter_scale(FormulaId id, const Params& p);

struct PathComparison {
    double value = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
    bool pass = false;
};

struct VerificationReport {
    FormulaId id;
    Params params;
    double tol = 0.0;
    double closed_value = 0.0;
    std::optional<PathComparison> numeric; // realaxis quadrature path
    std::optional<PathComparison> theorem; // residue route path
    std::optional<HypothesisReport> hypotheses;
    QuadratureResult numeric_detail;
    std::vector<std::string> errors;
    bool pass = false;
};

// Three-path comparison: numeric quadrature and the residue route against
// the closed form (numeric at `tol` relative, route at 1e-10 relative).
// FD_dissertation has no route and compares numeric only. Component
// failures are recorded in the report, not thrown.
VerificationReport verify_formula(FormulaId id, const Params& p, double tol,
                                  int max_chunks = 512);

} // namespace resint

#endif
