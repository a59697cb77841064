#ifndef RESINT_THEOREMS_HPP
#define RESINT_THEOREMS_HPP

#include <string>
#include <vector>

#include "resint/contour.hpp"
#include "resint/envelope.hpp"
#include "resint/rational.hpp"

namespace resint {

// Which real part of the half-plane identity realizes the target integral.
enum class IntegrandPart { RealPart, ImaginaryPart };

struct HypothesisCheck {
    std::string name;
    bool satisfied;
    std::string witness;
};

struct HypothesisReport {
    std::vector<HypothesisCheck> checks;
    bool overall = false;

    void add(std::string name, bool ok, std::string witness);
};

// Product integrand f(z) = f1(z) f2(z) with f1(z) = g(e^{ibz}) an envelope
// composite and f2 rational; all poles come from f2.
struct HalfPlaneProblem {
    SeriesEnvelope f1;
    RationalFn f2;
    IntegrandPart part = IntegrandPart::ImaginaryPart;

    Evaluatable assembled() const;
};

// Machine-checkable decay hypotheses:
//   (a) envelope tail sum finite with no constant term   [f1 decay]
//   (b) rational degree gap >= 1                         [f2 decay]
//   (c) bounded horizontal integrals of |f2|             [from (b)]
//   (d) no poles on (or hugging) the real axis
// Failures are reported, never thrown.
HypothesisReport check_theorem2_hypotheses(const HalfPlaneProblem& p);

// 2*pi*i times the sum of residues of f1*f2 over the upper half-plane
// poles of f2. Refuses (HypothesisError) unless every hypothesis holds;
// `enforce_hypotheses = false` reproduces the historical failure mode and
// is used only by the catalog's blunder diagnostics.
std::pair<Complex, HypothesisReport>
evaluate_by_theorem(const HalfPlaneProblem& p, bool enforce_hypotheses = true);

// Certified truncation rectangle [-A, B] x [0, C]: both vertical sides and
// the top carry analytic bounds below eps/3, and the bottom integral agrees
// with 2*pi*i times the residue sum within eps (checked numerically).
Rectangle rectangle_epsilon_check(const HalfPlaneProblem& p, double eps);

struct JordanBounds {
    double numeric;           // int_0^pi e^{-bR sin(theta)} R dtheta
    double lemma_bound;       // pi (1 - e^{-bR}) / b
    double naive_bound_limit; // pi R^2 / (R^2 - 1) for R > 1, else +inf
    double theta_integral;    // numeric / R: the unweighted theta integral
};

// Quadrature value of the arc-decay integral against its two classical
// bounds. The unweighted theta integral is the quantity that tends to 0
// as R grows; the naive length-times-max bound tends to pi instead.
JordanBounds jordan_bounds(double R, double b);

} // namespace resint

#endif
