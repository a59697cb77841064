#include "resint/theorems.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "resint/errors.hpp"
#include "resint/residues.hpp"

namespace resint {

void HypothesisReport::add(std::string name, bool ok, std::string witness) {
    checks.push_back({std::move(name), ok, std::move(witness)});
    overall = true;
    for (const auto& c : checks) overall = overall && c.satisfied;
}

Evaluatable HalfPlaneProblem::assembled() const {
    SeriesEnvelope g = f1;
    RationalFn r = f2;
    return [g, r](Complex z) { return g.f1(z) * r(z); };
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

double min_abs_pole_imag(const RationalFn& f2) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : f2.poles())
        m = std::min(m, std::abs(p.location.imag()));
    return m;
}

} // namespace

HypothesisReport check_theorem2_hypotheses(const HalfPlaneProblem& p) {
    HypothesisReport report;

    const double s = p.f1.tail_sum();
    const bool no_constant = p.f1.retained_constant() == 0.0;
    const bool s_finite = std::isfinite(s);
    report.add("f1 uniform decay (series tail finite, g(0) = 0)",
               s_finite && no_constant,
               "sum |c_n| = " + fmt(s) + ", g(0) = " + fmt(p.f1.retained_constant()));

    const int gap = p.f2.degree_gap();
    report.add("f2 vanishes at infinity (degree gap >= 1)", gap >= 1,
               "deg_den - deg_num = " + std::to_string(gap));

    // For a rational f2 with positive degree gap, |f2| <= const / y on any
    // horizontal line of height y, so the |f2| integrals over bounded
    // intervals stay bounded; recorded explicitly.
    report.add("bounded horizontal integrals of |f2|", gap >= 1,
               gap >= 1 ? "implied by rational decay" : "requires degree gap >= 1");

    const double min_imag = min_abs_pole_imag(p.f2);
    report.add("no poles on the real axis", min_imag >= 1e-8,
               "min |Im pole| = " + fmt(min_imag));
    return report;
}

std::pair<Complex, HypothesisReport>
evaluate_by_theorem(const HalfPlaneProblem& p, bool enforce_hypotheses) {
    HypothesisReport report = check_theorem2_hypotheses(p);
    if (enforce_hypotheses && !report.overall)
        throw HypothesisError("half-plane theorem hypotheses fail; refusing to sum residues");

    SeriesEnvelope f1 = p.f1;
    Complex sum(0.0, 0.0);
    for (const auto& pole : p.f2.poles()) {
        if (pole.location.imag() <= 0.0) continue;
        if (pole.location.imag() < 1e-8)
            throw PoleError("pole hugging the real axis");
        if (pole.multiplicity == 1) {
            const RationalFn& f2 = p.f2;
            auto num = [&f1, &f2](Complex z) { return f1.f1(z) * f2.eval_num(z); };
            sum += residue_simple_pole_formula(num, p.f2, pole.location);
        } else {
            const double radius = default_circle_radius(p.f2, pole.location);
            sum += residue_via_circle(p.assembled(), pole.location, radius, 64);
        }
    }
    return {Complex(0.0, 2.0 * M_PI) * sum, report};
}

Rectangle rectangle_epsilon_check(const HalfPlaneProblem& p, double eps) {
    if (!(eps > 0.0))
        throw ParamError("eps must be positive");
    if (eps < 1e-13)
        throw QuadratureError("eps below achievable binary64 accuracy");

    HypothesisReport report = check_theorem2_hypotheses(p);
    if (!report.overall)
        throw HypothesisError("hypotheses fail; no truncation rectangle exists");

    const double s = p.f1.tail_sum();
    const double b = p.f1.b();
    const double third = eps / 3.0;

    double pole_reach = 1.0;
    for (const auto& pole : p.f2.poles())
        pole_reach = std::max(pole_reach,
                              std::abs(pole.location) + 1.0);

    // Vertical sides: |int_0^C f(x+yi) i dy| <= sup|f2| * S / b on the line
    // Re z = x. Push A and B out until the bound drops below eps/3.
    auto side_bound = [&](double x) { return p.f2.sup_on_vertical_line(x) * s / b; };
    double edge = pole_reach;
    for (int k = 0; k < 400 && (side_bound(edge) >= third || side_bound(-edge) >= third);
         ++k)
        edge *= 1.5;
    if (side_bound(edge) >= third || side_bound(-edge) >= third)
        throw QuadratureError("vertical bound search failed for requested eps");
    const double a_corner = edge, b_corner = edge;

    // Top edge: |f2| <= 2^deg * sum|num| / (|lead| C^gap) once C clears all
    // poles by a factor 2; the e^{-bC} envelope does the rest.
    double num_sum = 0.0;
    for (const auto& ck : p.f2.num()) num_sum += std::abs(ck);
    const double lead = std::abs(p.f2.den().back());
    double height = std::max(10.0, 2.0 * pole_reach);
    for (int k = 0; k < 4000; ++k) {
        const double f2_top = std::pow(2.0, p.f2.deg_den()) * num_sum /
                              (lead * std::pow(height, p.f2.degree_gap()));
        const double top_bound =
            (a_corner + b_corner) * s * std::exp(-b * height) * f2_top;
        if (top_bound < third) break;
        height += std::max(1.0, 2.0 / b);
    }

    Rectangle rect(-a_corner, b_corner, 0.0, height);

    // The bottom edge must agree with the residue sum within eps.
    auto [value, rep] = evaluate_by_theorem(p);
    (void)rep;
    QuadratureResult bottom = integrate_adaptive(
        [&](double x) { return p.f1.f1(Complex(x, 0.0)) * p.f2(Complex(x, 0.0)); },
        -a_corner, b_corner, 0.1 * eps);
    if (std::abs(bottom.value - value) >= eps)
        throw QuadratureError("truncated real integral misses the residue sum");
    return rect;
}

JordanBounds jordan_bounds(double R, double b) {
    if (!(R > 0.0) || !(b > 0.0))
        throw ParamError("jordan_bounds requires R > 0 and b > 0");
    QuadratureResult q = integrate_adaptive_real(
        [&](double theta) { return std::exp(-b * R * std::sin(theta)) * R; },
        0.0, M_PI, 1e-12);
    JordanBounds out;
    out.numeric = q.value.real();
    out.lemma_bound = M_PI * (-std::expm1(-b * R)) / b;
    out.naive_bound_limit = R > 1.0 ? M_PI * R * R / (R * R - 1.0)
                                    : std::numeric_limits<double>::infinity();
    out.theta_integral = out.numeric / R;
    return out;
}

} // namespace resint
