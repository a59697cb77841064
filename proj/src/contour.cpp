#include "resint/contour.hpp"

#include <algorithm>
#include <cmath>

#include "resint/errors.hpp"

namespace resint {

Rectangle::Rectangle(double x1_, double x2_, double y1_, double y2_)
    : x1(x1_), x2(x2_), y1(y1_), y2(y2_) {
    if (!(x1 < x2) || !(y1 < y2))
        throw ParamError("rectangle requires x1 < x2 and y1 < y2");
}

bool Rectangle::contains(Complex z) const {
    return x1 < z.real() && z.real() < x2 && y1 < z.imag() && z.imag() < y2;
}

double Rectangle::boundary_distance(Complex z) const {
    const double dx = std::max({x1 - z.real(), z.real() - x2, 0.0});
    const double dy = std::max({y1 - z.imag(), z.imag() - y2, 0.0});
    const double outside = std::hypot(dx, dy);
    if (outside > 0.0) return outside;
    // inside: distance to the nearest edge
    return std::min({z.real() - x1, x2 - z.real(), z.imag() - y1, y2 - z.imag()});
}

void require_poles_clear(const std::vector<PoleMultiplicity>& poles,
                         const std::function<double(Complex)>& distance_to_contour) {
    for (const auto& p : poles)
        if (distance_to_contour(p.location) < kPoleClearance)
            throw PoleError("pole within clearance distance of the contour");
}

namespace {

bool canonical_before(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

} // namespace

QuadratureResult integrate_segment(const Evaluatable& f, Complex z_start,
                                   Complex z_end, double tol) {
    if (!(tol > 0.0))
        throw ParamError("tolerance must be positive");
    if (z_start == z_end) {
        QuadratureResult r;
        r.converged = true;
        return r;
    }
    // Canonical orientation makes reversal an exact negation.
    const bool flipped = !canonical_before(z_start, z_end);
    const Complex a = flipped ? z_end : z_start;
    const Complex b = flipped ? z_start : z_end;
    const Complex dz = b - a;
    QuadratureResult r = integrate_adaptive(
        [&](double t) { return f(a + t * dz) * dz; }, 0.0, 1.0, tol);
    if (flipped) r.value = -r.value;
    return r;
}

QuadratureResult integrate_rectangle(const Evaluatable& f, const Rectangle& rect,
                                     double tol) {
    const Complex bl(rect.x1, rect.y1), br(rect.x2, rect.y1);
    const Complex tr(rect.x2, rect.y2), tl(rect.x1, rect.y2);
    const Complex corners[5] = {bl, br, tr, tl, bl};
    QuadratureResult total;
    total.converged = true;
    for (int k = 0; k < 4; ++k) {
        QuadratureResult side =
            integrate_segment(f, corners[k], corners[k + 1], 0.25 * tol);
        total.value += side.value;
        total.error_estimate += side.error_estimate;
        total.evaluations += side.evaluations;
        total.converged = total.converged && side.converged;
    }
    if (!total.converged)
        throw QuadratureError(
            "rectangle side quadrature did not converge (singularity near the "
            "boundary or tolerance too small)");
    return total;
}

Complex two_path_difference(const Evaluatable& f, const Rectangle& rect, double tol) {
    const Complex bl(rect.x1, rect.y1), br(rect.x2, rect.y1);
    const Complex tr(rect.x2, rect.y2), tl(rect.x1, rect.y2);
    const double t = 0.25 * tol;
    // bottom-then-right path
    Complex path1 = integrate_segment(f, bl, br, t).value +
                    integrate_segment(f, br, tr, t).value;
    // left-then-top path
    Complex path2 = integrate_segment(f, bl, tl, t).value +
                    integrate_segment(f, tl, tr, t).value;
    return path1 - path2;
}

Complex integrate_circle(const Evaluatable& f, Complex center, double radius,
                         int n_points) {
    if (!(radius > 0.0))
        throw ParamError("circle radius must be positive");
    if (n_points < 16)
        throw ParamError("circle rule needs n_points >= 16");
    Complex sum(0.0, 0.0);
    for (int k = 0; k < n_points; ++k) {
        const double theta = 2.0 * M_PI * k / n_points;
        const Complex e = std::polar(1.0, theta);
        const Complex z = center + radius * e;
        Complex fz = f(z); // evaluation failure propagates
        if (!is_finite(fz))
            throw EvalError("non-finite integrand value on circle node");
        sum += fz * e;
    }
    return sum * Complex(0.0, 2.0 * M_PI * radius / n_points);
}

QuadratureResult semicircle_integral(const Evaluatable& f, double R, double tol) {
    if (!(R > 0.0))
        throw ParamError("semicircle radius must be positive");
    return integrate_adaptive(
        [&](double theta) {
            const Complex z = std::polar(R, theta);
            return f(z) * Complex(0.0, 1.0) * z; // dz = i R e^{i theta} dtheta
        },
        0.0, M_PI, tol);
}

QuadratureResult vertical_tail_integral(const SeriesEnvelope& f1,
                                        const RationalFn& f2, double x, double tol) {
    if (!(tol > 0.0))
        throw ParamError("tolerance must be positive");

    // Reject poles on (or hugging) the ray {x + yi : y >= 0}.
    for (const auto& p : f2.poles())
        if (std::abs(p.location.real() - x) < kPoleClearance &&
            p.location.imag() > -kPoleClearance)
            throw PoleError("pole of f2 on the vertical integration line");

    const double s = f1.tail_sum();
    const double b = f1.b();
    const double sup_f2 = f2.sup_on_vertical_line(x);

    // Remainder above Y is bounded by sup|f2| * S e^{-bY} / b; choose Y so
    // this sits strictly below tol/2 (factor 4 instead of 2 absorbs the
    // rounding of the log).
    const double target = 0.5 * tol;
    double height = std::max(10.0, std::log(std::max(s * sup_f2 * 4.0 / (b * tol),
                                                     1.0)) / b);
    const double tail_bound = sup_f2 * s * std::exp(-b * height) / b;

    QuadratureResult r = integrate_adaptive(
        [&](double y) {
            const Complex z(x, y);
            return f1.f1(z) * f2(z) * Complex(0.0, 1.0);
        },
        0.0, height, target);
    r.error_estimate += tail_bound;
    r.converged = r.converged && tail_bound <= target;
    return r;
}

} // namespace resint
