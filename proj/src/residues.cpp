#include "resint/residues.hpp"

#include <algorithm>
#include <cmath>

#include "resint/errors.hpp"

namespace resint {

Complex residue_simple_pole_formula(const Evaluatable& num, const RationalFn& den,
                                    Complex z0) {
    // z0 must match a simple root of the denominator.
    const PoleMultiplicity* hit = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : den.poles()) {
        const double d = std::abs(p.location - z0);
        if (d < best) {
            best = d;
            hit = &p;
        }
    }
    if (hit == nullptr || best > 1e-6 * (1.0 + std::abs(z0)))
        throw PoleError("z0 is not a root of the denominator");
    if (hit->multiplicity != 1)
        throw PoleError("simple-pole formula applied at a multiple root");

    const Complex dprime = den.eval_den_derivative(z0);
    if (dprime == Complex(0.0, 0.0))
        throw PoleError("denominator derivative vanishes at z0");
    const Complex n = num(z0);
    if (!is_finite(n))
        throw EvalError("numerator evaluation failed at z0");
    return n / dprime;
}

Complex residue_via_circle(const Evaluatable& f, Complex z0, double radius,
                           int n_points) {
    if (!(radius > 0.0))
        throw ParamError("circle radius must be positive");
    n_points = std::max(n_points, 16);
    const Complex two_pi_i(0.0, 2.0 * M_PI);

    Complex prev = integrate_circle(f, z0, radius, n_points) / two_pi_i;
    for (int n = 2 * n_points; n <= 1 << 17; n *= 2) {
        const Complex cur = integrate_circle(f, z0, radius, n) / two_pi_i;
        if (std::abs(cur - prev) <= 1e-12 * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    throw PoleError(
        "circle rule did not settle under point doubling "
        "(another singularity inside the circle?)");
}

Complex residue_limit_extrapolated(const Evaluatable& f, Complex z0) {
    // g(h) = h f(z0 + h) = residue + a1 h + a2 h^2 + ... for a simple pole.
    constexpr int k_lo = 3, k_hi = 12;
    constexpr int n = k_hi - k_lo + 1;
    Complex g[n];
    double mags[n];
    for (int k = k_lo; k <= k_hi; ++k) {
        const double h = std::ldexp(1.0, -k);
        const Complex value = f(z0 + Complex(h, 0.0));
        if (!is_finite(value))
            throw EvalError("integrand evaluation failed near z0");
        g[k - k_lo] = h * value;
        mags[k - k_lo] = std::abs(g[k - k_lo]);
    }

    // A non-simple pole makes h f(z0+h) blow up like h^{1-m}.
    int growing = 0;
    for (int j = 1; j < n; ++j)
        if (mags[j] > 1.5 * mags[j - 1] && mags[j] > 1e-12) ++growing;
    if (growing >= n / 2)
        throw PoleError("extrapolation diverges: pole is not simple");

    // Richardson with ratio 2: kill the h term, then the h^2 term.
    Complex r1[n - 1];
    for (int j = 0; j + 1 < n; ++j)
        r1[j] = 2.0 * g[j + 1] - g[j];
    Complex r2[n - 2];
    for (int j = 0; j + 2 < n; ++j)
        r2[j] = (4.0 * r1[j + 1] - r1[j]) / 3.0;

    // Pick the last entry whose step-to-step change is smallest; rounding
    // takes over once h^3 truncation is below machine noise.
    Complex best = r2[n - 3];
    double best_change = std::abs(r2[n - 3] - r2[n - 4]);
    for (int j = n - 4; j >= 1; --j) {
        const double change = std::abs(r2[j] - r2[j - 1]);
        if (change < best_change) {
            best_change = change;
            best = r2[j];
        }
    }
    if (!(best_change <= 1e-7 * std::max(1.0, std::abs(best))))
        throw PoleError("extrapolation did not settle (pole may not be simple)");
    return best;
}

double default_circle_radius(const RationalFn& den, Complex z0) {
    double nearest = 2.0;
    for (const auto& p : den.poles()) {
        const double d = std::abs(p.location - z0);
        if (d > 1e-9) nearest = std::min(nearest, d);
    }
    return std::min(0.5 * nearest, 1.0);
}

} // namespace resint
