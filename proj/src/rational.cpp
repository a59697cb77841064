#include "resint/rational.hpp"

#include <algorithm>
#include <cmath>

#include "resint/errors.hpp"

namespace resint {

Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

namespace {

std::vector<Complex> derivative_coeffs(const std::vector<Complex>& c) {
    std::vector<Complex> d;
    for (std::size_t k = 1; k < c.size(); ++k)
        d.push_back(static_cast<double>(k) * c[k]);
    if (d.empty()) d.push_back(Complex(0.0, 0.0));
    return d;
}

// Cauchy bound: every root satisfies |z| <= 1 + max |a_k / a_n|.
double root_radius_bound(const std::vector<Complex>& c) {
    double lead = std::abs(c.back());
    double m = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        m = std::max(m, std::abs(c[k]) / lead);
    return 1.0 + m;
}

std::vector<Complex> aberth_iterate(const std::vector<Complex>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    const std::vector<Complex> dc = derivative_coeffs(c);

    // Initial guesses on a circle, perturbed so no symmetry of the
    // polynomial can trap two iterates on top of each other.
    const double radius = 0.5 * root_radius_bound(c) + 0.25;
    std::vector<Complex> z(n);
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * M_PI * k / n + 0.39 + 0.01 * k;
        z[k] = std::polar(radius * (1.0 + 0.05 * k / std::max(1, n)), angle);
    }

    const int max_iter = 400;
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            Complex p = polynomial_eval(c, z[k]);
            Complex dp = polynomial_eval(dc, z[k]);
            if (dp == Complex(0.0, 0.0)) {
                z[k] += Complex(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            Complex w = p / dp;
            Complex s(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex d = z[k] - z[j];
                if (d == Complex(0.0, 0.0)) d = Complex(1e-14, 1e-14);
                s += Complex(1.0, 0.0) / d;
            }
            Complex denom = Complex(1.0, 0.0) - w * s;
            Complex step = (denom == Complex(0.0, 0.0)) ? w : w / denom;
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
        }
        if (worst < 1e-14)
            return z;
    }
    throw PoleError("root iteration did not converge");
}

} // namespace

std::vector<PoleMultiplicity> polynomial_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    if (c.empty() || c.back() == Complex(0.0, 0.0))
        throw PoleError("leading denominator coefficient must be nonzero");
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1)
        throw PoleError("denominator must have degree >= 1");

    std::vector<Complex> raw;
    if (n == 1) {
        raw.push_back(-c[0] / c[1]);
    } else {
        raw = aberth_iterate(c);
    }

    // Cluster raw roots: radius 1e-8 * (1 + |root|).
    std::vector<bool> used(raw.size(), false);
    std::vector<PoleMultiplicity> result;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (used[k]) continue;
        Complex sum = raw[k];
        int count = 1;
        used[k] = true;
        for (std::size_t j = k + 1; j < raw.size(); ++j) {
            if (used[j]) continue;
            double tol = 1e-8 * (1.0 + std::abs(raw[k]));
            if (std::abs(raw[j] - raw[k]) < tol) {
                used[j] = true;
                sum += raw[j];
                ++count;
            }
        }
        result.push_back({sum / static_cast<double>(count), count});
    }

    // Multiplicity-aware Newton polish: for an m-fold root the step
    // m * p/p' restores quadratic convergence.
    const std::vector<Complex> dc = derivative_coeffs(c);
    for (auto& pm : result) {
        for (int it = 0; it < 40; ++it) {
            Complex p = polynomial_eval(c, pm.location);
            Complex dp = polynomial_eval(dc, pm.location);
            if (dp == Complex(0.0, 0.0)) break;
            Complex step = static_cast<double>(pm.multiplicity) * p / dp;
            pm.location -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(pm.location)))
                break;
        }
    }

    // Residual check. |p| near an m-fold root z0 scales like
    // |lead| * |z - z0|^m * prod of distances to the other roots; demand
    // the equivalent of a location error below ~1e-7.
    double scale = 0.0;
    for (const auto& ck : c) scale = std::max(scale, std::abs(ck));
    for (const auto& pm : result) {
        double allowed = scale * std::pow(1e-7 * (1.0 + std::abs(pm.location)),
                                          pm.multiplicity) *
                         std::pow(2.0 + std::abs(pm.location), n - pm.multiplicity);
        if (std::abs(polynomial_eval(c, pm.location)) > std::max(allowed, 1e-250))
            throw PoleError("root residual above refinement tolerance");
    }

    std::sort(result.begin(), result.end(),
              [](const PoleMultiplicity& a, const PoleMultiplicity& b) {
                  if (a.location.real() != b.location.real())
                      return a.location.real() < b.location.real();
                  return a.location.imag() < b.location.imag();
              });
    return result;
}

RationalFn::RationalFn(std::vector<Complex> num, std::vector<Complex> den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.empty()) num_.push_back(Complex(0.0, 0.0));
    if (den_.empty() || den_.back() == Complex(0.0, 0.0))
        throw ParamError("denominator leading coefficient must be nonzero");
    for (const auto& c : num_)
        if (!is_finite(c)) throw ParamError("non-finite numerator coefficient");
    for (const auto& c : den_)
        if (!is_finite(c)) throw ParamError("non-finite denominator coefficient");
}

Complex RationalFn::eval_num(Complex z) const { return polynomial_eval(num_, z); }
Complex RationalFn::eval_den(Complex z) const { return polynomial_eval(den_, z); }

Complex RationalFn::eval_den_derivative(Complex z) const {
    Complex acc(0.0, 0.0);
    for (std::size_t k = den_.size(); k-- > 1;)
        acc = acc * z + static_cast<double>(k) * den_[k];
    return acc;
}

Complex RationalFn::operator()(Complex z) const {
    Complex d = eval_den(z);
    if (d == Complex(0.0, 0.0))
        throw EvalError("rational function evaluated at a pole");
    Complex r = eval_num(z) / d;
    if (!is_finite(r))
        throw EvalError("rational function overflow");
    return r;
}

std::function<Complex(Complex)> RationalFn::evaluator() const {
    RationalFn copy = *this;
    return [copy](Complex z) { return copy(z); };
}

const std::vector<PoleMultiplicity>& RationalFn::poles() const {
    if (!poles_ready_) {
        poles_ = polynomial_roots(den_);
        poles_ready_ = true;
    }
    return poles_;
}

std::vector<PoleMultiplicity> rational_poles(const RationalFn& f) {
    if (f.deg_den() < 1)
        throw PoleError("denominator must have degree >= 1");
    return f.poles();
}

double RationalFn::sup_on_vertical_line(double x) const {
    double pole_reach = 1.0;
    for (const auto& p : poles())
        pole_reach = std::max(pole_reach, std::abs(p.location));

    // Sample [0, Ys] densely; above Ys every pole is cleared by |z|/2.
    const double ys = std::max({10.0, 4.0 * pole_reach, 2.0 * std::abs(x)});
    double m = 0.0;
    const int n_samples = 1024;
    for (int k = 0; k <= n_samples; ++k) {
        Complex z(x, ys * k / n_samples);
        Complex d = eval_den(z);
        if (d == Complex(0.0, 0.0))
            throw PoleError("pole on the sampled vertical line");
        m = std::max(m, std::abs(eval_num(z) / d));
    }

    // Tail: for |z| >= ys >= 2*max|pole|, |den| >= |lead| (|z|/2)^deg_den
    // and |num| <= sum|n_k| |z|^deg_num (ys >= 1), so |f| decays like
    // |z|^{-gap}; evaluate the bound at |z| = ys.
    double num_sum = 0.0;
    for (const auto& ck : num_) num_sum += std::abs(ck);
    double tail = std::pow(2.0, deg_den()) * num_sum /
                  (std::abs(den_.back()) * std::pow(ys, degree_gap()));
    return std::max(2.0 * m, tail);
}

double RationalFn::sup_on_horizontal_segment(double x1, double x2, double y) const {
    double m = 0.0;
    const int n_samples = 1024;
    for (int k = 0; k <= n_samples; ++k) {
        Complex z(x1 + (x2 - x1) * k / n_samples, y);
        Complex d = eval_den(z);
        if (d == Complex(0.0, 0.0))
            throw PoleError("pole on the sampled horizontal segment");
        m = std::max(m, std::abs(eval_num(z) / d));
    }
    return 2.0 * m;
}

} // namespace resint
