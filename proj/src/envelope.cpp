#include "resint/envelope.hpp"

#include <cmath>

#include "resint/errors.hpp"

namespace resint {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

} // namespace

SeriesEnvelope::SeriesEnvelope(Kind k, double a, double c, int sign, double b,
                               std::vector<Complex> coeffs)
    : kind_(k), a_(a), c_(c), sign_(sign), b_(b), coeffs_(std::move(coeffs)) {
    if (!(b_ > 0.0))
        throw ParamError("envelope parameter b must be positive");
    switch (kind_) {
    case Kind::ExpAMinusOne:
    case Kind::OneMinusCosA:
    case Kind::SinA:
        if (!(a_ > 0.0))
            throw ParamError("envelope parameter a must be positive");
        break;
    case Kind::GeomInverse:
    case Kind::LogRatioPlus:
    case Kind::LogRatioMinus:
        // radius of convergence is c/a and must exceed 1
        if (!(a_ > 0.0) || !(c_ > a_))
            throw ParamError("envelope requires c > a > 0");
        break;
    case Kind::Monomial:
        break;
    case Kind::General:
        for (const auto& cn : coeffs_)
            if (!is_finite(cn))
                throw ParamError("non-finite envelope coefficient");
        break;
    }
}

SeriesEnvelope SeriesEnvelope::exp_a_minus_one(double a, double b) {
    return SeriesEnvelope(Kind::ExpAMinusOne, a, 0.0, 0, b, {});
}
SeriesEnvelope SeriesEnvelope::one_minus_cos_a(double a, double b) {
    return SeriesEnvelope(Kind::OneMinusCosA, a, 0.0, 0, b, {});
}
SeriesEnvelope SeriesEnvelope::sin_a(double a, double b) {
    return SeriesEnvelope(Kind::SinA, a, 0.0, 0, b, {});
}
SeriesEnvelope SeriesEnvelope::geom_inverse(double a, double c, double b) {
    return SeriesEnvelope(Kind::GeomInverse, a, c, 0, b, {});
}
SeriesEnvelope SeriesEnvelope::log_ratio(double a, double c, int sign, double b) {
    return SeriesEnvelope(sign >= 0 ? Kind::LogRatioPlus : Kind::LogRatioMinus,
                          a, c, sign, b, {});
}
SeriesEnvelope SeriesEnvelope::monomial(double b) {
    return SeriesEnvelope(Kind::Monomial, 0.0, 0.0, 0, b, {});
}
SeriesEnvelope SeriesEnvelope::general(std::vector<Complex> coefficients, double b) {
    return SeriesEnvelope(Kind::General, 0.0, 0.0, 0, b, std::move(coefficients));
}

SeriesEnvelope SeriesEnvelope::with_retained_constant(double c0) const {
    SeriesEnvelope e = *this;
    e.retained_constant_ = c0;
    return e;
}

Complex SeriesEnvelope::coefficient(int n) const {
    if (n < 1) return Complex(0.0, 0.0);
    switch (kind_) {
    case Kind::ExpAMinusOne:
        return Complex(std::pow(a_, n) / factorial(n), 0.0);
    case Kind::OneMinusCosA:
        if (n % 2 != 0) return Complex(0.0, 0.0);
        return Complex(((n / 2) % 2 == 1 ? 1.0 : -1.0) * std::pow(a_, n) / factorial(n), 0.0);
    case Kind::SinA:
        if (n % 2 != 1) return Complex(0.0, 0.0);
        return Complex((((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0) * std::pow(a_, n) / factorial(n), 0.0);
    case Kind::GeomInverse:
        return Complex((n % 2 == 0 ? 1.0 : -1.0) * std::pow(a_, n) / std::pow(c_, n + 1), 0.0);
    case Kind::LogRatioPlus:
        return Complex(2.0 * (n % 2 == 1 ? 1.0 : -1.0) * std::pow(a_ / c_, n) / n, 0.0);
    case Kind::LogRatioMinus:
        if (n % 2 != 1) return Complex(0.0, 0.0);
        return Complex(0.0, -4.0 * (((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0) *
                                std::pow(a_ / c_, n) / n);
    case Kind::Monomial:
        return n == 1 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    case Kind::General:
        if (static_cast<std::size_t>(n) > coeffs_.size()) return Complex(0.0, 0.0);
        return coeffs_[n - 1];
    }
    return Complex(0.0, 0.0);
}

double SeriesEnvelope::tail_sum() const {
    switch (kind_) {
    case Kind::ExpAMinusOne: return std::expm1(a_);
    case Kind::OneMinusCosA: return std::cosh(a_) - 1.0;
    case Kind::SinA:         return std::sinh(a_);
    case Kind::GeomInverse:  return a_ / (c_ * (c_ - a_));
    case Kind::LogRatioPlus: return -2.0 * std::log1p(-a_ / c_);
    case Kind::LogRatioMinus: return 4.0 * std::atanh(a_ / c_);
    case Kind::Monomial:     return 1.0;
    case Kind::General: {
        double s = 0.0;
        for (const auto& cn : coeffs_) s += std::abs(cn);
        return s;
    }
    }
    return 0.0;
}

Complex SeriesEnvelope::g(Complex w) const {
    Complex base(retained_constant_, 0.0);
    switch (kind_) {
    case Kind::ExpAMinusOne:
        return base + std::exp(a_ * w) - 1.0;
    case Kind::OneMinusCosA:
        return base + 1.0 - std::cos(a_ * w);
    case Kind::SinA:
        return base + std::sin(a_ * w);
    case Kind::GeomInverse:
        return base + 1.0 / (c_ + a_ * w) - 1.0 / c_;
    case Kind::LogRatioPlus:
        // argument stays in the right half-plane for |w| <= 1 since c > a
        return base + 2.0 * std::log(1.0 + (a_ / c_) * w);
    case Kind::LogRatioMinus: {
        Complex t = Complex(0.0, 1.0) * (a_ / c_) * w;
        return base + 2.0 * (std::log(1.0 - t) - std::log(1.0 + t));
    }
    case Kind::Monomial:
        return base + w;
    case Kind::General: {
        Complex acc(0.0, 0.0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = (acc + *it) * w;
        return base + acc;
    }
    }
    return base;
}

Complex SeriesEnvelope::f1(Complex z) const {
    return g(std::exp(Complex(0.0, b_) * z));
}

std::function<Complex(Complex)> SeriesEnvelope::evaluator() const {
    SeriesEnvelope copy = *this;
    return [copy](Complex z) { return copy.f1(z); };
}

int SeriesEnvelope::effective_terms() const {
    if (kind_ == Kind::General) return static_cast<int>(coeffs_.size());
    const double cutoff = 1e-18 * std::max(tail_sum(), 1e-300);
    int last_nonzero = 1;
    for (int n = 1; n <= 4096; ++n) {
        if (std::abs(coefficient(n)) >= cutoff) last_nonzero = n;
        // terms of every named variant decay monotonically (allowing the
        // alternating zero pattern), so 8 quiet terms in a row settle it
        if (n - last_nonzero >= 8) return last_nonzero;
    }
    return 4096;
}

EnvelopeBounds envelope_bounds(const SeriesEnvelope& g, double y) {
    if (y < 0.0)
        throw ParamError("envelope_bounds requires y >= 0");
    const double s = g.tail_sum();
    const double decay = std::exp(-g.b() * y);
    return EnvelopeBounds{decay * s, decay * s / g.b()};
}

} // namespace resint
