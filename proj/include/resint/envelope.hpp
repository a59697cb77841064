#ifndef RESINT_ENVELOPE_HPP
#define RESINT_ENVELOPE_HPP

#include <vector>

#include "resint/expr.hpp"

namespace resint {

struct EnvelopeBounds {
    double sup_bound;           // e^{-b y} * S >= |g(e^{ib(x+yi)})| for all real x
    double tail_integral_bound; // S e^{-b y} / b >= integral_y^inf of the sup
};

// Power series g(w) = sum_{n>=1} c_n w^n with radius of convergence > 1,
// composed as f1(z) = g(e^{ibz}). S = sum |c_n| is finite and gives the
// uniform decay e^{-by} S in the upper half-plane.
//
// The retained_constant field is normally 0; setting it reproduces the
// historical mistake of keeping g(0) != 0 (see catalog blunder mode) and
// makes the decay hypothesis fail.
class SeriesEnvelope {
public:
    enum class Kind {
        ExpAMinusOne,  // g(w) = e^{aw} - 1
        OneMinusCosA,  // g(w) = 1 - cos(aw)
        SinA,          // g(w) = sin(aw)
        GeomInverse,   // g(w) = 1/(c + aw) - 1/c            (requires c > a > 0)
        LogRatioPlus,  // g(w) = 2 log(1 + (a/c) w)           (requires c > a > 0)
        LogRatioMinus, // g(w) = 2[log(1-i(a/c)w) - log(1+i(a/c)w)]
        Monomial,      // g(w) = w
        General        // finite coefficient list
    };

    static SeriesEnvelope exp_a_minus_one(double a, double b);
    static SeriesEnvelope one_minus_cos_a(double a, double b);
    static SeriesEnvelope sin_a(double a, double b);
    static SeriesEnvelope geom_inverse(double a, double c, double b);
    // sign > 0 selects the single-log form, sign < 0 the i-conjugate pair.
    static SeriesEnvelope log_ratio(double a, double c, int sign, double b);
    static SeriesEnvelope monomial(double b);
    static SeriesEnvelope general(std::vector<Complex> coefficients, double b);

    Kind kind() const { return kind_; }
    double a() const { return a_; }
    double c() const { return c_; }
    double b() const { return b_; }

    double retained_constant() const { return retained_constant_; }
    SeriesEnvelope with_retained_constant(double c0) const;

    // n-th series coefficient, n >= 1.
    Complex coefficient(int n) const;

    // S = sum_{n>=1} |c_n|, from the closed form of each variant.
    double tail_sum() const;

    // Closed-form evaluation of g(w) (plus any retained constant).
    Complex g(Complex w) const;

    // f1(z) = g(e^{ibz}).
    Complex f1(Complex z) const;

    std::function<Complex(Complex)> evaluator() const;

    // Number of terms after which |c_n| is below 1e-18 * S (used by the
    // partial-sum property checks and by envelope addition).
    int effective_terms() const;

private:
    SeriesEnvelope(Kind k, double a, double c, int sign, double b,
                   std::vector<Complex> coeffs);

    Kind kind_;
    double a_ = 0.0;
    double c_ = 0.0;
    int sign_ = 0;
    double b_ = 1.0;
    double retained_constant_ = 0.0;
    std::vector<Complex> coeffs_; // General only
};

// sup / tail bounds at height y >= 0 (see EnvelopeBounds). The tail bound
// at y = 0 equals S / b, the uniform bound on the whole vertical integral.
EnvelopeBounds envelope_bounds(const SeriesEnvelope& g, double y);

} // namespace resint

#endif
