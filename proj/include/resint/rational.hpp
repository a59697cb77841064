#ifndef RESINT_RATIONAL_HPP
#define RESINT_RATIONAL_HPP

#include <utility>
#include <vector>

#include "resint/expr.hpp"

namespace resint {

// Pole location with multiplicity, as returned by rational_poles.
struct PoleMultiplicity {
    Complex location;
    int multiplicity;
};

// Rational function given by coefficient lists in ascending degree.
// The denominator's leading coefficient must be nonzero.
class RationalFn {
public:
    RationalFn(std::vector<Complex> num, std::vector<Complex> den);

    const std::vector<Complex>& num() const { return num_; }
    const std::vector<Complex>& den() const { return den_; }
    int deg_num() const { return static_cast<int>(num_.size()) - 1; }
    int deg_den() const { return static_cast<int>(den_.size()) - 1; }

    Complex eval_num(Complex z) const;
    Complex eval_den(Complex z) const;
    // Denominator derivative from coefficients (exact for polynomials).
    Complex eval_den_derivative(Complex z) const;

    // Throws EvalError when z hits a denominator zero.
    Complex operator()(Complex z) const;

    std::function<Complex(Complex)> evaluator() const;

    // Degree gap deg_den - deg_num; >= 1 means the function vanishes at
    // infinity, >= 2 gives integrable decay on vertical lines.
    int degree_gap() const { return deg_den() - deg_num(); }

    // Upper bound for |f| on the vertical line Re z = x, valid for all
    // y in [0, inf). Dense sampling with a 2x safety factor up to a
    // height that clears every pole, plus a coefficient tail bound above.
    double sup_on_vertical_line(double x) const;

    // Same idea for the horizontal segment [x1,x2] at height y.
    double sup_on_horizontal_segment(double x1, double x2, double y) const;

    const std::vector<PoleMultiplicity>& poles() const;

private:
    std::vector<Complex> num_;
    std::vector<Complex> den_;
    mutable std::vector<PoleMultiplicity> poles_;
    mutable bool poles_ready_ = false;
};

// All denominator roots with multiplicities (Aberth-Ehrlich iteration,
// cluster detection, multiplicity-aware Newton polish). The multiplicities
// sum to deg_den. Throws PoleError if the iteration fails to converge.
std::vector<PoleMultiplicity> rational_poles(const RationalFn& f);

// Roots of a bare polynomial, ascending coefficients.
std::vector<PoleMultiplicity> polynomial_roots(const std::vector<Complex>& coeffs);

// Horner evaluation of an ascending coefficient list.
Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex z);

} // namespace resint

#endif
