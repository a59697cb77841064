#ifndef RESINT_QUADRATURE_HPP
#define RESINT_QUADRATURE_HPP

#include <cstdint>
#include <functional>

#include "resint/expr.hpp"

namespace resint {

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
    bool converged = false;

    double real() const { return value.real(); }
};

// Adaptive 15-point Gauss-Kronrod over a real parameter interval with a
// complex-valued integrand. Bisects intervals whose QUADPACK-style error
// estimate exceeds the local budget; recursion depth is capped at 30,
// after which the result is returned with converged = false.
QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double t0, double t1, double tol);

// Same engine for real integrands.
QuadratureResult integrate_adaptive_real(const std::function<double(double)>& f,
                                         double t0, double t1, double tol);

// Tanh-sinh (double exponential) quadrature on [t0, t1]. Absorbs
// integrable endpoint singularities (log-type included); the integrand is
// never evaluated at the endpoints themselves.
QuadratureResult integrate_tanh_sinh(const std::function<double(double)>& f,
                                     double t0, double t1, double tol);

} // namespace resint

#endif
