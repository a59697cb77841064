#ifndef RESINT_RESIDUES_HPP
#define RESINT_RESIDUES_HPP

#include "resint/contour.hpp"
#include "resint/rational.hpp"

namespace resint {

// Isolated singularity with (once computed) residue.
struct PoleSite {
    Complex location;
    int multiplicity = 1;
    Complex residue{0.0, 0.0};
};

// Residue of num(z)/den(z) at a simple root z0 of den: num(z0)/den'(z0),
// with den' taken exactly from the coefficients. Throws PoleError when z0
// is not a simple root of den.
Complex residue_simple_pole_formula(const Evaluatable& num, const RationalFn& den,
                                    Complex z0);

// Residue as (1/2 pi i) times the circle integral around z0. Works for any
// pole order. Doubles n_points until two successive rules agree; failure to
// settle signals another singularity inside the circle.
Complex residue_via_circle(const Evaluatable& f, Complex z0, double radius,
                           int n_points);

// Residue at a simple pole as lim (z - z0) f(z), via Richardson
// extrapolation over radii 2^{-k}, k = 3..12. Divergence of the scaled
// values signals a non-simple pole and raises PoleError.
Complex residue_limit_extrapolated(const Evaluatable& f, Complex z0);

// Default circle radius for a pole of `den`: half the distance to the
// nearest other pole, capped at 1.
double default_circle_radius(const RationalFn& den, Complex z0);

} // namespace resint

#endif
