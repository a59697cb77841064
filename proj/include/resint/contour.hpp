#ifndef RESINT_CONTOUR_HPP
#define RESINT_CONTOUR_HPP

#include <vector>

#include "resint/envelope.hpp"
#include "resint/quadrature.hpp"
#include "resint/rational.hpp"

namespace resint {

using Evaluatable = std::function<Complex(Complex)>;

// Axis-aligned rectangle, x1 < x2 and y1 < y2.
struct Rectangle {
    double x1, x2, y1, y2;

    Rectangle(double x1_, double x2_, double y1_, double y2_);
    bool contains(Complex z) const;
    // Distance from z to the boundary path.
    double boundary_distance(Complex z) const;
};

// Contours must clear every known pole by at least this distance.
constexpr double kPoleClearance = 1e-6;

// Line integral of f along the straight segment from z_start to z_end.
// Internally the segment is integrated in a canonical orientation, so
// reversing the endpoints negates the result exactly.
QuadratureResult integrate_segment(const Evaluatable& f, Complex z_start,
                                   Complex z_end, double tol);

// Counterclockwise boundary integral over rect. Near zero for f
// holomorphic inside; 2*pi*i times the enclosed residues otherwise.
QuadratureResult integrate_rectangle(const Evaluatable& f, const Rectangle& rect,
                                     double tol);

// (bottom-then-right) minus (left-then-top) path integral between the
// rectangle's opposite corners; coincides with the boundary integral.
Complex two_path_difference(const Evaluatable& f, const Rectangle& rect, double tol);

// Counterclockwise circle integral by the trapezoid rule (spectrally
// accurate for f analytic on the circle). n_points >= 16.
Complex integrate_circle(const Evaluatable& f, Complex center, double radius,
                         int n_points);

// Upper half-circle of radius R, z = R e^{i theta}, theta in [0, pi].
QuadratureResult semicircle_integral(const Evaluatable& f, double R, double tol);

// Truncated vertical integral i * int_0^Y f1(x+yi) f2(x+yi) dy with Y chosen
// so the analytic remainder bound (envelope tail times sup|f2| on the line)
// stays below tol/2. Throws PoleError when a pole of f2 sits on the line.
QuadratureResult vertical_tail_integral(const SeriesEnvelope& f1,
                                        const RationalFn& f2, double x, double tol);

// Shared guard: every pole must clear the contour by kPoleClearance,
// measured with the supplied distance function.
void require_poles_clear(const std::vector<PoleMultiplicity>& poles,
                         const std::function<double(Complex)>& distance_to_contour);

} // namespace resint

#endif
