#ifndef RESINT_REALAXIS_HPP
#define RESINT_REALAXIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "resint/quadrature.hpp"

namespace resint {

// Integrand on [0, inf). Periodic-tagged integrands carry the period of
// their oscillatory factor (2 pi / b); aperiodic ones may list singular
// points instead (removable or integrable-log).
struct OscillatoryIntegrand {
    enum class SingularKind { Removable, IntegrableLog };
    struct SingularPoint {
        double x;
        SingularKind kind;
    };

    std::function<double(double)> f;
    std::optional<double> period;          // 2 pi / b when oscillatory
    std::vector<SingularPoint> singular_points; // sorted ascending

    bool periodic() const { return period.has_value(); }
};

// Cumulative integrals over consecutive full periods: entry k-1 holds
// int_0^{k*period}. Each chunk is adaptive quadrature at tol / k_max.
std::vector<double> period_partial_sums(const OscillatoryIntegrand& f,
                                        int k_max, double tol);

// Iterated Aitken delta-squared (up to 3 passes) on the tail of a
// sequence; returns the extrapolated value and the spread of the last
// extrapolation column as the error estimate. Degenerate second
// differences stop the iteration and fall back to the previous column.
std::pair<double, double> accelerate_sequence(const std::vector<double>& s);

// Improper integral over [0, inf): period chunking plus acceleration for
// periodic-tagged integrands (chunk budget grows from 64 up to
// max_chunks), singularity splitting with tanh-sinh plus an inverted tail
// otherwise.
QuadratureResult evaluate_real_integral(const OscillatoryIntegrand& f, double tol,
                                        int max_chunks = 512);

struct DirichletCheck {
    bool passed = true;
    double bound = 0.0;                 // pi e^a
    std::vector<double> integrals;      // one per sample
    std::string failure_witness;        // empty when passed
};

// Verifies |int_0^R e^{a cos x} sin(a sin x) dx| <= pi e^a at each R.
DirichletCheck dirichlet_bound_check(double a, const std::vector<double>& R_samples);

struct DivergenceProbe {
    std::vector<Complex> raw;        // int_0^{R_k} e^{a e^{ibx}} x/(x^2+r^2) dx
    std::vector<Complex> stabilized; // raw_k - (1/2) log(1 + R_k^2/r^2)
};

// Quantifies the logarithmic divergence of the unregularized integral and
// the convergence of its log-subtracted stabilization.
DivergenceProbe divergence_probe(double a, double b, double r,
                                 const std::vector<double>& R_grid);

// f(x) = sum_{n>=1} a^n e^{ibnx} / (n! i b n), truncated once a^n/n! drops
// below 1e-18. Uniformly bounded by (e^a - 1)/b on the real line.
Complex divergence_series_f(double a, double b, double x);

} // namespace resint

#endif
