#include "resint/realaxis.hpp"

#include <algorithm>
#include <cmath>

#include "resint/errors.hpp"

namespace resint {

namespace {

// Append cumulative period sums until `count` entries exist.
void extend_period_sums(const OscillatoryIntegrand& f, int count, double chunk_tol,
                        std::vector<double>& sums, QuadratureResult& stats) {
    const double period = *f.period;
    int k = static_cast<int>(sums.size());
    double acc = sums.empty() ? 0.0 : sums.back();
    for (; k < count; ++k) {
        QuadratureResult chunk =
            integrate_adaptive_real(f.f, k * period, (k + 1) * period, chunk_tol);
        if (!chunk.converged)
            throw QuadratureError("period chunk quadrature failed near x = " +
                                  std::to_string(k * period));
        acc += chunk.value.real();
        stats.evaluations += chunk.evaluations;
        stats.error_estimate += chunk.error_estimate;
        sums.push_back(acc);
    }
}

double column_spread(const std::vector<double>& col) {
    const std::size_t take = std::min<std::size_t>(4, col.size());
    double lo = col.back(), hi = col.back();
    for (std::size_t j = col.size() - take; j < col.size(); ++j) {
        lo = std::min(lo, col[j]);
        hi = std::max(hi, col[j]);
    }
    return hi - lo;
}

// Iterated Aitken delta-squared, at most `max_pass` passes; stops early on
// degenerate second differences. Returns the last entry of the final
// column plus that column's spread.
std::pair<double, double> aitken_passes(std::vector<double> col, int max_pass = 3) {
    for (int pass = 0; pass < max_pass && col.size() >= 3; ++pass) {
        double scale = 0.0;
        for (double v : col) scale = std::max(scale, std::abs(v));
        std::vector<double> next;
        bool degenerate = false;
        for (std::size_t j = 0; j + 2 < col.size(); ++j) {
            const double d1 = col[j + 1] - col[j];
            const double d2 = (col[j + 2] - col[j + 1]) - d1;
            if (std::abs(d2) < 1e-15 * scale + 1e-300) {
                degenerate = true;
                break;
            }
            const double delta = col[j + 2] - col[j + 1];
            next.push_back(col[j + 2] - delta * delta / d2);
        }
        if (degenerate || next.empty()) break;
        col = std::move(next);
    }
    return {col.back(), column_spread(col)};
}

// Tail indices with geometrically doubling period counts: n-1, n/2-1,
// n/4-1, ... (ascending). On a sequence whose error decays like 1/k this
// subsampling turns the tail into a ratio-1/2 geometric sequence, which
// Aitken sums exactly.
std::vector<std::size_t> geometric_ladder(std::size_t last) {
    std::vector<std::size_t> idx;
    std::size_t j = last;
    while (j >= 3) {
        idx.push_back(j);
        j = (j + 1) / 2 - 1;
    }
    std::reverse(idx.begin(), idx.end());
    return idx;
}

} // namespace

std::vector<double> period_partial_sums(const OscillatoryIntegrand& f, int k_max,
                                        double tol) {
    if (!f.periodic())
        throw ParamError("period_partial_sums needs a periodic-tagged integrand");
    if (k_max < 4)
        throw ParamError("k_max must be at least 4");
    std::vector<double> sums;
    QuadratureResult stats;
    extend_period_sums(f, k_max, tol / k_max, sums, stats);
    return sums;
}

std::pair<double, double> accelerate_sequence(const std::vector<double>& s) {
    if (s.size() < 6)
        throw ParamError("acceleration needs at least 6 partial sums");

    const std::size_t n = s.size();
    double scale = 0.0;
    for (double v : s) scale = std::max(scale, std::abs(v));
    const double floor = 1e-15 * scale + 1e-300;

    // Classify the tail by the ratio of consecutive differences. A ratio
    // bounded away from 1 marks a geometric tail, where consecutive Aitken
    // is exact; a ratio near 1 marks algebraic (1/k-type) decay, where the
    // tail must first be resampled along a geometric index ladder.
    std::vector<double> tail_diff;
    for (std::size_t j = n - std::min<std::size_t>(7, n); j + 1 < n; ++j)
        tail_diff.push_back(s[j + 1] - s[j]);
    bool all_tiny = true;
    for (double d : tail_diff) all_tiny = all_tiny && std::abs(d) <= 10.0 * floor;
    if (all_tiny)
        return {s.back(), 1e-15 * scale};

    std::vector<double> ratios;
    for (std::size_t j = 0; j + 1 < tail_diff.size(); ++j)
        if (std::abs(tail_diff[j]) > floor)
            ratios.push_back(tail_diff[j + 1] / tail_diff[j]);
    double rho_lo = 1.0, rho_hi = 1.0;
    if (!ratios.empty()) {
        rho_lo = *std::min_element(ratios.begin(), ratios.end());
        rho_hi = *std::max_element(ratios.begin(), ratios.end());
    }
    const bool geometric_tail = !ratios.empty() && (rho_hi - rho_lo) < 0.15 &&
                                std::abs(0.5 * (rho_lo + rho_hi)) <= 0.85 &&
                                std::abs(0.5 * (rho_lo + rho_hi)) >= 0.02;

    const std::vector<std::size_t> ladder = geometric_ladder(n - 1);
    if (geometric_tail || ladder.size() < 4) {
        const std::size_t window = std::min<std::size_t>(n, 24);
        auto [value, spread] =
            aitken_passes(std::vector<double>(s.end() - window, s.end()));
        return {value, spread + 1e-15 * scale};
    }

    std::vector<double> sub;
    for (std::size_t j : ladder) sub.push_back(s[j]);
    auto [value, spread] = aitken_passes(sub);
    // error estimate: redo with the topmost ladder point dropped
    sub.pop_back();
    auto [value_less, spread_less] = aitken_passes(sub);
    (void)spread_less;
    return {value, std::abs(value - value_less) + spread + 1e-15 * scale};
}

namespace {

QuadratureResult evaluate_periodic(const OscillatoryIntegrand& f, double tol,
                                   int max_chunks) {
    QuadratureResult out;
    std::vector<double> sums;
    const double chunk_tol = std::max(tol / (4.0 * max_chunks), 1e-15);

    int budget = std::min(64, max_chunks);
    for (;;) {
        extend_period_sums(f, budget, chunk_tol, sums, out);
        auto [value, err] = accelerate_sequence(sums);
        out.value = Complex(value, 0.0);
        // quadrature noise accumulated in out.error_estimate already
        const double total_err = err + out.error_estimate;
        if (total_err <= tol) {
            out.error_estimate = total_err;
            out.converged = true;
            return out;
        }
        if (budget >= max_chunks) {
            out.error_estimate = total_err;
            out.converged = false;
            return out;
        }
        budget = std::min(2 * budget, max_chunks);
    }
}

QuadratureResult evaluate_aperiodic(const OscillatoryIntegrand& f, double tol) {
    // Split at singular points, tanh-sinh each piece, invert the tail.
    double last_split = 0.0;
    for (const auto& sp : f.singular_points)
        last_split = std::max(last_split, sp.x);
    const double x_cut = std::max(10.0, 2.0 * last_split + 5.0);

    std::vector<double> cuts{0.0};
    for (const auto& sp : f.singular_points)
        if (sp.x > 0.0 && sp.x < x_cut) cuts.push_back(sp.x);
    cuts.push_back(x_cut);
    std::sort(cuts.begin(), cuts.end());

    QuadratureResult out;
    out.converged = true;
    const double piece_tol = tol / (2.0 * cuts.size());
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
        QuadratureResult piece =
            integrate_tanh_sinh(f.f, cuts[j], cuts[j + 1], piece_tol);
        out.value += piece.value;
        out.error_estimate += piece.error_estimate;
        out.evaluations += piece.evaluations;
        out.converged = out.converged && piece.converged;
    }

    // Tail: substitute x = 1/t, int_{x_cut}^inf f dx = int_0^{1/x_cut} f(1/t)/t^2 dt.
    QuadratureResult tail = integrate_tanh_sinh(
        [&f](double t) {
            const double x = 1.0 / t;
            return f.f(x) * x * x;
        },
        0.0, 1.0 / x_cut, piece_tol);
    out.value += tail.value;
    out.error_estimate += tail.error_estimate;
    out.evaluations += tail.evaluations;
    out.converged = out.converged && tail.converged;
    if (!out.converged)
        throw QuadratureError("singular-piece quadrature failed to converge");
    return out;
}

} // namespace

QuadratureResult evaluate_real_integral(const OscillatoryIntegrand& f, double tol,
                                        int max_chunks) {
    if (!(tol > 0.0))
        throw ParamError("tolerance must be positive");
    if (f.periodic())
        return evaluate_periodic(f, tol, std::max(max_chunks, 8));
    return evaluate_aperiodic(f, tol);
}

DirichletCheck dirichlet_bound_check(double a, const std::vector<double>& R_samples) {
    if (!(a > 0.0))
        throw ParamError("a must be positive");
    DirichletCheck out;
    out.bound = M_PI * std::exp(a);
    auto integrand = [a](double x) {
        return std::exp(a * std::cos(x)) * std::sin(a * std::sin(x));
    };
    for (double R : R_samples) {
        QuadratureResult q = integrate_adaptive_real(integrand, 0.0, R, 1e-8);
        const double value = q.value.real();
        out.integrals.push_back(value);
        if (std::abs(value) > out.bound) {
            out.passed = false;
            out.failure_witness = "R = " + std::to_string(R) + ": |" +
                                  std::to_string(value) + "| > " +
                                  std::to_string(out.bound);
        }
    }
    return out;
}

DivergenceProbe divergence_probe(double a, double b, double r,
                                 const std::vector<double>& R_grid) {
    if (!(a > 0.0) || !(b > 0.0) || !(r > 0.0))
        throw ParamError("parameters must be positive");
    for (std::size_t k = 1; k < R_grid.size(); ++k)
        if (!(R_grid[k] > R_grid[k - 1]))
            throw ParamError("R grid must be increasing");

    auto integrand = [a, b, r](double x) {
        return std::exp(a * std::exp(Complex(0.0, b * x))) * x / (x * x + r * r);
    };

    DivergenceProbe out;
    Complex acc(0.0, 0.0);
    double from = 0.0;
    for (double R : R_grid) {
        QuadratureResult leg = integrate_adaptive(integrand, from, R, 1e-9);
        if (!leg.converged)
            throw QuadratureError("divergence probe leg failed");
        acc += leg.value;
        from = R;
        out.raw.push_back(acc);
        out.stabilized.push_back(acc - 0.5 * std::log1p(R * R / (r * r)));
    }
    return out;
}

Complex divergence_series_f(double a, double b, double x) {
    Complex sum(0.0, 0.0);
    double an_over_nfact = 1.0;
    for (int n = 1; n <= 512; ++n) {
        an_over_nfact *= a / n;
        if (an_over_nfact < 1e-18) break;
        sum += an_over_nfact * std::exp(Complex(0.0, b * n * x)) /
               Complex(0.0, b * n);
    }
    return sum;
}

} // namespace resint
