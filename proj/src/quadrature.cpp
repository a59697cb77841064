#include "resint/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace resint {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    Complex integral;
    double error;
    double resabs;
};

PanelResult gk15_panel(const std::function<Complex(double)>& f,
                       double a, double b, std::int64_t& evals) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    Complex fv[15];
    // index layout: 0..6 pair nodes (xgk[0..6]), 14 = center
    Complex resk(0.0, 0.0);
    Complex resg(0.0, 0.0);
    double resabs = 0.0;

    const Complex fc = f(centr);
    ++evals;
    resk = kWgk[7] * fc;
    resg = kWg[3] * fc;
    resabs = kWgk[7] * std::abs(fc);
    fv[14] = fc;

    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        const Complex f1 = f(centr - absc);
        const Complex f2 = f(centr + absc);
        evals += 2;
        fv[j] = f1;
        fv[j + 7] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) // xgk[1], xgk[3], xgk[5] are the Gauss nodes
            resg += kWg[j / 2] * (f1 + f2);
    }

    const Complex reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[j + 7] - reskh));

    const double h = std::abs(hlgth);
    resabs *= h;
    resasc *= h;
    double err = std::abs(resk - resg) * h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps))
        err = std::max(eps * 50.0 * resabs, err);

    return {resk * hlgth, err, resabs};
}

struct AdaptiveState {
    const std::function<Complex(double)>* f;
    std::int64_t evals = 0;
    bool converged = true;
    Complex total{0.0, 0.0};
    double total_err = 0.0;
};

void adaptive_recurse(AdaptiveState& st, double a, double b, double tol, int depth) {
    PanelResult p = gk15_panel(*st.f, a, b, st.evals);
    const double floor_tol =
        50.0 * std::numeric_limits<double>::epsilon() * std::max(p.resabs, 1e-300);
    if (p.error <= std::max(tol, floor_tol) || depth >= 30) {
        st.total += p.integral;
        st.total_err += p.error;
        if (p.error > std::max(tol, floor_tol))
            st.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    adaptive_recurse(st, a, mid, 0.5 * tol, depth + 1);
    adaptive_recurse(st, mid, b, 0.5 * tol, depth + 1);
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double t0, double t1, double tol) {
    QuadratureResult r;
    if (t0 == t1) {
        r.converged = true;
        return r;
    }
    AdaptiveState st;
    st.f = &f;
    adaptive_recurse(st, t0, t1, tol, 0);
    r.value = st.total;
    r.error_estimate = st.total_err;
    r.evaluations = st.evals;
    r.converged = st.converged;
    return r;
}

QuadratureResult integrate_adaptive_real(const std::function<double(double)>& f,
                                         double t0, double t1, double tol) {
    return integrate_adaptive([&f](double t) { return Complex(f(t), 0.0); },
                              t0, t1, tol);
}

QuadratureResult integrate_tanh_sinh(const std::function<double(double)>& f,
                                     double t0, double t1, double tol) {
    QuadratureResult r;
    if (t0 == t1) {
        r.converged = true;
        return r;
    }

    const double half = 0.5 * (t1 - t0);

    // One abscissa/weight pair of the transform x = tanh((pi/2) sinh t).
    // The abscissa is built from its distance to the nearer endpoint so
    // that log-type singularities see an accurate argument; nodes that
    // round onto an endpoint are dropped (their weight is negligible).
    auto node_value = [&](double t, double& weight) -> double {
        const double u = 0.5 * M_PI * std::sinh(t);
        const double ch = std::cosh(u);
        weight = 0.5 * M_PI * std::cosh(t) / (ch * ch);
        double x;
        if (u > 0.0) {
            const double from_right = half * (2.0 / (1.0 + std::exp(2.0 * u)));
            x = t1 - from_right;
            if (from_right == 0.0 || x >= t1) weight = 0.0;
        } else {
            const double from_left = half * (2.0 / (1.0 + std::exp(-2.0 * u)));
            x = t0 + from_left;
            if (from_left == 0.0 || x <= t0) weight = 0.0;
        }
        return x;
    };

    auto eval_level_sum = [&](double h, bool odd_only, std::int64_t& evals) {
        double sum = 0.0;
        const double t_max = 6.5;
        const int step = odd_only ? 2 : 1;
        const int start = odd_only ? 1 : 0;
        for (int k = start;; k += step) {
            const double t = k * h;
            if (t > t_max) break;
            double w1 = 0.0, w2 = 0.0;
            const double x1 = node_value(t, w1);
            double term = 0.0;
            if (w1 != 0.0) {
                term += w1 * f(x1);
                ++evals;
            }
            if (k > 0) {
                const double x2 = node_value(-t, w2);
                if (w2 != 0.0) {
                    term += w2 * f(x2);
                    ++evals;
                }
            }
            sum += term;
            if (k > 3 && std::abs(term) < 1e-260) break;
        }
        return sum;
    };

    double h = 1.0;
    std::int64_t evals = 0;
    double sum = eval_level_sum(h, false, evals);
    double value = sum * h * half;
    double prev = value;
    double err = std::abs(value) + 1.0;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        sum += eval_level_sum(h, true, evals);
        value = sum * h * half;
        err = std::abs(value - prev);
        prev = value;
        if (level >= 3 && err <= tol) {
            r.converged = true;
            break;
        }
    }
    r.value = Complex(value, 0.0);
    r.error_estimate = err;
    r.evaluations = evals;
    return r;
}

} // namespace resint
