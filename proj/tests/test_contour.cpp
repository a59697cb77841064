#include <doctest.h>

#include <cmath>

#include "resint/contour.hpp"
#include "resint/expr.hpp"

using namespace resint;

namespace {

const Complex kI(0.0, 1.0);

Evaluatable one_over_z() {
    return [](Complex z) {
        if (z == Complex(0.0, 0.0)) throw EvalError("pole");
        return 1.0 / z;
    };
}

} // namespace

TEST_CASE("segment quadrature against antiderivatives") {
    auto constant = [](Complex) { return Complex(1.0, 0.0); };
    QuadratureResult r = integrate_segment(constant, {0, 0}, {1, 1}, 1e-12);
    CHECK(r.converged);
    CHECK(std::abs(r.value - Complex(1, 1)) < 1e-12);

    // vertical segment of 1/z through 1: i[arctan(1) - arctan(-1)] = i pi/2
    QuadratureResult v = integrate_segment(one_over_z(), {1, -1}, {1, 1}, 1e-12);
    CHECK(std::abs(v.value - kI * (M_PI / 2)) < 1e-11);

    QuadratureResult e = integrate_segment(
        [](Complex z) { return std::exp(z); }, {0, 0}, {1, 0}, 1e-12);
    CHECK(std::abs(e.value - std::expm1(1.0)) < 1e-12);
}

TEST_CASE("segment additivity and exact reversal") {
    auto f = [](Complex z) { return std::exp(z) * z; };
    const Complex a(-0.3, 0.2), c(1.7, 1.4);
    const Complex b = a + 0.37 * (c - a);
    QuadratureResult whole = integrate_segment(f, a, c, 1e-13);
    QuadratureResult left = integrate_segment(f, a, b, 1e-13);
    QuadratureResult right = integrate_segment(f, b, c, 1e-13);
    CHECK(std::abs(whole.value - (left.value + right.value)) <=
          whole.error_estimate + left.error_estimate + right.error_estimate +
              1e-14);

    QuadratureResult fwd = integrate_segment(f, a, c, 1e-13);
    QuadratureResult rev = integrate_segment(f, c, a, 1e-13);
    CHECK(fwd.value == -rev.value); // exact, by canonical node ordering
}

TEST_CASE("rectangle boundary: holomorphic, 1/z square, nested exponential") {
    QuadratureResult entire = integrate_rectangle(
        [](Complex z) { return std::exp(z); }, Rectangle(0, 1, 0, 1), 1e-11);
    CHECK(std::abs(entire.value) <= 1e-10);

    QuadratureResult square =
        integrate_rectangle(one_over_z(), Rectangle(-1, 1, -1, 1), 1e-12);
    CHECK(std::abs(square.value - 2.0 * M_PI * kI) < 1e-10);

    Expr f = parse_expr("exp(exp(i*z))*z/(z^2+1)");
    QuadratureResult quiz = integrate_rectangle(f.evaluator(),
                                                Rectangle(-5, 5, 0.1, 6), 1e-11);
    const Complex expected = kI * M_PI * std::exp(std::exp(-1.0));
    CHECK(std::abs(quiz.value - expected) < 1e-9);
}

TEST_CASE("two-path difference equals the boundary integral") {
    auto holo = [](Complex z) { return std::exp(z); };
    Rectangle r1(-0.5, 1.5, 0.25, 2.0);
    CHECK(std::abs(two_path_difference(holo, r1, 1e-11)) <= 2e-11);

    auto shifted_pole = [](Complex z) { return 1.0 / (z - Complex(0.5, 0.5)); };
    Rectangle unit(0, 1, 0, 1);
    CHECK(std::abs(two_path_difference(shifted_pole, unit, 1e-11) -
                   2.0 * M_PI * kI) < 1e-9);

    Rectangle away(1, 2, 1, 2);
    CHECK(std::abs(two_path_difference(one_over_z(), away, 1e-11)) <= 2e-11);

    // equal to the full boundary integral for assorted integrands
    for (const char* text : {"exp(z)*z", "1/(z-(0.3+0.4*i))", "cos(z)"}) {
        Expr f = parse_expr(text);
        Rectangle rect(-0.2, 1.1, 0.1, 1.3);
        Complex tp = two_path_difference(f.evaluator(), rect, 1e-10);
        Complex bd = integrate_rectangle(f.evaluator(), rect, 1e-10).value;
        CHECK(std::abs(tp - bd) <= 2e-10);
    }
}

TEST_CASE("circle rule: values, radius independence, spectral doubling") {
    Complex c64 = integrate_circle(one_over_z(), {0, 0}, 1.0, 64);
    CHECK(std::abs(c64 - 2.0 * M_PI * kI) < 1e-12);

    Complex inv2 = integrate_circle(
        [](Complex z) { return 1.0 / (z * z); }, {0, 0}, 1.0, 64);
    CHECK(std::abs(inv2) < 1e-12);

    Complex shifted = integrate_circle(
        [](Complex z) { return std::exp(z) / (z - 1.0); }, {1, 0}, 0.5, 64);
    CHECK(std::abs(shifted - 2.0 * M_PI * kI * M_E) < 1e-11);

    CHECK(std::abs(integrate_circle(one_over_z(), {0, 0}, 0.5, 128) -
                   integrate_circle(one_over_z(), {0, 0}, 2.0, 128)) < 1e-12);

    auto f = [](Complex z) { return std::exp(z) / (z - Complex(0.1, 0.2)); };
    Complex n256 = integrate_circle(f, {0.1, 0.2}, 0.8, 256);
    Complex n512 = integrate_circle(f, {0.1, 0.2}, 0.8, 512);
    CHECK(std::abs(n512 - n256) < 1e-12);

    CHECK_THROWS(integrate_circle(one_over_z(), {0, 0}, 1.0, 8));
    auto explodes = [](Complex z) -> Complex {
        if (z.real() < 0.1) throw EvalError("node evaluation failed");
        return 1.0 / z;
    };
    CHECK_THROWS_AS(integrate_circle(explodes, {1, 0}, 1.0, 64), EvalError);
}

TEST_CASE("semicircle integrals") {
    QuadratureResult half = semicircle_integral(one_over_z(), 3.7, 1e-12);
    CHECK(std::abs(half.value - kI * M_PI) < 1e-11);

    auto f = [](Complex z) {
        return z * std::exp(kI * z) / (1.0 + z * z);
    };
    double prev = 1e9;
    for (double R : {10.0, 40.0, 160.0}) {
        QuadratureResult arc = semicircle_integral(f, R, 1e-12);
        const double mag = std::abs(arc.value);
        CHECK(mag <= M_PI * R * R / (R * R - 1.0));
        CHECK(mag < prev);
        prev = mag;
    }
}

TEST_CASE("rectangle with no enclosed poles stays near zero") {
    for (const char* text : {"z^3", "exp(i*z)", "1/(z+10)"}) {
        Expr f = parse_expr(text);
        const double tol = 1e-10;
        QuadratureResult r =
            integrate_rectangle(f.evaluator(), Rectangle(-2, 2, 0.5, 3), tol);
        CHECK(std::abs(r.value) <= 10 * tol);
    }
}

TEST_CASE("vertical tails obey the decay bounds") {
    RationalFn f2({Complex(0, 0), Complex(1, 0)},
                  {Complex(1, 0), Complex(0, 0), Complex(1, 0)}); // z/(z^2+1)

    auto mono = SeriesEnvelope::monomial(1.0);
    QuadratureResult far = vertical_tail_integral(mono, f2, 100.0, 1e-10);
    CHECK(far.converged);
    CHECK(std::abs(far.value) <= (1.0 / 100.0 + 1.0 / 10000.0) * 1.0);

    // tends to zero as |x| grows
    double prev = 1e9;
    for (double x : {20.0, 80.0, 320.0, 1280.0}) {
        const double mag =
            std::abs(vertical_tail_integral(mono, f2, x, 1e-10).value);
        CHECK(mag < prev);
        prev = mag;
    }
    CHECK(prev < 1e-3);
    CHECK(std::abs(vertical_tail_integral(mono, f2, -1280.0, 1e-10).value) <
          1e-3);

    auto env = SeriesEnvelope::exp_a_minus_one(1.0, 1.0);
    QuadratureResult mid = vertical_tail_integral(env, f2, 50.0, 1e-10);
    CHECK(std::abs(mid.value) <= std::expm1(1.0) * (1.0 / 50.0 + 1.0 / 2500.0));

    CHECK_THROWS_AS(vertical_tail_integral(mono, f2, 0.0, 1e-10), PoleError);
}

TEST_CASE("pole clearance guard") {
    std::vector<PoleMultiplicity> poles{{Complex(0.5, 1.0 + 5e-7), 1}};
    Rectangle rect(0, 1, 0, 1);
    CHECK_THROWS_AS(require_poles_clear(
                        poles, [&](Complex z) { return rect.boundary_distance(z); }),
                    PoleError);
}
