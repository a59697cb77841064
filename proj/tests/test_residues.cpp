#include <doctest.h>

#include <cmath>

#include "resint/expr.hpp"
#include "resint/residues.hpp"

using namespace resint;

namespace {

const Complex kI(0.0, 1.0);

RationalFn z_over_z2p1() {
    return RationalFn({Complex(0, 0), Complex(1, 0)},
                      {Complex(1, 0), Complex(0, 0), Complex(1, 0)});
}

} // namespace

TEST_CASE("simple-pole formula on the worked examples") {
    // e^{e^{iz}} z / (z^2+1) at i -> e^{1/e} i / (2i) = e^{1/e} / 2
    Expr num = parse_expr("exp(exp(i*z))*z");
    Complex r1 = residue_simple_pole_formula(num.evaluator(), z_over_z2p1(), kI);
    CHECK(std::abs(r1 - 0.5 * std::exp(std::exp(-1.0))) < 1e-14);

    // (1/2) z e^{ibz} / (z^2+1) at i with b = 1 -> e^{-1}/4
    auto num2 = [](Complex z) { return 0.5 * z * std::exp(kI * z); };
    Complex r2 = residue_simple_pole_formula(num2, z_over_z2p1(), kI);
    CHECK(std::abs(r2 - 0.25 * std::exp(-1.0)) < 1e-15);

    // (1/2) z (e^{a e^{ibz}} - 1) / (z^2 + r^2) at ir -> (e^{a e^{-br}}-1)/4
    const double a = 1.3, b = 0.7, r = 1.4;
    RationalFn den({Complex(0, 0), Complex(1, 0)},
                   {Complex(r * r, 0), Complex(0, 0), Complex(1, 0)});
    auto num3 = [&](Complex z) {
        return 0.5 * z * (std::exp(a * std::exp(kI * b * z)) - 1.0);
    };
    Complex r3 = residue_simple_pole_formula(num3, den, Complex(0.0, r));
    CHECK(std::abs(r3 - 0.25 * std::expm1(a * std::exp(-b * r))) < 1e-14);

    // refusals
    RationalFn dbl({Complex(1, 0)},
                   {Complex(-1, 0), Complex(0, -2), Complex(1, 0)}); // (z-i)^2
    CHECK_THROWS_AS(
        residue_simple_pole_formula(num.evaluator(), dbl, kI), PoleError);
    CHECK_THROWS_AS(
        residue_simple_pole_formula(num.evaluator(), z_over_z2p1(), {5, 5}),
        PoleError);
}

TEST_CASE("circle route") {
    auto f1 = [](Complex z) { return 1.0 / (z - Complex(0.3, 0.8)); };
    CHECK(std::abs(residue_via_circle(f1, {0.3, 0.8}, 0.5, 32) - 1.0) < 1e-12);

    Expr quiz = parse_expr("exp(exp(i*z))*z/(z^2+1)");
    Complex rq = residue_via_circle(quiz.evaluator(), kI, 0.5, 64);
    CHECK(std::abs(rq - 0.5 * std::exp(std::exp(-1.0))) < 1e-10);

    auto f2 = [](Complex z) {
        Complex d = z - kI;
        return 1.0 / (d * d);
    };
    CHECK(std::abs(residue_via_circle(f2, kI, 0.7, 32)) < 1e-12);

    // two radii differing by 4x agree
    auto f3 = [](Complex z) { return std::cos(z) / (z - 2.0); };
    Complex small = residue_via_circle(f3, {2, 0}, 0.2, 32);
    Complex big = residue_via_circle(f3, {2, 0}, 0.8, 32);
    CHECK(std::abs(small - big) < 1e-10);
}

TEST_CASE("extrapolated limit route") {
    auto f1 = [](Complex z) { return 1.0 / (z - kI); };
    CHECK(std::abs(residue_limit_extrapolated(f1, kI) - 1.0) < 1e-10);

    // z e^{iz}/(z^2+1) at i: formula oracle gives e^{-1}/2
    auto f2 = [](Complex z) { return z * std::exp(kI * z) / (z * z + 1.0); };
    CHECK(std::abs(residue_limit_extrapolated(f2, kI) - 0.5 * std::exp(-1.0)) <
          1e-8);

    auto dbl = [](Complex z) {
        Complex d = z - kI;
        return 1.0 / (d * d);
    };
    CHECK_THROWS_AS(residue_limit_extrapolated(dbl, kI), PoleError);
}

TEST_CASE("three routes agree at simple poles") {
    struct Case {
        const char* text;      // full integrand
        const char* num_text;  // numerator alone, for the formula route
        Complex pole;
        std::vector<Complex> den;
    };
    std::vector<Case> cases = {
        {"exp(i*z)*z/(z^2+1)", "exp(i*z)*z", kI,
         {Complex(1, 0), Complex(0, 0), Complex(1, 0)}},
        {"cos(z)/(z^2+4)", "cos(z)", Complex(0, 2),
         {Complex(4, 0), Complex(0, 0), Complex(1, 0)}},
        {"(z^2+3)/(z^2+2*z+2)", "z^2+3", Complex(-1, 1),
         {Complex(2, 0), Complex(2, 0), Complex(1, 0)}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.text);
        Expr f = parse_expr(c.text);
        RationalFn den({Complex(1, 0)}, c.den);
        Complex formula =
            residue_simple_pole_formula(parse_expr(c.num_text).evaluator(), den,
                                        c.pole);
        Complex circle = residue_via_circle(
            f.evaluator(), c.pole, default_circle_radius(den, c.pole), 32);
        Complex limit = residue_limit_extrapolated(f.evaluator(), c.pole);
        CHECK(std::abs(formula - circle) <= 1e-10);
        CHECK(std::abs(formula - limit) <= 1e-8);
    }
}

TEST_CASE("linearity in the integrand") {
    const Complex z0(0.4, 1.1);
    auto f = [&](Complex z) { return std::exp(z) / (z - z0); };
    auto g = [&](Complex z) { return std::cos(z) / (z - z0); };
    const Complex alpha(1.25, -0.5), beta(-0.75, 2.0);
    auto combo = [&](Complex z) { return alpha * f(z) + beta * g(z); };
    Complex rf = residue_via_circle(f, z0, 0.5, 64);
    Complex rg = residue_via_circle(g, z0, 0.5, 64);
    Complex rc = residue_via_circle(combo, z0, 0.5, 64);
    CHECK(std::abs(rc - (alpha * rf + beta * rg)) <= 1e-10);
}

TEST_CASE("default radius stays inside the pole gap") {
    RationalFn f({Complex(1, 0)},
                 {Complex(1, 0), Complex(0, 0), Complex(1, 0)}); // poles +-i
    CHECK(default_circle_radius(f, kI) == doctest::Approx(1.0)); // half of 2, capped
    RationalFn tight({Complex(1, 0)},
                     {Complex(0.0225, 0), Complex(0, 0), Complex(1, 0)}); // +-0.15i
    CHECK(default_circle_radius(tight, Complex(0, 0.15)) ==
          doctest::Approx(0.15));
}
