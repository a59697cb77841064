#include <doctest.h>

#include <cmath>
#include <random>

#include "resint/expr.hpp"

using namespace resint;

TEST_CASE("grammar produces the expected trees") {
    CHECK(parse_expr("z/(z^2+1)").dump() == "(/ z (+ (^ z 2) 1))");
    CHECK(parse_expr("exp(exp(i*z))*z/(z^2+1)").dump() ==
          "(/ (* (exp (exp (* i z))) z) (+ (^ z 2) 1))");
    CHECK(parse_expr("1+2*3").dump() == "(+ 1 (* 2 3))");
    CHECK(parse_expr("-z^2").dump() == "(^ (neg z) 2)"); // '-' binds inside the atom
    CHECK(parse_expr("pi").dump() == "3.141593");
    CHECK(parse_expr("2.5*e").dump() == "(* 2.5 2.718282)");
}

TEST_CASE("syntax errors carry byte offsets") {
    CHECK_THROWS_WITH_AS(parse_expr("z/("), doctest::Contains("offset 3"),
                         ParseError);
    try {
        parse_expr("z/(");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(parse_expr(""), ParseError);
    CHECK_THROWS_AS(parse_expr("1+"), ParseError);
    CHECK_THROWS_AS(parse_expr("sin 3"), ParseError);
    CHECK_THROWS_AS(parse_expr("tan(z)"), ParseError);
    CHECK_THROWS_AS(parse_expr("z)"), ParseError);
    CHECK_THROWS_AS(parse_expr("2e3"), ParseError); // no exponent literals
}

TEST_CASE("depth and exponent limits") {
    CHECK_THROWS_AS(parse_expr("z^65"), ParseError);
    CHECK_NOTHROW(parse_expr("z^64"));
    CHECK_NOTHROW(parse_expr("z^-64"));

    std::string deep = "z";
    for (int k = 0; k < 200; ++k) deep = "(" + deep + ")";
    CHECK_THROWS_AS(parse_expr(deep), ParseError);
}

TEST_CASE("evaluation matches closed forms") {
    Expr euler = parse_expr("exp(i*z)");
    CHECK(std::abs(eval_expr(euler, Complex(M_PI, 0.0)) - Complex(-1.0, 0.0)) <
          1e-15);

    // |e^{e^{ix}}| = e^{cos x}, arg = sin x on the real axis; value e at 0.
    Expr nested = parse_expr("exp(exp(i*z))");
    CHECK(std::abs(eval_expr(nested, Complex(0.0, 0.0)) - Complex(M_E, 0.0)) <
          1e-14);
    for (double x : {0.3, 1.7, -2.4}) {
        Complex v = eval_expr(nested, Complex(x, 0.0));
        CHECK(std::abs(std::abs(v) - std::exp(std::cos(x))) < 1e-14);
        CHECK(std::abs(std::remainder(std::arg(v) - std::sin(x), 2 * M_PI)) <
              1e-14);
    }

    Expr rational = parse_expr("z/(z^2+1)");
    CHECK_THROWS_AS(eval_expr(rational, Complex(0.0, 1.0)), EvalError);

    CHECK_THROWS_AS(eval_expr(parse_expr("log(z)"), Complex(0.0, 0.0)), EvalError);
    CHECK(std::abs(eval_expr(parse_expr("log(z)"), Complex(-1.0, 0.0)) -
                   Complex(0.0, M_PI)) < 1e-15); // principal branch
    CHECK_THROWS_AS(eval_expr(parse_expr("exp(z)"), Complex(1e9, 0.0)), EvalError);

    CHECK(std::abs(eval_expr(parse_expr("z^-2"), Complex(2.0, 0.0)) -
                   Complex(0.25, 0.0)) < 1e-15);
    CHECK_THROWS_AS(eval_expr(parse_expr("z^-1"), Complex(0.0, 0.0)), EvalError);
}

TEST_CASE("property: |exp(i b z)| = e^{-b y}") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> xs(-20.0, 20.0), ys(0.0, 5.0),
        bs(0.25, 4.0);
    for (int k = 0; k < 200; ++k) {
        const double x = xs(rng), y = ys(rng), b = bs(rng);
        const Complex v = std::exp(Complex(0.0, b) * Complex(x, y));
        CHECK(std::abs(std::abs(v) - std::exp(-b * y)) <=
              1e-14 * std::max(1.0, std::exp(-b * y)));
    }
}
