#include <doctest.h>

#include <cmath>
#include <random>

#include "resint/catalog.hpp"

using namespace resint;

TEST_CASE("closed forms at pinned points") {
    Params p;
    CHECK(closed_form(FormulaId::F1_quiz, p) ==
          doctest::Approx(0.5 * M_PI * std::expm1(std::exp(-1.0))).epsilon(1e-15));
    CHECK(closed_form(FormulaId::F2_parameters, p) ==
          doctest::Approx(closed_form(FormulaId::F1_quiz, p)).epsilon(1e-15));
    CHECK(closed_form(FormulaId::F1_quiz, p) == doctest::Approx(0.69848).epsilon(1e-4));
    CHECK(closed_form(FormulaId::FD_dissertation, p) ==
          doctest::Approx(M_PI * M_PI / 6.0).epsilon(1e-15));

    p.b = 1.0;
    CHECK(closed_form(FormulaId::F5_discont, p) ==
          doctest::Approx(0.5 * M_PI / M_E).epsilon(1e-15));
    CHECK(closed_form(FormulaId::F5_discont, p) ==
          doctest::Approx(0.577864).epsilon(1e-5));

    // F10 vanishes as a -> 0+
    Params small = p;
    small.c = 2.0;
    small.a = 1e-12;
    CHECK(closed_form(FormulaId::F10_log_two, small) ==
          doctest::Approx(0.0).epsilon(1e-10));

    // F8 at a -> 0+ with r = 1 reduces to the scaled b-exponential
    Params f8 = p;
    f8.a = 1e-13;
    f8.c = 1.5;
    f8.r = 1.0;
    CHECK(closed_form(FormulaId::F8_denom_one, f8) ==
          doctest::Approx(0.5 * M_PI / (f8.c * f8.c) * std::exp(-f8.b))
              .epsilon(1e-10));
}

TEST_CASE("invalid parameters are rejected") {
    Params p;
    p.a = 2.0;
    p.c = 1.0; // c <= a
    CHECK_THROWS_AS(closed_form(FormulaId::F8_denom_one, p), ParamError);
    CHECK_THROWS_AS(closed_form(FormulaId::F9_log_one, p), ParamError);
    CHECK_THROWS_AS(closed_form(FormulaId::F10_log_two, p), ParamError);

    Params q;
    q.b = -1.0;
    CHECK_THROWS_AS(closed_form(FormulaId::F2_parameters, q), ParamError);
    CHECK_THROWS_AS(formula_from_name("F11_unknown"), ParamError);
    CHECK_THROWS_AS(build_route(FormulaId::FD_dissertation, Params{}), ParamError);
}

TEST_CASE("route evaluation equals the closed form (pure arithmetic)") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> u(0.2, 2.5);
    for (int trial = 0; trial < 50; ++trial) {
        Params p;
        p.a = u(rng);
        p.b = u(rng);
        p.r = u(rng);
        p.c = p.a * (1.2 + u(rng)); // keep c > a with headroom
        for (FormulaId id : all_formulas()) {
            if (!formula_has_route(id)) continue;
            CAPTURE(formula_name(id));
            CAPTURE(p.a);
            CAPTURE(p.b);
            CAPTURE(p.r);
            CAPTURE(p.c);
            const double closed = closed_form(id, p);
            const double via_route = route_value(build_route(id, p));
            CHECK(std::abs(via_route - closed) <=
                  1e-10 * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST_CASE("fake parameter reduction") {
    Params p;
    p.a = 1.0;
    p.b = 2.0;
    p.r = 3.0;
    Params q = reduce_fake_parameter(p);
    CHECK(q.a == 1.0);
    CHECK(q.b == 1.0);
    CHECK(q.r == 6.0);

    Params idp;
    Params idq = reduce_fake_parameter(idp);
    CHECK(idq.b == 1.0);
    CHECK(idq.r == idp.r);

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(0.3, 2.2);
    for (int trial = 0; trial < 40; ++trial) {
        Params w;
        w.a = u(rng);
        w.b = u(rng);
        w.r = u(rng);
        w.c = w.a * (1.3 + u(rng));
        const Params red = reduce_fake_parameter(w);
        for (FormulaId id :
             {FormulaId::F2_parameters, FormulaId::F6_hyper_one,
              FormulaId::F7_hyper_two, FormulaId::F8_denom_one,
              FormulaId::F9_log_one, FormulaId::F10_log_two}) {
            CAPTURE(formula_name(id));
            const double lhs = closed_form(id, w);
            const double rhs = fake_parameter_scale(id, w) * closed_form(id, red);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("numeric values are invariant under the reduction") {
    Params p;
    p.a = 1.0;
    p.b = 2.0;
    p.r = 0.75;
    const double tol = 1e-6;
    const Params red = reduce_fake_parameter(p);
    for (FormulaId id : {FormulaId::F2_parameters, FormulaId::F7_hyper_two}) {
        const double direct =
            evaluate_real_integral(build_integrand(id, p), tol).value.real();
        const double reduced =
            evaluate_real_integral(build_integrand(id, red), tol).value.real();
        CHECK(std::abs(direct - reduced) <= 2.0 * tol);
    }
}

TEST_CASE("blunder mode reproduces the historical off-by-pi/2") {
    for (double a : {0.6, 1.0}) {
        Params p;
        p.a = a;
        p.b = 1.3;
        p.r = 0.8;
        const double truth = closed_form(FormulaId::F2_parameters, p);
        DerivationRoute blunder = build_route(FormulaId::F2_parameters, p, true);
        const double wrong = route_value(blunder, false);
        CHECK(std::abs(wrong - truth - 0.5 * M_PI) <= 1e-10);
        CHECK(wrong ==
              doctest::Approx(0.5 * M_PI * std::exp(a * std::exp(-p.b * p.r)))
                  .epsilon(1e-12));
        // the honest evaluator refuses the blunder route
        CHECK_THROWS_AS(route_value(blunder, true), HypothesisError);
        CHECK_THROWS_AS(build_route(FormulaId::F6_hyper_one, p, true), ParamError);
    }
}

TEST_CASE("eq-5 discontinuity between limit and point value") {
    double prev = 1e9;
    for (double b : {0.5, 0.125, 0.03125, 0.0078125}) {
        Params p;
        p.b = b;
        const double gap = std::abs(closed_form(FormulaId::F5_discont, p) - M_PI / 2);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 0.013);
}

TEST_CASE("verify_formula produces coherent reports") {
    VerificationReport rep =
        verify_formula(FormulaId::F2_parameters, Params{}, 1e-6);
    CHECK(rep.pass);
    REQUIRE(rep.numeric.has_value());
    REQUIRE(rep.theorem.has_value());
    CHECK(rep.numeric->rel_error <= 1e-6);
    CHECK(rep.theorem->rel_error <= 1e-10);
    CHECK(rep.closed_value == doctest::Approx(0.6984826).epsilon(1e-6));
    REQUIRE(rep.hypotheses.has_value());
    CHECK(rep.hypotheses->overall);
    CHECK(rep.errors.empty());

    VerificationReport fd =
        verify_formula(FormulaId::FD_dissertation, Params{}, 1e-6);
    CHECK(fd.pass);
    CHECK(fd.numeric.has_value());
    CHECK_FALSE(fd.theorem.has_value());
}
