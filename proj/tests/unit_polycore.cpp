#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "torsionlab/catalog.hpp"
#include "torsionlab/parse.hpp"

using namespace torsionlab;

namespace {

ChartPtr xy_chart() {
    return Chart::make({"x", "y"});
}

MultiPoly p(const ChartPtr& chart, const std::string& src) {
    return parse_poly(src, chart);
}

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK_THROWS_AS(Rational(1, 0), UsageError);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(-5).abs() == Rational(5));
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::factorial(4) == Rational(24));
    CHECK(Rational::binomial(4, 2) == Rational(6));
    CHECK(Rational::binomial(2, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), UsageError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), UsageError);
}

TEST_CASE("monomial grlex order") {
    const Monomial one;
    const Monomial x = Monomial::variable(0);
    const Monomial y = Monomial::variable(1);
    const Monomial x2 = Monomial::variable(0, 2);
    CHECK(Monomial::grlex_compare(x2, x * y) < 0); // later variable dominates
    CHECK(Monomial::grlex_compare(x * y, x2) > 0);
    CHECK(Monomial::grlex_compare(x2, y) > 0); // degree first
    CHECK(Monomial::grlex_compare(x, one) > 0);
    CHECK(Monomial::grlex_compare(y, x) > 0);
    CHECK(Monomial::grlex_compare(x, x) == 0);
    CHECK((x * y).degree() == 2);
    CHECK((x * x).exponent(0) == 2);
}

TEST_CASE("poly addition") {
    auto chart = xy_chart();
    CHECK(p(chart, "x + y") + p(chart, "x - y") == p(chart, "2*x"));
    CHECK(p(chart, "x^2 + 1") + p(chart, "-x^2") == p(chart, "1"));
    MultiPoly q = p(chart, "3*x*y - 2");
    CHECK(q + chart->zero() == q);
    CHECK((q - q).is_zero());

    auto other = Chart::make({"u", "v"});
    CHECK_THROWS_AS(q + other->one(), ContextError);
}

TEST_CASE("poly multiplication") {
    auto chart = xy_chart();
    CHECK(p(chart, "(x + y) * (x + y)") == p(chart, "x^2 + 2*x*y + y^2"));
    MultiPoly q = p(chart, "x^2*y - 1/2*y");
    CHECK(q * chart->one() == q);
    CHECK((q * chart->zero()).is_zero());
    CHECK(p(chart, "x + y").total_degree() == 1);
    CHECK((q * q).total_degree() == 6);
}

TEST_CASE("poly differentiation") {
    auto chart = xy_chart();
    const VarId x = chart->coordinate_id(0);
    const VarId y = chart->coordinate_id(1);
    CHECK(p(chart, "x^2*y").derivative(x) == p(chart, "2*x*y"));
    CHECK(p(chart, "x^2").derivative(y).is_zero());

    // Oracle: expand (x+y)^2 and differentiate term by term with the
    // power rule applied by hand.
    MultiPoly expanded = p(chart, "x^2") + p(chart, "2*x*y") + p(chart, "y^2");
    MultiPoly by_hand = p(chart, "2*x") + p(chart, "2*y");
    CHECK(expanded.derivative(x) == by_hand);
    CHECK(p(chart, "(x + y)^2").derivative(x) == by_hand);
}

TEST_CASE("poly evaluation") {
    auto chart = xy_chart();
    const VarId x = chart->coordinate_id(0);
    const VarId y = chart->coordinate_id(1);
    std::map<VarId, Rational> at{{x, Rational(2)}, {y, Rational(1, 2)}};
    CHECK(p(chart, "x^2 + y").evaluate(at) == Rational(9, 2));
    CHECK(chart->zero().evaluate({}) == Rational(0));

    std::map<VarId, Rational> pt{{x, Rational(3)}, {y, Rational(1)}};
    CHECK(p(chart, "(x - y)*(x + y)").evaluate(pt) == Rational(8));
    CHECK(p(chart, "x^2 - y^2").evaluate(pt) == Rational(8));

    CHECK_THROWS_AS(p(chart, "x*y").evaluate({{x, Rational(1)}}), ContextError);
}

TEST_CASE("coefficient extraction of parameter monomials") {
    auto chart = Chart::make({"x"})->extended_with_parameters(3);
    MultiPoly l1 = chart->parameter(0);
    MultiPoly l2 = chart->parameter(1);
    MultiPoly l3 = chart->parameter(2);
    MultiPoly x = chart->coordinate(0);

    // d^n/dl1..dln (l1+..+ln)^n = n!
    MultiPoly square = (l1 + l2) * (l1 + l2);
    Monomial l1l2 = Monomial::variable(chart->parameter_id(0)) *
                    Monomial::variable(chart->parameter_id(1));
    CHECK(square.coefficient_of(l1l2) == chart->constant(Rational(2)));

    MultiPoly cube = (l1 + l2 + l3) * (l1 + l2 + l3) * (l1 + l2 + l3);
    Monomial l123 = l1l2 * Monomial::variable(chart->parameter_id(2));
    CHECK(cube.coefficient_of(l123) == chart->constant(Rational(6)));

    CHECK((x * l2).coefficient_of(Monomial::variable(chart->parameter_id(0))).is_zero());
    CHECK_THROWS_AS(x.coefficient_of(Monomial::variable(chart->coordinate_id(0))), UsageError);
}

TEST_CASE("coefficient extraction product rule") {
    auto chart = Chart::make({"x"})->extended_with_parameters(2);
    const Monomial l1 = Monomial::variable(chart->parameter_id(0));
    const Monomial l2 = Monomial::variable(chart->parameter_id(1));
    const Monomial l1l2 = l1 * l2;
    const Monomial unit;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        // lambda-degree <= 1 per variable: c0 + c1 l1 + c2 l2 + c3 l1 l2
        auto part = [&](std::uint64_t s) {
            MultiPoly r = random_scalar(chart, 1, 4 * seed + s);
            r += random_scalar(chart, 1, 4 * seed + s + 100) * chart->parameter(0);
            r += random_scalar(chart, 1, 4 * seed + s + 200) * chart->parameter(1);
            r += random_scalar(chart, 1, 4 * seed + s + 300) * chart->parameter(0) *
                 chart->parameter(1);
            return r;
        };
        MultiPoly a = part(0);
        MultiPoly b = part(1);
        MultiPoly lhs = (a * b).coefficient_of(l1l2);
        MultiPoly rhs = a.coefficient_of(l1) * b.coefficient_of(l2) +
                        a.coefficient_of(l2) * b.coefficient_of(l1) +
                        a.coefficient_of(l1l2) * b.coefficient_of(unit) +
                        a.coefficient_of(unit) * b.coefficient_of(l1l2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("canonicality of arithmetic") {
    auto chart = xy_chart();
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        MultiPoly a = random_scalar(chart, 3, seed);
        MultiPoly b = random_scalar(chart, 3, seed + 1000);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b).terms() == (b + a).terms());
    }
}

TEST_CASE("differentiation commutes") {
    auto chart = xy_chart();
    const VarId x = chart->coordinate_id(0);
    const VarId y = chart->coordinate_id(1);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        MultiPoly q = random_scalar(chart, 4, seed);
        CHECK(q.derivative(x).derivative(y) == q.derivative(y).derivative(x));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    auto chart = xy_chart();
    const VarId x = chart->coordinate_id(0);
    const VarId y = chart->coordinate_id(1);
    MultiPoly a = random_scalar(chart, 4, 7);
    MultiPoly b = random_scalar(chart, 4, 8);
    std::mt19937_64 eng(42);
    for (int t = 0; t < 100; ++t) {
        std::map<VarId, Rational> pt{
            {x, Rational(static_cast<long>(eng() % 41) - 20)},
            {y, Rational(static_cast<long>(eng() % 41) - 20, 1 + static_cast<long>(eng() % 3))}};
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("canonical rendering") {
    auto chart = xy_chart();
    CHECK(p(chart, "3/2*x^2*y - y + 1").str() == "3/2*x^2*y - y + 1");
    CHECK(chart->zero().str() == "0");
    CHECK(p(chart, "-x").str() == "-x");
    CHECK(p(chart, "y - x").str() == "y - x");
    CHECK(p(chart, "x*x*x").str() == "x^3");
    CHECK(p(chart, "1/2 + x").str() == "x + 1/2");
    CHECK(p(chart, "x^2 + x*y + y^2").str() == "y^2 + x*y + x^2");
}

TEST_CASE("context transport by name") {
    auto chart = xy_chart();
    auto ext = chart->extended_with_parameters(1);
    MultiPoly q = p(chart, "x^2 - y");
    MultiPoly lifted = q.with_vars(ext->vars());
    CHECK(lifted.str() == q.str());
    CHECK(lifted.with_vars(chart->vars()) == q);
    MultiPoly with_param = lifted * ext->parameter(0);
    CHECK_THROWS_AS(with_param.with_vars(chart->vars()), ContextError);
}
