#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "torsionlab/catalog.hpp"
#include "torsionlab/torsion.hpp"

using namespace torsionlab;

// ---------------------------------------------------------------------------
// Brute-force oracle: expands the defining formulas on raw component
// vectors with nothing but polynomial arithmetic. Kept independent of the
// engine's form/contraction machinery on purpose.
namespace oracle {

using Vec = std::vector<MultiPoly>;
using Mat = std::vector<std::vector<MultiPoly>>;

Mat matrix_of(const OperatorField& a) {
    const int n = a.chart()->dim();
    Mat m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[i].push_back(a.entry(i, j));
        }
    }
    return m;
}

Vec apply(const ChartPtr& chart, const Mat& a, const Vec& x) {
    const int n = chart->dim();
    Vec r(n, chart->zero());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            r[i] += a[i][j] * x[j];
        }
    }
    return r;
}

Vec lie(const ChartPtr& chart, const Vec& x, const Vec& y) {
    const int n = chart->dim();
    Vec r(n, chart->zero());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            r[i] += x[j] * y[i].derivative(chart->coordinate_id(j));
            r[i] -= y[j] * x[i].derivative(chart->coordinate_id(j));
        }
    }
    return r;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] += b[i];
    }
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] -= b[i];
    }
    return r;
}

Vec basis(const ChartPtr& chart, int i) {
    Vec e(chart->dim(), chart->zero());
    e[i] = chart->one();
    return e;
}

// tau_A(X,Y) = A^2[X,Y] + [AX,AY] - A([X,AY] + [AX,Y])
Vec nijenhuis(const ChartPtr& chart, const Mat& a, const Vec& x, const Vec& y) {
    Vec ax = apply(chart, a, x);
    Vec ay = apply(chart, a, y);
    Vec r = apply(chart, a, apply(chart, a, lie(chart, x, y)));
    r = add(r, lie(chart, ax, ay));
    r = sub(r, apply(chart, a, add(lie(chart, x, ay), lie(chart, ax, y))));
    return r;
}

// H_A(X,Y) = A^2 tau(X,Y) + tau(AX,AY) - A(tau(X,AY) + tau(AX,Y))
Vec haantjes(const ChartPtr& chart, const Mat& a, const Vec& x, const Vec& y) {
    Vec ax = apply(chart, a, x);
    Vec ay = apply(chart, a, y);
    Vec r = apply(chart, a, apply(chart, a, nijenhuis(chart, a, x, y)));
    r = add(r, nijenhuis(chart, a, ax, ay));
    r = sub(r, apply(chart, a, add(nijenhuis(chart, a, x, ay), nijenhuis(chart, a, ax, y))));
    return r;
}

} // namespace oracle

namespace {

OperatorField rnd_op(const ChartPtr& chart, std::uint64_t seed, unsigned degree = 1) {
    FamilySpec spec;
    spec.dim = chart->dim();
    spec.degree = degree;
    spec.seed = seed;
    return make_random(spec, chart);
}

bool matches_oracle_nijenhuis(const OperatorField& a) {
    const ChartPtr& chart = a.chart();
    TwoFormField tau = nijenhuis(a);
    oracle::Mat m = oracle::matrix_of(a);
    for (int j = 0; j < chart->dim(); ++j) {
        for (int k = j + 1; k < chart->dim(); ++k) {
            oracle::Vec expected =
                oracle::nijenhuis(chart, m, oracle::basis(chart, j), oracle::basis(chart, k));
            for (int i = 0; i < chart->dim(); ++i) {
                if (tau.component(i, j, k) != expected[i]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("nijenhuis torsion of the running example") {
    auto chart = default_chart(2);
    MultiPoly x1 = chart->coordinate(0);
    MultiPoly x2 = chart->coordinate(1);
    OperatorField a = make_diagonal(chart, {x2, x1});
    TwoFormField tau = nijenhuis(a);
    MultiPoly expected = x2 - x1;
    CHECK(tau.component(0, 0, 1) == expected);
    CHECK(tau.component(1, 0, 1) == expected);
    CHECK(matches_oracle_nijenhuis(a));

    // tau(d1,d2) = (x2-x1)(d1+d2)
    VectorField value = tau.evaluate(VectorField::basis(chart, 0), VectorField::basis(chart, 1));
    CHECK(value == (VectorField::basis(chart, 0) + VectorField::basis(chart, 1)).scaled(expected));
}

TEST_CASE("nijenhuis torsion trivia") {
    auto chart = default_chart(2);
    FamilySpec constant_spec;
    constant_spec.kind = FamilyKind::constant;
    constant_spec.seed = 3;
    CHECK(nijenhuis(make_random(constant_spec, chart)).is_zero());
    CHECK(nijenhuis(OperatorField::identity(chart)).is_zero());
    MultiPoly f = random_scalar(chart, 2, 4);
    CHECK(nijenhuis(OperatorField::identity(chart).scaled(f)).is_zero());
}

TEST_CASE("nijenhuis matches the brute-force oracle on random operators") {
    for (int n = 2; n <= 3; ++n) {
        auto chart = default_chart(n);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            CHECK(matches_oracle_nijenhuis(rnd_op(chart, seed)));
        }
    }
}

TEST_CASE("nijenhuis functional form") {
    auto chart = default_chart(2);
    OperatorField a = rnd_op(chart, 12);
    TwoFormField tau = nijenhuis(a);
    VectorField e1 = VectorField::basis(chart, 0);
    VectorField e2 = VectorField::basis(chart, 1);
    CHECK(nijenhuis_functional(a, e1, e2) == tau.evaluate(e1, e2));

    MultiPoly f = random_scalar(chart, 2, 13);
    MultiPoly g = random_scalar(chart, 2, 14);
    VectorField x = e1.scaled(f) + e2.scaled(g);
    VectorField y = e2.scaled(f * f);
    CHECK(nijenhuis_functional(a, x, x).is_zero());
    CHECK(nijenhuis_functional(a, x.scaled(f), y) == nijenhuis_functional(a, x, y).scaled(f));
    CHECK(nijenhuis_functional(a, x, y) == tau.evaluate(x, y));
    CHECK(nijenhuis_functional(a, x.scaled(f), y.scaled(g)) ==
          tau.evaluate(x, y).scaled(f * g));
}

TEST_CASE("generalized torsion base and Haantjes example") {
    auto chart = default_chart(2);
    MultiPoly x1 = chart->coordinate(0);
    MultiPoly x2 = chart->coordinate(1);
    OperatorField a = make_diagonal(chart, {x2, x1});
    CHECK(gen_torsion(a, LevelM(2)).is_zero());
    CHECK(haantjes(a) == gen_torsion(a, LevelM(2)));

    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        OperatorField b = rnd_op(chart, 20 + seed);
        CHECK(gen_torsion(b, LevelM(1)) == nijenhuis(b));
    }
    CHECK_THROWS_AS(LevelM(0), UsageError);
    CHECK_THROWS_AS(LevelM(-2), UsageError);
}

TEST_CASE("haantjes of the running example against the brute-force oracle") {
    auto chart = default_chart(2);
    OperatorField a = rnd_op(chart, 99);
    TwoFormField h = haantjes(a);
    oracle::Mat m = oracle::matrix_of(a);
    for (int i = 0; i < 2; ++i) {
        CHECK(h.component(i, 0, 1) ==
              oracle::haantjes(chart, m, oracle::basis(chart, 0), oracle::basis(chart, 1))[i]);
    }
}

TEST_CASE("diagonal operators are Haantjes") {
    for (int n = 2; n <= 3; ++n) {
        auto chart = default_chart(n);
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            std::vector<MultiPoly> eigenvalues;
            for (int i = 0; i < n; ++i) {
                eigenvalues.push_back(random_scalar(chart, 2, 100 * seed + i));
            }
            CHECK(haantjes(make_diagonal(chart, eigenvalues)).is_zero());
        }
    }
}

TEST_CASE("level scaling tau^(m)(fA+gI) = f^2m tau^(m)(A)") {
    auto chart = default_chart(2);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        OperatorField a = rnd_op(chart, 30 + seed);
        MultiPoly f = random_scalar(chart, 1, 40 + seed);
        MultiPoly g = random_scalar(chart, 1, 50 + seed);
        OperatorField combo = a.scaled(f) + OperatorField::identity(chart).scaled(g);
        CHECK(gen_torsion(combo, LevelM(2)) ==
              gen_torsion(a, LevelM(2)).scaled(f * f * f * f));
    }
}

TEST_CASE("closed formula reproduces the recursive torsion") {
    // m=1 term-by-term against the Nijenhuis definition
    auto chart2 = default_chart(2);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        OperatorField a = rnd_op(chart2, 60 + seed);
        CHECK(gen_torsion_closed(a, LevelM(1)) == nijenhuis(a));
    }
    // m=2 on the diagonal example (both vanish)
    OperatorField diag = make_diagonal(chart2, {chart2->coordinate(1), chart2->coordinate(0)});
    CHECK(gen_torsion_closed(diag, LevelM(2)).is_zero());
    CHECK(gen_torsion_closed(diag, LevelM(2)) == gen_torsion(diag, LevelM(2)));
    // m up to 3, n up to 3, oracle = recursive path
    for (int n = 2; n <= 3; ++n) {
        auto chart = default_chart(n);
        for (int m = 1; m <= 3; ++m) {
            for (std::uint64_t seed = 1; seed <= 2; ++seed) {
                OperatorField a = rnd_op(chart, 70 + 10 * m + seed);
                CHECK(gen_torsion_closed(a, LevelM(m)) == gen_torsion(a, LevelM(m)));
            }
        }
    }
}

TEST_CASE("fn bracket properties") {
    auto chart = default_chart(2);
    OperatorField a = rnd_op(chart, 81);
    OperatorField b = rnd_op(chart, 82);
    OperatorField id = OperatorField::identity(chart);

    CHECK(fn_bracket(a, a) == nijenhuis(a).scaled(Rational(2)));
    CHECK(fn_bracket(a, id).is_zero());
    CHECK(fn_bracket(a, b) == fn_bracket(b, a));
    CHECK(fn_bracket(a, b) == nijenhuis(a + b) - nijenhuis(a) - nijenhuis(b));

    // R-bilinearity
    CHECK(fn_bracket(a.scaled(Rational(3, 2)), b) == fn_bracket(a, b).scaled(Rational(3, 2)));
    OperatorField c = rnd_op(chart, 83);
    CHECK(fn_bracket(a + c, b) == fn_bracket(a, b) + fn_bracket(c, b));
}

TEST_CASE("fn bracket component formula matches the definitional path") {
    auto chart = default_chart(2);
    OperatorField diag = make_diagonal(chart, {chart->coordinate(1), chart->coordinate(0)});
    CHECK(fn_bracket_components(diag, diag) == nijenhuis(diag).scaled(Rational(2)));

    FamilySpec constant_spec;
    constant_spec.kind = FamilyKind::constant;
    constant_spec.seed = 5;
    OperatorField c1 = make_random(constant_spec, chart);
    constant_spec.seed = 6;
    OperatorField c2 = make_random(constant_spec, chart);
    CHECK(fn_bracket_components(c1, c2).is_zero());

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        OperatorField a = rnd_op(chart, 90 + seed);
        OperatorField b = rnd_op(chart, 95 + seed);
        CHECK(fn_bracket_components(a, b) == fn_bracket(a, b));
    }
}

TEST_CASE("fn bracket scaling law") {
    auto chart = default_chart(2);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        OperatorField a = rnd_op(chart, 101 + seed);
        OperatorField b = rnd_op(chart, 104 + seed);
        MultiPoly f = random_scalar(chart, 2, 107 + seed);
        CovectorField df = CovectorField::differential(chart, f);
        CHECK(fn_bracket(a.scaled(f), b) ==
              fn_bracket(a, b).scaled(f) - t_form_antisym(b, a, df));
    }
}

TEST_CASE("nijenhuis scaling law with the T-tensor correction") {
    auto chart = default_chart(2);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        OperatorField a = rnd_op(chart, 111 + seed);
        MultiPoly f = random_scalar(chart, 2, 115 + seed);
        CovectorField df = CovectorField::differential(chart, f);
        // tau_{fA} + f (T - T^T)(df,.,.) = f^2 tau_A
        CHECK(nijenhuis(a.scaled(f)) + t_form_antisym(a, a, df).scaled(f) ==
              nijenhuis(a).scaled(f * f));
    }
}

TEST_CASE("defect base cases") {
    auto chart = default_chart(2);
    OperatorField a = rnd_op(chart, 121);
    OperatorField b = rnd_op(chart, 122);
    OperatorField c = rnd_op(chart, 123);

    std::vector<OperatorField> single{a};
    CHECK(defect(LevelM(1), single) == nijenhuis(a));
    CHECK(defect(LevelM(2), single) == haantjes(a));

    std::vector<OperatorField> pair{a, b};
    CHECK(defect(LevelM(1), pair) == fn_bracket(a, b));

    std::vector<OperatorField> triple{a, b, c};
    CHECK(defect(LevelM(1), triple).is_zero());

    CHECK_THROWS_AS(defect(LevelM(1), std::vector<OperatorField>{}), UsageError);
}

TEST_CASE("defect is symmetric in its arguments") {
    auto chart = default_chart(2);
    std::vector<OperatorField> ops{rnd_op(chart, 131), rnd_op(chart, 132)};
    TwoFormField base = defect(LevelM(2), ops);
    std::vector<OperatorField> swapped{ops[1], ops[0]};
    CHECK(defect(LevelM(2), swapped) == base);

    std::vector<OperatorField> three{rnd_op(chart, 133), rnd_op(chart, 134), rnd_op(chart, 135)};
    TwoFormField d3 = defect(LevelM(2), three);
    std::vector<OperatorField> rotated{three[2], three[0], three[1]};
    CHECK(defect(LevelM(2), rotated) == d3);
}

TEST_CASE("defect recurrence") {
    auto chart = default_chart(2);
    FamilySpec constant_spec;
    constant_spec.kind = FamilyKind::constant;
    std::vector<OperatorField> constants;
    for (std::uint64_t s = 1; s <= 3; ++s) {
        constant_spec.seed = s;
        constants.push_back(make_random(constant_spec, chart));
    }
    CHECK(defect_recurrence_check(LevelM(1), constants));

    OperatorField diag = make_diagonal(chart, {chart->coordinate(1), chart->coordinate(0)});
    std::vector<OperatorField> mixed{diag, rnd_op(chart, 141), rnd_op(chart, 142)};
    CHECK(defect_recurrence_check(LevelM(1), mixed));

    std::vector<OperatorField> four{rnd_op(chart, 143), rnd_op(chart, 144), rnd_op(chart, 145),
                                    rnd_op(chart, 146)};
    CHECK(defect_recurrence_check(LevelM(2), four));

    CHECK_THROWS_AS(defect_recurrence_check(LevelM(1), std::vector<OperatorField>{diag}),
                    UsageError);
}

TEST_CASE("polarization arity and base identities") {
    auto chart = default_chart(2);
    OperatorField a = rnd_op(chart, 151);
    OperatorField b = rnd_op(chart, 152);

    std::vector<OperatorField> pair{a, b};
    CHECK(polarization(LevelM(1), pair) == fn_bracket(a, b));

    std::vector<OperatorField> quad{a, a, a, a};
    CHECK(polarization(LevelM(2), quad) == haantjes(a).scaled(Rational(24)));

    std::vector<MultiPoly> d1{chart->coordinate(0), chart->coordinate(1)};
    std::vector<OperatorField> diagonals{
        make_diagonal(chart, {chart->coordinate(0), chart->coordinate(1)}),
        make_diagonal(chart, {chart->coordinate(1), chart->coordinate(0)}),
        make_diagonal(chart, {chart->coordinate(0) * chart->coordinate(1), chart->one()}),
        make_diagonal(chart, {chart->one() + chart->coordinate(0), chart->coordinate(1)})};
    CHECK(polarization(LevelM(2), diagonals).is_zero());

    CHECK_THROWS_AS(polarization(LevelM(2), pair), UsageError);
    CHECK_THROWS_AS(polarization(LevelM(1), quad), UsageError);
}

TEST_CASE("polarization paths agree") {
    auto chart = default_chart(2);
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        std::vector<OperatorField> pair{rnd_op(chart, 160 + seed), rnd_op(chart, 165 + seed)};
        TwoFormField subset = polarization(LevelM(1), pair, PolarizationMethod::subset_sum);
        CHECK(polarization(LevelM(1), pair, PolarizationMethod::lambda_extraction) == subset);
        CHECK(polarization(LevelM(1), pair, PolarizationMethod::recurrence) == subset);

        std::vector<OperatorField> quad{rnd_op(chart, 170 + seed), rnd_op(chart, 175 + seed),
                                        rnd_op(chart, 180 + seed), rnd_op(chart, 185 + seed)};
        TwoFormField subset2 = polarization(LevelM(2), quad, PolarizationMethod::subset_sum);
        CHECK(polarization(LevelM(2), quad, PolarizationMethod::lambda_extraction) == subset2);
        CHECK(polarization(LevelM(2), quad, PolarizationMethod::recurrence) == subset2);
    }
}

TEST_CASE("delta_2 expansion in mixed polarizations") {
    auto chart = default_chart(2);
    for (int m = 1; m <= 2; ++m) {
        OperatorField a = rnd_op(chart, 190 + m);
        OperatorField b = rnd_op(chart, 195 + m);
        std::vector<OperatorField> two{a, b};
        TwoFormField lhs = defect(LevelM(m), two);
        TwoFormField rhs = TwoFormField::zero(chart);
        for (int k = 1; k <= 2 * m - 1; ++k) {
            std::vector<OperatorField> ops;
            for (int t = 0; t < 2 * m - k; ++t) {
                ops.push_back(a);
            }
            for (int t = 0; t < k; ++t) {
                ops.push_back(b);
            }
            rhs = rhs + polarization(LevelM(m), ops).scaled(Rational::binomial(2 * m, k));
        }
        CHECK(lhs == rhs.scaled(Rational(1) / Rational::factorial(2 * m)));
    }
}

TEST_CASE("multilinearity checks") {
    auto chart = default_chart(2);
    MultiPoly x1 = chart->coordinate(0);
    MultiPoly x2 = chart->coordinate(1);

    // C-infinity multilinearity on a commuting (diagonal) quadruple
    std::vector<OperatorField> diagonals{
        make_diagonal(chart, {x1, x2}), make_diagonal(chart, {x2, x1}),
        make_diagonal(chart, {x1 * x2, x1}), make_diagonal(chart, {chart->one(), x2})};
    CHECK(multilinearity_check(LevelM(2), diagonals, x1 * x2, 0));

    // R-linearity of the FN bracket
    std::vector<OperatorField> pair{rnd_op(chart, 201), rnd_op(chart, 202)};
    CHECK(multilinearity_check(LevelM(1), pair, chart->constant(Rational(5, 3)), 0));
    CHECK(multilinearity_check(LevelM(1), pair, chart->constant(Rational(5, 3)), 1));

    // powers of one operator commute; any slot, polynomial scale
    OperatorField base = rnd_op(chart, 203);
    std::vector<OperatorField> powers{base, base.power(2), base.power(3),
                                      base + OperatorField::identity(chart)};
    MultiPoly f = random_scalar(chart, 1, 204);
    for (int slot = 0; slot < 4; ++slot) {
        CHECK(multilinearity_check(LevelM(2), powers, f, slot));
    }

    // non-commuting quadruple with a genuine function is rejected
    std::vector<OperatorField> mixed{rnd_op(chart, 205), rnd_op(chart, 206), rnd_op(chart, 207),
                                     rnd_op(chart, 208)};
    CHECK_THROWS_AS(multilinearity_check(LevelM(2), mixed, x1, 0), CommutativityError);
    CHECK_THROWS_AS(multilinearity_check(LevelM(2), pair, x1, 0), UsageError);

    // the FN bracket is not C-infinity linear: witness
    OperatorField id = OperatorField::identity(chart);
    OperatorField b = make_diagonal(chart, {x2, x1});
    std::vector<OperatorField> witness{id, b};
    CHECK_FALSE(multilinearity_check(LevelM(1), witness, x1, 0));
}

TEST_CASE("higher haantjes bracket") {
    auto chart = default_chart(2);
    OperatorField a = rnd_op(chart, 211);
    OperatorField b = rnd_op(chart, 212);

    CHECK(higher_haantjes(a, b, LevelM(1)) == fn_bracket(a, b));
    CHECK(higher_haantjes(a, b, LevelM(2)) == higher_haantjes(b, a, LevelM(2)));
    CHECK(higher_haantjes(a, a, LevelM(2)) == haantjes(a).scaled(Rational(4)));

    OperatorField d1 = make_diagonal(chart, {chart->coordinate(1), chart->coordinate(0)});
    OperatorField d2 = make_diagonal(chart, {chart->coordinate(0) * chart->coordinate(1),
                                             chart->coordinate(0) + chart->coordinate(1)});
    CHECK(higher_haantjes(d1, d2, LevelM(2)).is_zero());
}

TEST_CASE("bracket homogeneity for commuting pairs") {
    auto chart = default_chart(2);
    FamilySpec spec;
    spec.kind = FamilyKind::powers_of;
    spec.seed = 221;
    spec.count = 2;
    std::vector<OperatorField> powers = make_powers(spec, chart);
    const OperatorField& a = powers[0];
    const OperatorField& b = powers[1];
    MultiPoly f = random_scalar(chart, 1, 222);
    MultiPoly g = random_scalar(chart, 1, 223);
    MultiPoly h = random_scalar(chart, 1, 224);
    MultiPoly k = random_scalar(chart, 1, 225);
    OperatorField id = OperatorField::identity(chart);
    CHECK(higher_haantjes(id.scaled(f) + a.scaled(g), id.scaled(h) + b.scaled(k), LevelM(2)) ==
          higher_haantjes(a, b, LevelM(2)).scaled(g * g * k * k));
}

TEST_CASE("auxiliary brackets H1 and H2") {
    auto chart = default_chart(2);
    OperatorField a = rnd_op(chart, 231);
    OperatorField b = rnd_op(chart, 232);

    CHECK(h1_bracket(a, a) == haantjes(a).scaled(Rational(2)));
    CHECK(h2_bracket(a, a) == haantjes(a).scaled(Rational(4)));
    CHECK(h1_bracket(a, b) == h1_bracket(b, a));

    // the level-2 polarization identities
    std::vector<OperatorField> aabb{a, a, b, b};
    CHECK(polarization(LevelM(2), aabb) ==
          (higher_haantjes(a, b, LevelM(2)) + h1_bracket(a, b)).scaled(Rational(4)));
    std::vector<OperatorField> aaab{a, a, a, b};
    CHECK(polarization(LevelM(2), aaab) == h2_bracket(a, b).scaled(Rational(6)));
    std::vector<OperatorField> abbb{a, b, b, b};
    CHECK(polarization(LevelM(2), abbb) == h2_bracket(b, a).scaled(Rational(6)));

    // diagonal pair: everything in Prop 3.17 is zero
    OperatorField d1 = make_diagonal(chart, {chart->coordinate(0), chart->coordinate(1)});
    OperatorField d2 = make_diagonal(chart, {chart->coordinate(1), chart->coordinate(0)});
    std::vector<OperatorField> ddqq{d1, d1, d2, d2};
    CHECK(polarization(LevelM(2), ddqq).is_zero());
    CHECK(h1_bracket(d1, d2).is_zero());
    CHECK(higher_haantjes(d1, d2, LevelM(2)).is_zero());
}

TEST_CASE("one-dimensional charts are torsion-free") {
    auto chart = default_chart(1);
    OperatorField a = make_diagonal(chart, {chart->coordinate(0) * chart->coordinate(0)});
    CHECK(nijenhuis(a).is_zero());
    CHECK(gen_torsion_closed(a, LevelM(2)).is_zero());
    CHECK(fn_bracket(a, a).is_zero());
    std::vector<OperatorField> pair{a, a};
    CHECK(polarization(LevelM(1), pair).is_zero());
}

TEST_CASE("every produced form is antisymmetric") {
    auto chart = default_chart(3);
    OperatorField a = rnd_op(chart, 241);
    OperatorField b = rnd_op(chart, 242);
    for (const TwoFormField& w : {nijenhuis(a), haantjes(a), fn_bracket(a, b),
                                  fn_bracket_components(a, b), h2_bracket(a, b)}) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                for (int k = 0; k < 3; ++k) {
                    CHECK(w.component(i, j, k) == -w.component(i, k, j));
                }
            }
        }
    }
}
