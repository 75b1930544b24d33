#include "torsionlab/identities.hpp"

#include <functional>

#include "torsionlab/catalog.hpp"
#include "torsionlab/checker.hpp"

namespace torsionlab {

namespace {

struct Suite {
    const SceneFile& scene;
    std::uint64_t seed;
    std::vector<IdentityResult> results;

    const ChartPtr& chart() const { return scene.chart; }

    OperatorField rnd_op(unsigned salt, unsigned degree = 1) const {
        FamilySpec spec;
        spec.dim = chart()->dim();
        spec.degree = degree;
        spec.seed = seed * 1000003u + salt;
        return make_random(spec, chart());
    }

    MultiPoly rnd_scalar(unsigned salt, unsigned degree = 1) const {
        return random_scalar(chart(), degree, seed * 2000003u + salt);
    }

    // Operator pairs to exercise: the scene's (A, B) when present, plus a
    // seeded random pair.
    std::vector<std::pair<OperatorField, OperatorField>> pairs(unsigned salt) const {
        std::vector<std::pair<OperatorField, OperatorField>> ps;
        auto a = scene.operators.find("A");
        auto b = scene.operators.find("B");
        if (a != scene.operators.end() && b != scene.operators.end()) {
            ps.emplace_back(a->second, b->second);
        }
        ps.emplace_back(rnd_op(salt), rnd_op(salt + 7));
        return ps;
    }

    void check(const std::string& id, const std::string& title,
               const std::function<bool(std::string&)>& body) {
        IdentityResult r;
        r.id = id;
        r.title = title;
        try {
            r.pass = body(r.detail);
        } catch (const Error& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

} // namespace

std::vector<IdentityResult> run_identity_suite(const SceneFile& scene, std::uint64_t seed) {
    Suite s{scene, seed, {}};
    const ChartPtr& chart = scene.chart;

    s.check("I1", "closed-vs-recursive torsion", [&](std::string& detail) {
        for (int m = 1; m <= 3; ++m) {
            for (unsigned t = 0; t < 2; ++t) {
                OperatorField a = s.rnd_op(10 * m + t);
                if (gen_torsion(a, LevelM(m)) != gen_torsion_closed(a, LevelM(m))) {
                    detail = "mismatch at level " + std::to_string(m);
                    return false;
                }
            }
        }
        return true;
    });

    s.check("I2", "FN bracket diagonal is twice the Nijenhuis torsion", [&](std::string& detail) {
        for (const auto& [a, b] : s.pairs(20)) {
            if (fn_bracket(a, a) != nijenhuis(a).scaled(Rational(2))) {
                detail = "[[A,A]] != 2 tau_A";
                return false;
            }
        }
        return true;
    });

    s.check("I3", "FN bracket component formula", [&](std::string& detail) {
        for (const auto& [a, b] : s.pairs(30)) {
            if (fn_bracket_components(a, b) != fn_bracket(a, b)) {
                detail = "component path deviates from the definitional path";
                return false;
            }
        }
        return true;
    });

    s.check("I4", "FN bracket scaling", [&](std::string& detail) {
        for (const auto& [a, b] : s.pairs(40)) {
            MultiPoly f = s.rnd_scalar(41);
            CovectorField df = CovectorField::differential(chart, f);
            TwoFormField lhs = fn_bracket(a.scaled(f), b);
            TwoFormField rhs = fn_bracket(a, b).scaled(f) - t_form_antisym(b, a, df);
            if (lhs != rhs) {
                detail = "[[fA,B]] deviates from f[[A,B]] - (T - T^T)(df,.,.)";
                return false;
            }
        }
        return true;
    });

    s.check("I5", "torsion scaling laws", [&](std::string& detail) {
        OperatorField a = s.rnd_op(50);
        MultiPoly f = s.rnd_scalar(51);
        MultiPoly g = s.rnd_scalar(52);
        CovectorField df = CovectorField::differential(chart, f);
        TwoFormField lhs = nijenhuis(a.scaled(f));
        TwoFormField rhs = nijenhuis(a).scaled(f * f) - t_form_antisym(a, a, df).scaled(f);
        if (lhs != rhs) {
            detail = "tau_{fA} law fails";
            return false;
        }
        TwoFormField lhs2 =
            gen_torsion(a.scaled(f) + OperatorField::identity(chart).scaled(g), LevelM(2));
        TwoFormField rhs2 = gen_torsion(a, LevelM(2)).scaled(f * f * f * f);
        if (lhs2 != rhs2) {
            detail = "tau^(2)_{fA+gI} law fails";
            return false;
        }
        return true;
    });

    s.check("I6", "level-1 polarization is the FN bracket", [&](std::string& detail) {
        for (const auto& [a, b] : s.pairs(60)) {
            std::vector<OperatorField> ops{a, b};
            if (polarization(LevelM(1), ops) != fn_bracket(a, b)) {
                detail = "P^(1) != [[A,B]]";
                return false;
            }
        }
        return true;
    });

    s.check("I7", "diagonal restriction of the polarization", [&](std::string& detail) {
        OperatorField a = s.rnd_op(70);
        for (int m = 1; m <= 2; ++m) {
            std::vector<OperatorField> ops(2 * m, a);
            TwoFormField expected =
                gen_torsion(a, LevelM(m)).scaled(Rational::factorial(2 * m));
            if (polarization(LevelM(m), ops) != expected) {
                detail = "P^(m)(A..A) != (2m)! tau^(m) at m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    s.check("I8", "polarization path agreement", [&](std::string& detail) {
        {
            std::vector<OperatorField> ops{s.rnd_op(80), s.rnd_op(81)};
            TwoFormField subset = polarization(LevelM(1), ops, PolarizationMethod::subset_sum);
            if (subset != polarization(LevelM(1), ops, PolarizationMethod::lambda_extraction) ||
                subset != polarization(LevelM(1), ops, PolarizationMethod::recurrence)) {
                detail = "level-1 paths disagree";
                return false;
            }
        }
        std::vector<OperatorField> ops{s.rnd_op(82), s.rnd_op(83), s.rnd_op(84), s.rnd_op(85)};
        TwoFormField subset = polarization(LevelM(2), ops, PolarizationMethod::subset_sum);
        if (subset != polarization(LevelM(2), ops, PolarizationMethod::lambda_extraction) ||
            subset != polarization(LevelM(2), ops, PolarizationMethod::recurrence)) {
            detail = "level-2 paths disagree";
            return false;
        }
        return true;
    });

    s.check("I9", "defect recurrence", [&](std::string& detail) {
        std::vector<OperatorField> three{s.rnd_op(90), s.rnd_op(91), s.rnd_op(92)};
        if (!defect_recurrence_check(LevelM(1), three)) {
            detail = "m=1 recurrence fails";
            return false;
        }
        std::vector<OperatorField> four{s.rnd_op(93), s.rnd_op(94), s.rnd_op(95), s.rnd_op(96)};
        if (!defect_recurrence_check(LevelM(2), four)) {
            detail = "m=2 recurrence fails";
            return false;
        }
        return true;
    });

    s.check("I10", "defect vanishes beyond index 2m", [&](std::string& detail) {
        std::vector<OperatorField> three{s.rnd_op(100), s.rnd_op(101), s.rnd_op(102)};
        if (!defect(LevelM(1), three).is_zero()) {
            detail = "Delta_3^(1) != 0";
            return false;
        }
        std::vector<OperatorField> five;
        for (unsigned t = 0; t < 5; ++t) {
            five.push_back(s.rnd_op(103 + t));
        }
        SZReport sz = sz_verify(defect(LevelM(2), five), 20, 1000, seed);
        if (sz.outcome != SZOutcome::all_zero_at_samples) {
            detail = "Delta_5^(2) nonzero at a sample point";
            return false;
        }
        return true;
    });

    s.check("I11", "defect of index 2 as mixed polarizations", [&](std::string& detail) {
        for (int m = 1; m <= 2; ++m) {
            OperatorField a = s.rnd_op(110 + m);
            OperatorField b = s.rnd_op(115 + m);
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
            rhs = rhs.scaled(Rational(1) / Rational::factorial(2 * m));
            if (lhs != rhs) {
                detail = "expansion fails at m=" + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    s.check("I12", "level-2 polarization against the auxiliary brackets",
            [&](std::string& detail) {
        for (const auto& [a, b] : s.pairs(120)) {
            std::vector<OperatorField> aabb{a, a, b, b};
            TwoFormField rhs1 = (higher_haantjes(a, b, LevelM(2)) + h1_bracket(a, b))
                                    .scaled(Rational(4));
            if (polarization(LevelM(2), aabb) != rhs1) {
                detail = "P^(2)(A,A,B,B) != 4(H + H1)";
                return false;
            }
            std::vector<OperatorField> aaab{a, a, a, b};
            if (polarization(LevelM(2), aaab) != h2_bracket(a, b).scaled(Rational(6))) {
                detail = "P^(2)(A,A,A,B) != 6 H2(A,B)";
                return false;
            }
            std::vector<OperatorField> abbb{a, b, b, b};
            if (polarization(LevelM(2), abbb) != h2_bracket(b, a).scaled(Rational(6))) {
                detail = "P^(2)(A,B,B,B) != 6 H2(B,A)";
                return false;
            }
        }
        return true;
    });

    s.check("I13", "level-2 bracket homogeneity on commuting pairs", [&](std::string& detail) {
        FamilySpec spec;
        spec.kind = FamilyKind::powers_of;
        spec.dim = chart->dim();
        spec.degree = 1;
        spec.seed = seed * 1000003u + 130;
        spec.count = 2;
        std::vector<OperatorField> powers = make_powers(spec, chart);
        const OperatorField& a = powers[0];
        const OperatorField& b = powers[1];
        MultiPoly f = s.rnd_scalar(131);
        MultiPoly g = s.rnd_scalar(132);
        MultiPoly h = s.rnd_scalar(133);
        MultiPoly k = s.rnd_scalar(134);
        OperatorField id = OperatorField::identity(chart);
        TwoFormField lhs = higher_haantjes(id.scaled(f) + a.scaled(g),
                                           id.scaled(h) + b.scaled(k), LevelM(2));
        TwoFormField rhs = higher_haantjes(a, b, LevelM(2)).scaled(g * g * k * k);
        if (lhs != rhs) {
            detail = "H(fI+gA, hI+kB) != g^2 k^2 H(A,B)";
            return false;
        }
        return true;
    });

    s.check("I14", "level-2 bracket vanishes on diagonal pairs", [&](std::string& detail) {
        std::vector<MultiPoly> e1, e2;
        for (int i = 0; i < chart->dim(); ++i) {
            e1.push_back(s.rnd_scalar(140 + i, 2));
            e2.push_back(s.rnd_scalar(145 + i, 2));
        }
        OperatorField d1 = make_diagonal(chart, std::move(e1));
        OperatorField d2 = make_diagonal(chart, std::move(e2));
        if (!higher_haantjes(d1, d2, LevelM(2)).is_zero()) {
            detail = "H(D1,D2) != 0 for a diagonal pair";
            return false;
        }
        return true;
    });

    return s.results;
}

} // namespace torsionlab
