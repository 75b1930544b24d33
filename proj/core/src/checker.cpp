#include "torsionlab/checker.hpp"

#include <random>

#include "torsionlab/catalog.hpp"

namespace torsionlab {

bool is_gen_nijenhuis(const OperatorField& A, LevelM m) {
    return gen_torsion(A, m).is_zero();
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::haantjes_vector_space: return "haantjes-vector-space";
    case Verdict::haantjes_module: return "haantjes-module";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::fails: return "fails";
    }
    return "unknown";
}

namespace {

std::optional<Witness> form_witness(const TwoFormField& w, const std::string& check) {
    auto ref = w.first_nonzero();
    if (!ref) {
        return std::nullopt;
    }
    return Witness{check, ref->i + 1, ref->j + 1, ref->k + 1,
                   w.component(ref->i, ref->j, ref->k)};
}

void spot_validate(const OperatorField& A, const OperatorField& B, LevelM m,
                   bool module_case, std::uint64_t seed, ModuleReport& report) {
    const ChartPtr& chart = A.chart();
    MultiPoly f = chart->zero();
    MultiPoly g = chart->zero();
    if (module_case) {
        // Random degree-1 function coefficients; re-derived seeds keep the
        // pair independent.
        f = random_scalar(chart, 1, seed * 2 + 1);
        g = random_scalar(chart, 1, seed * 3 + 2);
    } else {
        std::mt19937_64 eng(seed);
        f = chart->constant(Rational(static_cast<long>(eng() % 7) - 3));
        g = chart->constant(Rational(static_cast<long>(eng() % 7) - 3));
    }
    TwoFormField expanded = gen_torsion(A.scaled(f) + B.scaled(g), m);
    if (!expanded.is_zero()) {
        throw InternalError("spot validation failed: torsion of a combination of "
                            "certified generators is nonzero");
    }
    report.spot_validated = true;
}

} // namespace

ModuleReport check_module(const OperatorField& A, const OperatorField& B, LevelM m,
                          std::uint64_t seed) {
    if (!A.chart()->same_as(*B.chart())) {
        throw ContextError("operators live on different charts");
    }
    ModuleReport report;
    report.level = m.value();
    report.seed = seed;

    TwoFormField tau_a = gen_torsion(A, m);
    TwoFormField tau_b = gen_torsion(B, m);
    report.torsion_a_vanishes = tau_a.is_zero();
    report.torsion_b_vanishes = tau_b.is_zero();
    report.commutes = A.commutator(B).is_zero();

    if (!report.witness) {
        report.witness = form_witness(tau_a, "torsion A");
    }
    if (!report.witness) {
        report.witness = form_witness(tau_b, "torsion B");
    }

    const int count = 2 * m.value();
    bool all_mixed = true;
    report.mixed_conditions.reserve(count - 1);
    for (int k = 1; k <= count - 1; ++k) {
        std::vector<OperatorField> ops;
        ops.reserve(count);
        for (int t = 0; t < count - k; ++t) {
            ops.push_back(A);
        }
        for (int t = 0; t < k; ++t) {
            ops.push_back(B);
        }
        TwoFormField p = polarization(m, ops);
        const bool zero = p.is_zero();
        report.mixed_conditions.push_back(zero);
        all_mixed = all_mixed && zero;
        if (!zero && !report.witness) {
            report.witness = form_witness(p, "condition k=" + std::to_string(k));
        }
    }

    if (!report.torsion_a_vanishes || !report.torsion_b_vanishes || !all_mixed) {
        report.verdict = Verdict::fails;
        return report;
    }
    if (m.value() >= 2 && report.commutes) {
        report.verdict = Verdict::haantjes_module;
        spot_validate(A, B, m, /*module_case=*/true, seed, report);
    } else {
        // All conditions pass: a Haantjes vector space at any level.
        // There is no module notion at m = 1, and without commutation the
        // module claim is not certified at any level.
        report.verdict = Verdict::haantjes_vector_space;
        spot_validate(A, B, m, /*module_case=*/false, seed, report);
    }
    return report;
}

SZReport sz_verify(std::span<const MultiPoly> components, const ChartPtr& chart,
                   int trials, long box, std::uint64_t seed) {
    if (trials < 1) {
        throw UsageError("randomized verification needs at least one trial");
    }
    if (box < 1) {
        throw UsageError("randomized verification needs box >= 1");
    }
    SZReport report;
    report.trials = trials;
    report.box = box;
    report.seed = seed;
    for (const auto& p : components) {
        report.degree_bound = std::max(report.degree_bound, p.total_degree());
    }
    Rational per_trial = Rational(static_cast<long>(report.degree_bound)) /
                         Rational(2 * box + 1);
    if (per_trial > Rational(1)) {
        per_trial = Rational(1);
    }
    report.failure_probability_bound = per_trial.pow(static_cast<unsigned long>(trials));

    std::mt19937_64 eng(seed);
    const std::uint64_t width = static_cast<std::uint64_t>(2 * box + 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> point;
        std::map<VarId, Rational> assignment;
        point.reserve(chart->dim());
        for (int i = 0; i < chart->dim(); ++i) {
            const long value = static_cast<long>(eng() % width) - box;
            point.emplace_back(value);
            assignment.emplace(chart->coordinate_id(i), Rational(value));
        }
        for (std::size_t c = 0; c < components.size(); ++c) {
            Rational value = components[c].evaluate(assignment);
            if (!value.is_zero()) {
                report.outcome = SZOutcome::nonzero_witness;
                report.witness = SZWitness{c, std::nullopt, std::move(point), std::move(value)};
                return report;
            }
        }
    }
    report.outcome = SZOutcome::all_zero_at_samples;
    return report;
}

namespace {

std::vector<MultiPoly> form_components(const TwoFormField& w,
                                       std::vector<std::array<int, 3>>& ijk) {
    std::vector<MultiPoly> components;
    w.for_each([&](int i, int j, int k, const MultiPoly& p) {
        components.push_back(p);
        ijk.push_back({i + 1, j + 1, k + 1});
    });
    return components;
}

} // namespace

SZReport sz_verify(const TwoFormField& w, int trials, long box, std::uint64_t seed) {
    std::vector<std::array<int, 3>> ijk;
    std::vector<MultiPoly> components = form_components(w, ijk);
    SZReport report = sz_verify(components, w.chart(), trials, box, seed);
    if (report.witness) {
        report.witness->ijk = ijk[report.witness->component];
    }
    return report;
}

SZReport sz_verify_at(const TwoFormField& w, const std::vector<std::vector<Rational>>& points,
                      long box) {
    if (points.empty()) {
        throw UsageError("randomized verification needs at least one sample point");
    }
    if (box < 1) {
        throw UsageError("randomized verification needs box >= 1");
    }
    const ChartPtr& chart = w.chart();
    std::vector<std::array<int, 3>> ijk;
    std::vector<MultiPoly> components = form_components(w, ijk);

    SZReport report;
    report.trials = static_cast<int>(points.size());
    report.box = box;
    for (const auto& p : components) {
        report.degree_bound = std::max(report.degree_bound, p.total_degree());
    }
    Rational per_trial = Rational(static_cast<long>(report.degree_bound)) /
                         Rational(2 * box + 1);
    if (per_trial > Rational(1)) {
        per_trial = Rational(1);
    }
    report.failure_probability_bound = per_trial.pow(points.size());

    for (const auto& point : points) {
        if (static_cast<int>(point.size()) != chart->dim()) {
            throw UsageError("sample point dimension mismatch");
        }
        std::map<VarId, Rational> assignment;
        for (int i = 0; i < chart->dim(); ++i) {
            assignment.emplace(chart->coordinate_id(i), point[i]);
        }
        for (std::size_t c = 0; c < components.size(); ++c) {
            Rational value = components[c].evaluate(assignment);
            if (!value.is_zero()) {
                report.outcome = SZOutcome::nonzero_witness;
                report.witness = SZWitness{c, ijk[c], point, std::move(value)};
                return report;
            }
        }
    }
    report.outcome = SZOutcome::all_zero_at_samples;
    return report;
}

} // namespace torsionlab
