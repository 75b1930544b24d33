#include "torsionlab/catalog.hpp"

#include <random>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

// Engine-output reduction instead of uniform_int_distribution keeps the
// streams identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long next_int(long lo, long hi) {
        const auto range = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(eng_() % range);
    }

    bool next_bool() { return (eng_() & 1u) != 0; }

    Rational next_coeff() {
        const long n = next_int(-3, 3);
        return next_bool() ? Rational(n) : Rational(n, 2);
    }

private:
    std::mt19937_64 eng_;
};

void enumerate_monomials(const ChartPtr& chart, unsigned degree,
                         std::vector<Monomial::Factor>& current, int next_var,
                         std::vector<Monomial>& out) {
    if (next_var == chart->dim()) {
        out.push_back(Monomial::from_factors(current));
        return;
    }
    unsigned used = 0;
    for (const auto& [v, e] : current) {
        used += e;
    }
    for (unsigned e = 0; e + used <= degree; ++e) {
        if (e > 0) {
            current.emplace_back(chart->coordinate_id(next_var), e);
        }
        enumerate_monomials(chart, degree, current, next_var + 1, out);
        if (e > 0) {
            current.pop_back();
        }
    }
}

std::vector<Monomial> monomials_up_to(const ChartPtr& chart, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> current;
    enumerate_monomials(chart, degree, current, 0, out);
    return out;
}

MultiPoly random_poly(const ChartPtr& chart, unsigned degree, Rng& rng) {
    MultiPoly p = chart->zero();
    for (const auto& m : monomials_up_to(chart, degree)) {
        if (!rng.next_bool()) {
            continue;
        }
        Rational c = rng.next_coeff();
        if (c.is_zero()) {
            continue;
        }
        p += MultiPoly::monomial(chart->vars(), m, std::move(c));
    }
    return p;
}

void check_spec(const FamilySpec& spec, const ChartPtr& chart) {
    if (spec.dim < 1) {
        throw UsageError("family dimension must be >= 1");
    }
    if (spec.dim != chart->dim()) {
        throw UsageError("family dimension does not match the chart");
    }
}

} // namespace

ChartPtr default_chart(int dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (int i = 1; i <= dim; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return Chart::make(std::move(names));
}

OperatorField make_diagonal(const ChartPtr& chart, std::vector<MultiPoly> eigenvalues) {
    return OperatorField::diagonal(chart, std::move(eigenvalues));
}

OperatorField make_random(const FamilySpec& spec, const ChartPtr& chart) {
    check_spec(spec, chart);
    Rng rng(spec.seed);
    const int n = spec.dim;
    switch (spec.kind) {
    case FamilyKind::diagonal: {
        std::vector<MultiPoly> eigenvalues;
        eigenvalues.reserve(n);
        for (int i = 0; i < n; ++i) {
            eigenvalues.push_back(random_poly(chart, spec.degree, rng));
        }
        return OperatorField::diagonal(chart, std::move(eigenvalues));
    }
    case FamilyKind::constant: {
        std::vector<MultiPoly> entries;
        entries.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n * n; ++i) {
            entries.push_back(chart->constant(rng.next_coeff()));
        }
        return OperatorField(chart, std::move(entries));
    }
    case FamilyKind::nilpotent_jordan: {
        // Zero diagonal, random superdiagonal: a strictly upper
        // triangular single block, nilpotent by construction.
        std::vector<MultiPoly> entries(static_cast<std::size_t>(n) * n, chart->zero());
        for (int i = 0; i + 1 < n; ++i) {
            entries[static_cast<std::size_t>(i) * n + i + 1] =
                random_poly(chart, spec.degree, rng);
        }
        return OperatorField(chart, std::move(entries));
    }
    case FamilyKind::polynomial_random:
    case FamilyKind::powers_of: {
        std::vector<MultiPoly> entries;
        entries.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n * n; ++i) {
            entries.push_back(random_poly(chart, spec.degree, rng));
        }
        return OperatorField(chart, std::move(entries));
    }
    }
    throw UsageError("unknown family kind");
}

std::vector<OperatorField> make_powers(const FamilySpec& spec, const ChartPtr& chart) {
    check_spec(spec, chart);
    if (spec.count < 1) {
        throw UsageError("powers family needs count >= 1");
    }
    OperatorField base = make_random(spec, chart);
    std::vector<OperatorField> family;
    family.reserve(spec.count);
    family.push_back(base);
    for (int i = 1; i < spec.count; ++i) {
        family.push_back(family.back().compose(base));
    }
    return family;
}

MultiPoly random_scalar(const ChartPtr& chart, unsigned degree, std::uint64_t seed) {
    Rng rng(seed);
    return random_poly(chart, degree, rng);
}

} // namespace torsionlab
