#ifndef TORSIONLAB_CATALOG_HPP
#define TORSIONLAB_CATALOG_HPP

#include <cstdint>
#include <vector>

#include "torsionlab/fields.hpp"

namespace torsionlab {

enum class FamilyKind {
    diagonal,
    constant,
    nilpotent_jordan,
    polynomial_random,
    powers_of,
};

/// Deterministic generator recipe for operator families used in tests
/// and docs. Coefficients are small rationals (integers in [-3,3],
/// sometimes halved) so exact torsion expansions stay desk-sized.
struct FamilySpec {
    FamilyKind kind = FamilyKind::polynomial_random;
    int dim = 2;
    unsigned degree = 1;
    std::uint64_t seed = 1;
    int count = 3; // powers_of: how many powers to return
};

/// Chart with coordinates x1..xn.
ChartPtr default_chart(int dim);

OperatorField make_diagonal(const ChartPtr& chart, std::vector<MultiPoly> eigenvalues);

/// One operator from the family recipe (the base operator for powers_of).
OperatorField make_random(const FamilySpec& spec, const ChartPtr& chart);

/// The commuting family {A, A^2, ..., A^count} for a random base A.
std::vector<OperatorField> make_powers(const FamilySpec& spec, const ChartPtr& chart);

/// Deterministic random polynomial of total degree <= degree in the
/// chart coordinates.
MultiPoly random_scalar(const ChartPtr& chart, unsigned degree, std::uint64_t seed);

} // namespace torsionlab

#endif
