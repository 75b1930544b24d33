#ifndef TORSIONLAB_POLYNOMIAL_HPP
#define TORSIONLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torsionlab/rational.hpp"

namespace torsionlab {

using VarId = std::uint32_t;

/// Chart coordinates and formal parameters share one namespace; the kind
/// tag keeps coordinate-only operations (differentiation, sampling) away
/// from the parameters.
enum class VarKind : std::uint8_t { coordinate, parameter };

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Immutable ordered set of named variables. Polynomials over the same
/// table (structurally) are compatible.
class VarTable {
public:
    static VarTablePtr make(std::vector<std::string> names, std::vector<VarKind> kinds);

    std::size_t size() const { return names_.size(); }
    const std::string& name(VarId v) const { return names_.at(v); }
    VarKind kind(VarId v) const { return kinds_.at(v); }
    std::optional<VarId> find(std::string_view name) const;

    bool same_as(const VarTable& other) const {
        return this == &other || (names_ == other.names_ && kinds_ == other.kinds_);
    }

private:
    VarTable(std::vector<std::string> names, std::vector<VarKind> kinds)
        : names_(std::move(names)), kinds_(std::move(kinds)) {}

    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
};

/// Product of variable powers; no zero exponents stored.
class Monomial {
public:
    using Factor = std::pair<VarId, unsigned>;

    Monomial() = default; // the unit monomial
    static Monomial variable(VarId v, unsigned exponent = 1);
    /// Merges duplicates, drops zero exponents, sorts by variable id.
    static Monomial from_factors(std::vector<Factor> factors);

    bool is_unit() const { return factors_.empty(); }
    unsigned degree() const;
    unsigned exponent(VarId v) const;
    std::span<const Factor> factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;

    /// <0, 0, >0 in graded lexicographic order (total degree first, then
    /// exponent sequence with lower-id variables dominating).
    static int grlex_compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
    std::vector<Factor> factors_; // sorted by VarId, exponents > 0
};

/// Descending graded-lex: map iteration order equals print order.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::grlex_compare(a, b) > 0;
    }
};

/// Sparse multivariate polynomial over Rational, in canonical form: no
/// zero coefficients, terms ordered by descending graded-lex. Equality is
/// term-map equality. Values are immutable in spirit: every operation
/// returns a fresh canonical polynomial.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    static MultiPoly zero(VarTablePtr vars);
    static MultiPoly constant(VarTablePtr vars, Rational c);
    static MultiPoly variable(VarTablePtr vars, VarId v);
    static MultiPoly monomial(VarTablePtr vars, Monomial m, Rational c);

    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

    /// Formal partial derivative with respect to v.
    MultiPoly derivative(VarId v) const;

    /// Exact evaluation; the point must assign every variable occurring
    /// in the polynomial.
    Rational evaluate(const std::map<VarId, Rational>& point) const;

    /// Coefficient of a parameter monomial: sums the terms whose
    /// parameter part equals m exactly, with m divided out. m must only
    /// involve parameter variables. coefficient_of(p, unit) restricts p
    /// to its parameter-free part.
    MultiPoly coefficient_of(const Monomial& m) const;

    /// Rational coefficient of an exact monomial (zero when absent).
    Rational coefficient(const Monomial& m) const;

    /// Re-expresses the polynomial over a different table, matching
    /// variables by name. Unknown names are a context error.
    MultiPoly with_vars(const VarTablePtr& target) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;
    unsigned degree_in_kind(VarKind kind) const;
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Canonical rendering: descending graded-lex, `p/q` coefficients,
    /// `*` between factors, `^` for powers, e.g. `3/2*x^2*y - y + 1`.
    std::string str() const;

private:
    MultiPoly(VarTablePtr vars, TermMap terms)
        : vars_(std::move(vars)), terms_(std::move(terms)) {}

    void check_context(const MultiPoly& o) const;

    VarTablePtr vars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace torsionlab

#endif
