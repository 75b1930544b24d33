#ifndef TORSIONLAB_FIELDS_HPP
#define TORSIONLAB_FIELDS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "torsionlab/chart.hpp"

namespace torsionlab {

/// Vector field X = X^i ∂_i with polynomial components.
class VectorField {
public:
    VectorField(ChartPtr chart, std::vector<MultiPoly> components);
    static VectorField zero(ChartPtr chart);
    static VectorField basis(ChartPtr chart, int i); // ∂_i

    const ChartPtr& chart() const { return chart_; }
    const MultiPoly& component(int i) const { return components_.at(i); }

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const;
    VectorField scaled(const MultiPoly& f) const;
    VectorField scaled(const Rational& c) const;

    /// Directional derivative X(f) = Σ X^i ∂_i f.
    MultiPoly apply_to_scalar(const MultiPoly& f) const;

    bool is_zero() const;
    bool operator==(const VectorField& o) const;

private:
    ChartPtr chart_;
    std::vector<MultiPoly> components_;
};

/// Covector field α = α_i dx^i.
class CovectorField {
public:
    CovectorField(ChartPtr chart, std::vector<MultiPoly> components);
    static CovectorField zero(ChartPtr chart);
    static CovectorField basis(ChartPtr chart, int i); // dx^i
    static CovectorField differential(const ChartPtr& chart, const MultiPoly& f); // df

    const ChartPtr& chart() const { return chart_; }
    const MultiPoly& component(int i) const { return components_.at(i); }

    CovectorField operator+(const CovectorField& o) const;
    CovectorField scaled(const MultiPoly& f) const;
    bool is_zero() const;
    bool operator==(const CovectorField& o) const;

private:
    ChartPtr chart_;
    std::vector<MultiPoly> components_;
};

/// (1,1)-tensor field: an n×n matrix of polynomials, A^i_j with i the
/// output (row) index.
class OperatorField {
public:
    OperatorField(ChartPtr chart, std::vector<MultiPoly> row_major_entries);
    static OperatorField zero(ChartPtr chart);
    static OperatorField identity(ChartPtr chart);
    static OperatorField diagonal(ChartPtr chart, std::vector<MultiPoly> eigenvalues);

    const ChartPtr& chart() const { return chart_; }
    const MultiPoly& entry(int i, int j) const;

    VectorField apply(const VectorField& X) const;
    VectorField column(int j) const; // A ∂_j

    OperatorField operator+(const OperatorField& o) const;
    OperatorField operator-(const OperatorField& o) const;
    OperatorField compose(const OperatorField& o) const; // this ∘ o, matrix product
    OperatorField scaled(const MultiPoly& f) const;
    OperatorField scaled(const Rational& c) const;
    OperatorField commutator(const OperatorField& o) const; // AB - BA
    OperatorField power(unsigned k) const;

    bool is_zero() const;
    bool operator==(const OperatorField& o) const;

private:
    ChartPtr chart_;
    std::vector<MultiPoly> entries_; // row-major, entry(i,j) = entries_[i*n+j]
};

/// Vector-valued antisymmetric 2-form, stored tensorially on the
/// coordinate basis: the components W^i_{jk} for j < k. W^i_{kj} = -W^i_{jk}
/// and the j = k diagonal is identically zero by construction.
class TwoFormField {
public:
    static TwoFormField zero(ChartPtr chart);
    /// Builds a form from its basis action: action(j, k) = W(∂_j, ∂_k)
    /// for j < k. Antisymmetry holds by construction.
    static TwoFormField from_basis_action(const ChartPtr& chart,
                                          const std::function<VectorField(int, int)>& action);

    const ChartPtr& chart() const { return chart_; }

    /// W^i_{jk} for any j, k (sign-adjusted; zero on the diagonal).
    MultiPoly component(int i, int j, int k) const;

    /// Contraction (W(X,Y))^i = Σ_{jk} W^i_{jk} X^j Y^k.
    VectorField evaluate(const VectorField& X, const VectorField& Y) const;

    TwoFormField operator+(const TwoFormField& o) const;
    TwoFormField operator-(const TwoFormField& o) const;
    TwoFormField operator-() const;
    TwoFormField scaled(const MultiPoly& f) const;
    TwoFormField scaled(const Rational& c) const;
    /// A ∘ W: applies an operator to the value slot, (A W)^i_{jk} = A^i_l W^l_{jk}.
    TwoFormField transformed_by(const OperatorField& A) const;

    bool is_zero() const;
    bool operator==(const TwoFormField& o) const;
    bool operator!=(const TwoFormField& o) const { return !(*this == o); }

    struct ComponentRef {
        int i, j, k; // 0-based, j < k
    };
    /// Lexicographically first (i, j, k) with a nonzero component.
    std::optional<ComponentRef> first_nonzero() const;

    /// Stored components in lexicographic (i, j<k) order.
    template <typename Fn> // Fn(int i, int j, int k, const MultiPoly&)
    void for_each(Fn&& fn) const {
        const int n = chart_->dim();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    fn(i, j, k, components_[flat_index(i, j, k)]);
                }
            }
        }
    }

private:
    TwoFormField(ChartPtr chart, std::vector<MultiPoly> components)
        : chart_(std::move(chart)), components_(std::move(components)) {}

    std::size_t flat_index(int i, int j, int k) const; // requires j < k
    void check_context(const TwoFormField& o) const;

    ChartPtr chart_;
    std::vector<MultiPoly> components_; // i major, then (j,k) with j < k
};

/// Lie bracket of vector fields, [X,Y]^i = Σ_j (X^j ∂_j Y^i - Y^j ∂_j X^i).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// Natural pairing ⟨α, X⟩ = Σ_i α_i X^i.
MultiPoly pairing(const CovectorField& alpha, const VectorField& X);

/// The (1,2)-tensor (I⊗AB - A⊗B)(α,X,Y) = ⟨α,X⟩(AB)Y - ⟨α,AX⟩BY.
/// With transpose set, the last two arguments are swapped.
VectorField t_tensor(const OperatorField& A, const OperatorField& B,
                     const CovectorField& alpha, const VectorField& X,
                     const VectorField& Y, bool transpose = false);

/// The antisymmetric part of the T-tensor in its vector slots, packaged
/// as a 2-form: (T(A,B) - T^T(A,B))(α, ·, ·).
TwoFormField t_form_antisym(const OperatorField& A, const OperatorField& B,
                            const CovectorField& alpha);

} // namespace torsionlab

#endif
