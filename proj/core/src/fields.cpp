#include "torsionlab/fields.hpp"

#include <algorithm>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

void require_same_chart(const Chart& a, const Chart& b) {
    if (!a.same_as(b)) {
        throw ContextError("fields live on different charts");
    }
}

} // namespace

VectorField::VectorField(ChartPtr chart, std::vector<MultiPoly> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != chart_->dim()) {
        throw UsageError("vector field needs one component per chart dimension");
    }
    for (const auto& c : components_) {
        if (!c.vars()->same_as(*chart_->vars())) {
            throw ContextError("vector field component over a foreign context");
        }
    }
}

VectorField VectorField::zero(ChartPtr chart) {
    std::vector<MultiPoly> c(chart->dim(), chart->zero());
    return VectorField(std::move(chart), std::move(c));
}

VectorField VectorField::basis(ChartPtr chart, int i) {
    std::vector<MultiPoly> c(chart->dim(), chart->zero());
    c.at(i) = chart->one();
    return VectorField(std::move(chart), std::move(c));
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_chart(*chart_, *o.chart_);
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        c.push_back(components_[i] + o.components_[i]);
    }
    return VectorField(chart_, std::move(c));
}

VectorField VectorField::operator-(const VectorField& o) const {
    require_same_chart(*chart_, *o.chart_);
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        c.push_back(components_[i] - o.components_[i]);
    }
    return VectorField(chart_, std::move(c));
}

VectorField VectorField::operator-() const {
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (const auto& p : components_) {
        c.push_back(-p);
    }
    return VectorField(chart_, std::move(c));
}

VectorField VectorField::scaled(const MultiPoly& f) const {
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (const auto& p : components_) {
        c.push_back(p * f);
    }
    return VectorField(chart_, std::move(c));
}

VectorField VectorField::scaled(const Rational& r) const {
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (const auto& p : components_) {
        c.push_back(p * r);
    }
    return VectorField(chart_, std::move(c));
}

MultiPoly VectorField::apply_to_scalar(const MultiPoly& f) const {
    MultiPoly r = chart_->zero();
    for (int i = 0; i < chart_->dim(); ++i) {
        r += components_[i] * f.derivative(chart_->coordinate_id(i));
    }
    return r;
}

bool VectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
}

bool VectorField::operator==(const VectorField& o) const {
    return chart_->same_as(*o.chart_) && components_ == o.components_;
}

CovectorField::CovectorField(ChartPtr chart, std::vector<MultiPoly> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
    if (static_cast<int>(components_.size()) != chart_->dim()) {
        throw UsageError("covector field needs one component per chart dimension");
    }
}

CovectorField CovectorField::zero(ChartPtr chart) {
    std::vector<MultiPoly> c(chart->dim(), chart->zero());
    return CovectorField(std::move(chart), std::move(c));
}

CovectorField CovectorField::basis(ChartPtr chart, int i) {
    std::vector<MultiPoly> c(chart->dim(), chart->zero());
    c.at(i) = chart->one();
    return CovectorField(std::move(chart), std::move(c));
}

CovectorField CovectorField::differential(const ChartPtr& chart, const MultiPoly& f) {
    std::vector<MultiPoly> c;
    c.reserve(chart->dim());
    for (int i = 0; i < chart->dim(); ++i) {
        c.push_back(f.derivative(chart->coordinate_id(i)));
    }
    return CovectorField(chart, std::move(c));
}

CovectorField CovectorField::operator+(const CovectorField& o) const {
    require_same_chart(*chart_, *o.chart_);
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        c.push_back(components_[i] + o.components_[i]);
    }
    return CovectorField(chart_, std::move(c));
}

CovectorField CovectorField::scaled(const MultiPoly& f) const {
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (const auto& p : components_) {
        c.push_back(p * f);
    }
    return CovectorField(chart_, std::move(c));
}

bool CovectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
}

bool CovectorField::operator==(const CovectorField& o) const {
    return chart_->same_as(*o.chart_) && components_ == o.components_;
}

OperatorField::OperatorField(ChartPtr chart, std::vector<MultiPoly> row_major_entries)
    : chart_(std::move(chart)), entries_(std::move(row_major_entries)) {
    const std::size_t n = static_cast<std::size_t>(chart_->dim());
    if (entries_.size() != n * n) {
        throw UsageError("operator field needs dim*dim entries");
    }
    for (const auto& e : entries_) {
        if (!e.vars()->same_as(*chart_->vars())) {
            throw ContextError("operator entry over a foreign context");
        }
    }
}

OperatorField OperatorField::zero(ChartPtr chart) {
    const std::size_t n = static_cast<std::size_t>(chart->dim());
    std::vector<MultiPoly> e(n * n, chart->zero());
    return OperatorField(std::move(chart), std::move(e));
}

OperatorField OperatorField::identity(ChartPtr chart) {
    const int n = chart->dim();
    std::vector<MultiPoly> e(static_cast<std::size_t>(n) * n, chart->zero());
    for (int i = 0; i < n; ++i) {
        e[static_cast<std::size_t>(i) * n + i] = chart->one();
    }
    return OperatorField(std::move(chart), std::move(e));
}

OperatorField OperatorField::diagonal(ChartPtr chart, std::vector<MultiPoly> eigenvalues) {
    const int n = chart->dim();
    if (static_cast<int>(eigenvalues.size()) != n) {
        throw UsageError("diagonal operator needs one eigenvalue per dimension");
    }
    std::vector<MultiPoly> e(static_cast<std::size_t>(n) * n, chart->zero());
    for (int i = 0; i < n; ++i) {
        e[static_cast<std::size_t>(i) * n + i] = std::move(eigenvalues[i]);
    }
    return OperatorField(std::move(chart), std::move(e));
}

const MultiPoly& OperatorField::entry(int i, int j) const {
    const int n = chart_->dim();
    if (i < 0 || j < 0 || i >= n || j >= n) {
        throw UsageError("operator entry index out of range");
    }
    return entries_[static_cast<std::size_t>(i) * n + j];
}

VectorField OperatorField::apply(const VectorField& X) const {
    require_same_chart(*chart_, *X.chart());
    const int n = chart_->dim();
    std::vector<MultiPoly> c;
    c.reserve(n);
    for (int i = 0; i < n; ++i) {
        MultiPoly s = chart_->zero();
        for (int j = 0; j < n; ++j) {
            s += entry(i, j) * X.component(j);
        }
        c.push_back(std::move(s));
    }
    return VectorField(chart_, std::move(c));
}

VectorField OperatorField::column(int j) const {
    const int n = chart_->dim();
    std::vector<MultiPoly> c;
    c.reserve(n);
    for (int i = 0; i < n; ++i) {
        c.push_back(entry(i, j));
    }
    return VectorField(chart_, std::move(c));
}

OperatorField OperatorField::operator+(const OperatorField& o) const {
    require_same_chart(*chart_, *o.chart_);
    std::vector<MultiPoly> e;
    e.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        e.push_back(entries_[i] + o.entries_[i]);
    }
    return OperatorField(chart_, std::move(e));
}

OperatorField OperatorField::operator-(const OperatorField& o) const {
    require_same_chart(*chart_, *o.chart_);
    std::vector<MultiPoly> e;
    e.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        e.push_back(entries_[i] - o.entries_[i]);
    }
    return OperatorField(chart_, std::move(e));
}

OperatorField OperatorField::compose(const OperatorField& o) const {
    require_same_chart(*chart_, *o.chart_);
    const int n = chart_->dim();
    std::vector<MultiPoly> e;
    e.reserve(entries_.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            MultiPoly s = chart_->zero();
            for (int l = 0; l < n; ++l) {
                s += entry(i, l) * o.entry(l, j);
            }
            e.push_back(std::move(s));
        }
    }
    return OperatorField(chart_, std::move(e));
}

OperatorField OperatorField::scaled(const MultiPoly& f) const {
    std::vector<MultiPoly> e;
    e.reserve(entries_.size());
    for (const auto& p : entries_) {
        e.push_back(p * f);
    }
    return OperatorField(chart_, std::move(e));
}

OperatorField OperatorField::scaled(const Rational& c) const {
    std::vector<MultiPoly> e;
    e.reserve(entries_.size());
    for (const auto& p : entries_) {
        e.push_back(p * c);
    }
    return OperatorField(chart_, std::move(e));
}

OperatorField OperatorField::commutator(const OperatorField& o) const {
    return compose(o) - o.compose(*this);
}

OperatorField OperatorField::power(unsigned k) const {
    OperatorField r = identity(chart_);
    for (unsigned i = 0; i < k; ++i) {
        r = r.compose(*this);
    }
    return r;
}

bool OperatorField::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
}

bool OperatorField::operator==(const OperatorField& o) const {
    return chart_->same_as(*o.chart_) && entries_ == o.entries_;
}

std::size_t TwoFormField::flat_index(int i, int j, int k) const {
    const int n = chart_->dim();
    // Pairs (j,k), j < k, in lexicographic order: offset of (j,k) within
    // the pair block is j*n - j*(j+1)/2 + (k - j - 1).
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t pair_offset =
        static_cast<std::size_t>(j) * n - static_cast<std::size_t>(j) * (j + 1) / 2 +
        static_cast<std::size_t>(k - j - 1);
    return static_cast<std::size_t>(i) * pairs + pair_offset;
}

TwoFormField TwoFormField::zero(ChartPtr chart) {
    const int n = chart->dim();
    const std::size_t count = static_cast<std::size_t>(n) * n * (n - 1) / 2;
    std::vector<MultiPoly> c(count, chart->zero());
    return TwoFormField(std::move(chart), std::move(c));
}

TwoFormField TwoFormField::from_basis_action(
    const ChartPtr& chart, const std::function<VectorField(int, int)>& action) {
    const int n = chart->dim();
    TwoFormField w = zero(chart);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            VectorField value = action(j, k);
            require_same_chart(*chart, *value.chart());
            for (int i = 0; i < n; ++i) {
                w.components_[w.flat_index(i, j, k)] = value.component(i);
            }
        }
    }
    return w;
}

MultiPoly TwoFormField::component(int i, int j, int k) const {
    const int n = chart_->dim();
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) {
        throw UsageError("form component index out of range");
    }
    if (j == k) {
        return chart_->zero();
    }
    if (j < k) {
        return components_[flat_index(i, j, k)];
    }
    return -components_[flat_index(i, k, j)];
}

VectorField TwoFormField::evaluate(const VectorField& X, const VectorField& Y) const {
    require_same_chart(*chart_, *X.chart());
    require_same_chart(*chart_, *Y.chart());
    const int n = chart_->dim();
    std::vector<MultiPoly> c(n, chart_->zero());
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            // W^i_{jk} (X^j Y^k - X^k Y^j), using antisymmetry once per pair.
            MultiPoly weight = X.component(j) * Y.component(k) - X.component(k) * Y.component(j);
            if (weight.is_zero()) {
                continue;
            }
            for (int i = 0; i < n; ++i) {
                c[i] += components_[flat_index(i, j, k)] * weight;
            }
        }
    }
    return VectorField(chart_, std::move(c));
}

void TwoFormField::check_context(const TwoFormField& o) const {
    require_same_chart(*chart_, *o.chart_);
}

TwoFormField TwoFormField::operator+(const TwoFormField& o) const {
    check_context(o);
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        c.push_back(components_[i] + o.components_[i]);
    }
    return TwoFormField(chart_, std::move(c));
}

TwoFormField TwoFormField::operator-(const TwoFormField& o) const {
    check_context(o);
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) {
        c.push_back(components_[i] - o.components_[i]);
    }
    return TwoFormField(chart_, std::move(c));
}

TwoFormField TwoFormField::operator-() const {
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (const auto& p : components_) {
        c.push_back(-p);
    }
    return TwoFormField(chart_, std::move(c));
}

TwoFormField TwoFormField::scaled(const MultiPoly& f) const {
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (const auto& p : components_) {
        c.push_back(p * f);
    }
    return TwoFormField(chart_, std::move(c));
}

TwoFormField TwoFormField::scaled(const Rational& r) const {
    std::vector<MultiPoly> c;
    c.reserve(components_.size());
    for (const auto& p : components_) {
        c.push_back(p * r);
    }
    return TwoFormField(chart_, std::move(c));
}

TwoFormField TwoFormField::transformed_by(const OperatorField& A) const {
    require_same_chart(*chart_, *A.chart());
    const int n = chart_->dim();
    TwoFormField w = zero(chart_);
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                MultiPoly s = chart_->zero();
                for (int l = 0; l < n; ++l) {
                    s += A.entry(i, l) * components_[flat_index(l, j, k)];
                }
                w.components_[w.flat_index(i, j, k)] = std::move(s);
            }
        }
    }
    return w;
}

bool TwoFormField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const MultiPoly& p) { return p.is_zero(); });
}

bool TwoFormField::operator==(const TwoFormField& o) const {
    return chart_->same_as(*o.chart_) && components_ == o.components_;
}

std::optional<TwoFormField::ComponentRef> TwoFormField::first_nonzero() const {
    const int n = chart_->dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (!components_[flat_index(i, j, k)].is_zero()) {
                    return ComponentRef{i, j, k};
                }
            }
        }
    }
    return std::nullopt;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    require_same_chart(*X.chart(), *Y.chart());
    const ChartPtr& chart = X.chart();
    const int n = chart->dim();
    std::vector<MultiPoly> c;
    c.reserve(n);
    for (int i = 0; i < n; ++i) {
        MultiPoly s = chart->zero();
        for (int j = 0; j < n; ++j) {
            const VarId xj = chart->coordinate_id(j);
            s += X.component(j) * Y.component(i).derivative(xj);
            s -= Y.component(j) * X.component(i).derivative(xj);
        }
        c.push_back(std::move(s));
    }
    return VectorField(chart, std::move(c));
}

MultiPoly pairing(const CovectorField& alpha, const VectorField& X) {
    require_same_chart(*alpha.chart(), *X.chart());
    MultiPoly s = alpha.chart()->zero();
    for (int i = 0; i < alpha.chart()->dim(); ++i) {
        s += alpha.component(i) * X.component(i);
    }
    return s;
}

VectorField t_tensor(const OperatorField& A, const OperatorField& B,
                     const CovectorField& alpha, const VectorField& X,
                     const VectorField& Y, bool transpose) {
    require_same_chart(*A.chart(), *B.chart());
    require_same_chart(*A.chart(), *alpha.chart());
    require_same_chart(*A.chart(), *X.chart());
    require_same_chart(*A.chart(), *Y.chart());
    const VectorField& first = transpose ? Y : X;
    const VectorField& second = transpose ? X : Y;
    // ⟨α,X⟩ (AB)Y - ⟨α,AX⟩ BY
    VectorField lhs = A.apply(B.apply(second)).scaled(pairing(alpha, first));
    VectorField rhs = B.apply(second).scaled(pairing(alpha, A.apply(first)));
    return lhs - rhs;
}

TwoFormField t_form_antisym(const OperatorField& A, const OperatorField& B,
                            const CovectorField& alpha) {
    return TwoFormField::from_basis_action(A.chart(), [&](int j, int k) {
        VectorField ej = VectorField::basis(A.chart(), j);
        VectorField ek = VectorField::basis(A.chart(), k);
        return t_tensor(A, B, alpha, ej, ek) - t_tensor(A, B, alpha, ek, ej);
    });
}

} // namespace torsionlab
