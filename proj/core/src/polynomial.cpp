#include "torsionlab/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "torsionlab/errors.hpp"

namespace torsionlab {

VarTablePtr VarTable::make(std::vector<std::string> names, std::vector<VarKind> kinds) {
    if (names.size() != kinds.size()) {
        throw UsageError("variable table: names/kinds size mismatch");
    }
    if (names.empty()) {
        throw UsageError("variable table must not be empty");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
        if (n.empty()) {
            throw UsageError("variable table: empty variable name");
        }
        if (!seen.insert(n).second) {
            throw UsageError("variable table: duplicate variable '" + n + "'");
        }
    }
    return VarTablePtr(new VarTable(std::move(names), std::move(kinds)));
}

std::optional<VarId> VarTable::find(std::string_view name) const {
    for (VarId v = 0; v < names_.size(); ++v) {
        if (names_[v] == name) {
            return v;
        }
    }
    return std::nullopt;
}

Monomial Monomial::variable(VarId v, unsigned exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.emplace_back(v, exponent);
    }
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) {
            continue;
        }
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
    }
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : factors_) {
        d += e;
    }
    return d;
}

unsigned Monomial::exponent(VarId v) const {
    for (const auto& [w, e] : factors_) {
        if (w == v) {
            return e;
        }
        if (w > v) {
            break;
        }
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) {
            r.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

int Monomial::grlex_compare(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) {
        return da < db ? -1 : 1;
    }
    // Same degree: lexicographic with later-declared variables dominant,
    // so e.g. on (x1, x2) the difference x2 - x1 prints in that order.
    auto ia = a.factors_.rbegin();
    auto ib = b.factors_.rbegin();
    while (ia != a.factors_.rend() && ib != b.factors_.rend()) {
        if (ia->first != ib->first) {
            // The side holding the higher variable id has a positive
            // exponent where the other has zero.
            return ia->first > ib->first ? 1 : -1;
        }
        if (ia->second != ib->second) {
            return ia->second < ib->second ? -1 : 1;
        }
        ++ia;
        ++ib;
    }
    if (ia != a.factors_.rend()) {
        return 1;
    }
    if (ib != b.factors_.rend()) {
        return -1;
    }
    return 0;
}

MultiPoly MultiPoly::zero(VarTablePtr vars) {
    return MultiPoly(std::move(vars), TermMap{});
}

MultiPoly MultiPoly::constant(VarTablePtr vars, Rational c) {
    TermMap terms;
    if (!c.is_zero()) {
        terms.emplace(Monomial{}, std::move(c));
    }
    return MultiPoly(std::move(vars), std::move(terms));
}

MultiPoly MultiPoly::variable(VarTablePtr vars, VarId v) {
    if (v >= vars->size()) {
        throw ContextError("variable id out of range");
    }
    TermMap terms;
    terms.emplace(Monomial::variable(v), Rational(1));
    return MultiPoly(std::move(vars), std::move(terms));
}

MultiPoly MultiPoly::monomial(VarTablePtr vars, Monomial m, Rational c) {
    TermMap terms;
    if (!c.is_zero()) {
        terms.emplace(std::move(m), std::move(c));
    }
    return MultiPoly(std::move(vars), std::move(terms));
}

void MultiPoly::check_context(const MultiPoly& o) const {
    if (!vars_->same_as(*o.vars_)) {
        throw ContextError("polynomials over different variable contexts");
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_context(o);
    TermMap terms = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms.erase(it);
            }
        }
    }
    return MultiPoly(vars_, std::move(terms));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_context(o);
    TermMap terms = terms_;
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) {
                terms.erase(it);
            }
        }
    }
    return MultiPoly(vars_, std::move(terms));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_context(o);
    TermMap terms;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            terms[ma * mb] += ca * cb;
        }
    }
    std::erase_if(terms, [](const auto& t) { return t.second.is_zero(); });
    return MultiPoly(vars_, std::move(terms));
}

MultiPoly MultiPoly::operator-() const {
    TermMap terms;
    for (const auto& [m, c] : terms_) {
        terms.emplace(m, -c);
    }
    return MultiPoly(vars_, std::move(terms));
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (c.is_zero()) {
        return zero(vars_);
    }
    TermMap terms;
    for (const auto& [m, k] : terms_) {
        terms.emplace(m, k * c);
    }
    return MultiPoly(vars_, std::move(terms));
}

MultiPoly MultiPoly::derivative(VarId v) const {
    if (v >= vars_->size()) {
        throw ContextError("derivative with respect to unknown variable");
    }
    TermMap terms;
    for (const auto& [m, c] : terms_) {
        const unsigned e = m.exponent(v);
        if (e == 0) {
            continue;
        }
        std::vector<Monomial::Factor> factors(m.factors().begin(), m.factors().end());
        for (auto& f : factors) {
            if (f.first == v) {
                f.second -= 1;
            }
        }
        terms.emplace(Monomial::from_factors(std::move(factors)), c * Rational(static_cast<long>(e)));
    }
    return MultiPoly(vars_, std::move(terms));
}

Rational MultiPoly::evaluate(const std::map<VarId, Rational>& point) const {
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end()) {
                throw ContextError("evaluation point misses variable '" + vars_->name(v) + "'");
            }
            value *= it->second.pow(e);
        }
        total += value;
    }
    return total;
}

MultiPoly MultiPoly::coefficient_of(const Monomial& m) const {
    for (const auto& [v, e] : m.factors()) {
        if (v >= vars_->size() || vars_->kind(v) != VarKind::parameter) {
            throw UsageError("coefficient extraction monomial must involve only formal parameters");
        }
    }
    TermMap terms;
    for (const auto& [t, c] : terms_) {
        std::vector<Monomial::Factor> params;
        std::vector<Monomial::Factor> rest;
        for (const auto& f : t.factors()) {
            if (vars_->kind(f.first) == VarKind::parameter) {
                params.push_back(f);
            } else {
                rest.push_back(f);
            }
        }
        if (Monomial::from_factors(std::move(params)) == m) {
            terms.emplace(Monomial::from_factors(std::move(rest)), c);
        }
    }
    return MultiPoly(vars_, std::move(terms));
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

MultiPoly MultiPoly::with_vars(const VarTablePtr& target) const {
    std::vector<std::optional<VarId>> remap(vars_->size());
    TermMap terms;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> factors;
        factors.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) {
            if (!remap[v]) {
                auto found = target->find(vars_->name(v));
                if (!found) {
                    throw ContextError("variable '" + vars_->name(v) +
                                       "' does not exist in the target context");
                }
                remap[v] = *found;
            }
            factors.emplace_back(*remap[v], e);
        }
        terms.emplace(Monomial::from_factors(std::move(factors)), c);
    }
    return MultiPoly(target, std::move(terms));
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

unsigned MultiPoly::total_degree() const {
    // Terms are stored by descending degree.
    return terms_.empty() ? 0u : terms_.begin()->first.degree();
}

unsigned MultiPoly::degree_in_kind(VarKind kind) const {
    unsigned best = 0;
    for (const auto& [m, c] : terms_) {
        unsigned d = 0;
        for (const auto& [v, e] : m.factors()) {
            if (vars_->kind(v) == kind) {
                d += e;
            }
        }
        best = std::max(best, d);
    }
    return best;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_->same_as(*o.vars_) && terms_ == o.terms_;
}

namespace {

void render_monomial(std::ostream& os, const Monomial& m, const VarTable& vars, bool leading_star) {
    bool first = !leading_star;
    for (const auto& [v, e] : m.factors()) {
        if (!first) {
            os << '*';
        }
        first = false;
        os << vars.name(v);
        if (e > 1) {
            os << '^' << e;
        }
    }
}

} // namespace

std::string MultiPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << '-';
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << mag.str();
        } else if (mag.is_one()) {
            render_monomial(os, m, *vars_, false);
        } else {
            os << mag.str();
            render_monomial(os, m, *vars_, true);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.str();
}

} // namespace torsionlab
