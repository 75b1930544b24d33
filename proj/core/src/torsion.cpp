#include "torsionlab/torsion.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace torsionlab {

namespace {

void require_same_chart(const OperatorField& a, const OperatorField& b) {
    if (!a.chart()->same_as(*b.chart())) {
        throw ContextError("operators live on different charts");
    }
}

void require_same_chart(std::span<const OperatorField> ops) {
    for (std::size_t i = 1; i < ops.size(); ++i) {
        require_same_chart(ops[0], ops[i]);
    }
}

// One recursion step of the level tower: tau -> A^2 tau(X,Y) + tau(AX,AY)
// - A(tau(X,AY) + tau(AX,Y)), evaluated on basis pairs through the
// component form.
TwoFormField level_step(const TwoFormField& w, const OperatorField& A) {
    const ChartPtr& chart = A.chart();
    const OperatorField a2 = A.compose(A);
    return TwoFormField::from_basis_action(chart, [&](int j, int k) {
        VectorField ej = VectorField::basis(chart, j);
        VectorField ek = VectorField::basis(chart, k);
        VectorField aej = A.column(j);
        VectorField aek = A.column(k);
        VectorField r = a2.apply(w.evaluate(ej, ek));
        r = r + w.evaluate(aej, aek);
        r = r - A.apply(w.evaluate(ej, aek) + w.evaluate(aej, ek));
        return r;
    });
}

// Deduplicates an operator list by value so repeated entries share
// memoized subset torsions.
struct UniqueOps {
    std::vector<const OperatorField*> unique;
    std::vector<int> uid_of; // per original index

    explicit UniqueOps(std::span<const OperatorField> ops) {
        uid_of.reserve(ops.size());
        for (const auto& op : ops) {
            int uid = -1;
            for (std::size_t u = 0; u < unique.size(); ++u) {
                if (*unique[u] == op) {
                    uid = static_cast<int>(u);
                    break;
                }
            }
            if (uid < 0) {
                uid = static_cast<int>(unique.size());
                unique.push_back(&op);
            }
            uid_of.push_back(uid);
        }
    }
};

} // namespace

VectorField nijenhuis_functional(const OperatorField& A, const VectorField& X,
                                 const VectorField& Y) {
    VectorField ax = A.apply(X);
    VectorField ay = A.apply(Y);
    VectorField r = A.apply(A.apply(lie_bracket(X, Y)));
    r = r + lie_bracket(ax, ay);
    r = r - A.apply(lie_bracket(X, ay) + lie_bracket(ax, Y));
    return r;
}

TwoFormField nijenhuis(const OperatorField& A) {
    const ChartPtr& chart = A.chart();
    return TwoFormField::from_basis_action(chart, [&](int j, int k) {
        return nijenhuis_functional(A, VectorField::basis(chart, j),
                                    VectorField::basis(chart, k));
    });
}

TwoFormField gen_torsion(const OperatorField& A, LevelM m) {
    TwoFormField w = nijenhuis(A);
    for (int level = 2; level <= m.value(); ++level) {
        w = level_step(w, A);
    }
    return w;
}

TwoFormField gen_torsion_closed(const OperatorField& A, LevelM m) {
    const ChartPtr& chart = A.chart();
    const unsigned mm = static_cast<unsigned>(m.value());
    std::vector<OperatorField> pw;
    pw.reserve(2 * mm + 1);
    pw.push_back(OperatorField::identity(chart));
    for (unsigned t = 1; t <= 2 * mm; ++t) {
        pw.push_back(pw.back().compose(A));
    }
    return TwoFormField::from_basis_action(chart, [&](int j, int k) {
        VectorField acc = VectorField::zero(chart);
        for (unsigned p = 0; p <= mm; ++p) {
            for (unsigned q = 0; q <= mm; ++q) {
                Rational coeff = Rational::binomial(mm, p) * Rational::binomial(mm, q);
                if ((p + q) % 2 == 1) {
                    coeff = -coeff;
                }
                VectorField bracket = lie_bracket(pw[mm - p].column(j), pw[mm - q].column(k));
                acc = acc + pw[p + q].apply(bracket).scaled(coeff);
            }
        }
        return acc;
    });
}

TwoFormField haantjes(const OperatorField& A) {
    return gen_torsion(A, LevelM(2));
}

VectorField fn_bracket_functional(const OperatorField& A, const OperatorField& B,
                                  const VectorField& X, const VectorField& Y) {
    require_same_chart(A, B);
    VectorField ax = A.apply(X);
    VectorField ay = A.apply(Y);
    VectorField bx = B.apply(X);
    VectorField by = B.apply(Y);
    VectorField r = (A.compose(B) + B.compose(A)).apply(lie_bracket(X, Y));
    r = r + lie_bracket(ax, by) + lie_bracket(bx, ay);
    r = r - A.apply(lie_bracket(X, by) + lie_bracket(bx, Y));
    r = r - B.apply(lie_bracket(X, ay) + lie_bracket(ax, Y));
    return r;
}

TwoFormField fn_bracket(const OperatorField& A, const OperatorField& B) {
    const ChartPtr& chart = A.chart();
    return TwoFormField::from_basis_action(chart, [&](int j, int k) {
        return fn_bracket_functional(A, B, VectorField::basis(chart, j),
                                     VectorField::basis(chart, k));
    });
}

TwoFormField fn_bracket_components(const OperatorField& A, const OperatorField& B) {
    require_same_chart(A, B);
    const ChartPtr& chart = A.chart();
    const int n = chart->dim();
    // One direction of the antisymmetrized index formula; the bracket
    // [j..k] is the plain difference term(j,k) - term(k,j).
    auto half = [&](const OperatorField& P, const OperatorField& Q, int i, int j, int k) {
        MultiPoly s = chart->zero();
        const VarId xj = chart->coordinate_id(j);
        const VarId xk = chart->coordinate_id(k);
        for (int l = 0; l < n; ++l) {
            const VarId xl = chart->coordinate_id(l);
            s += P.entry(l, j) * Q.entry(i, k).derivative(xl);
            s -= P.entry(l, k) * Q.entry(i, j).derivative(xl);
            s -= P.entry(i, l) * (Q.entry(l, k).derivative(xj) - Q.entry(l, j).derivative(xk));
        }
        return s;
    };
    return TwoFormField::from_basis_action(chart, [&](int j, int k) {
        std::vector<MultiPoly> comps;
        comps.reserve(n);
        for (int i = 0; i < n; ++i) {
            comps.push_back(half(A, B, i, j, k) + half(B, A, i, j, k));
        }
        return VectorField(chart, std::move(comps));
    });
}

TwoFormField defect(LevelM m, std::span<const OperatorField> ops) {
    if (ops.empty()) {
        throw UsageError("defect needs at least one operator");
    }
    require_same_chart(ops);
    const ChartPtr& chart = ops[0].chart();
    const int k = static_cast<int>(ops.size());
    if (k >= 31) {
        throw UsageError("defect index too large");
    }
    const UniqueOps uniq(ops);
    std::map<std::vector<unsigned>, TwoFormField> memo;
    TwoFormField acc = TwoFormField::zero(chart);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<unsigned> counts(uniq.unique.size(), 0);
        int size = 0;
        for (int i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                ++counts[uniq.uid_of[i]];
                ++size;
            }
        }
        auto it = memo.find(counts);
        if (it == memo.end()) {
            OperatorField sum = OperatorField::zero(chart);
            for (std::size_t u = 0; u < counts.size(); ++u) {
                if (counts[u] == 1) {
                    sum = sum + *uniq.unique[u];
                } else if (counts[u] > 1) {
                    sum = sum + uniq.unique[u]->scaled(Rational(static_cast<long>(counts[u])));
                }
            }
            it = memo.emplace(std::move(counts), gen_torsion(sum, m)).first;
        }
        if ((k - size) % 2 == 0) {
            acc = acc + it->second;
        } else {
            acc = acc - it->second;
        }
    }
    return acc;
}

bool defect_recurrence_check(LevelM m, std::span<const OperatorField> ops) {
    if (ops.size() < 2) {
        throw UsageError("defect recurrence needs at least two operators");
    }
    TwoFormField lhs = defect(m, ops);
    std::vector<OperatorField> merged;
    std::vector<OperatorField> first;
    std::vector<OperatorField> second;
    merged.push_back(ops[0] + ops[1]);
    first.push_back(ops[0]);
    second.push_back(ops[1]);
    for (std::size_t i = 2; i < ops.size(); ++i) {
        merged.push_back(ops[i]);
        first.push_back(ops[i]);
        second.push_back(ops[i]);
    }
    TwoFormField rhs = defect(m, merged) - defect(m, first) - defect(m, second);
    return lhs == rhs;
}

namespace {

// Recurrence path for the polarization, reducing level m to the 2m-2
// argument polarizations of level m-1. For each unordered pair {j,k} and
// complement C:
//   (A_j A_k + A_k A_j) P(C)(X,Y)
//   + P(C)(A_j X, A_k Y) + P(C)(A_k X, A_j Y)
//   - A_j (P(C)(A_k X, Y) + P(C)(X, A_k Y))
//   - A_k (P(C)(A_j X, Y) + P(C)(X, A_j Y)).
// The last group runs over ordered pairs, which the j/k symmetrization
// above realizes; this reproduces the subset-sum values exactly (the
// diagonal case P(A,..,A) = (2m)! tau^(m) fixes the convention).
class RecurrencePolarization {
public:
    explicit RecurrencePolarization(std::span<const OperatorField> ops)
        : uniq_(ops), ops_(ops) {}

    TwoFormField run(int m) {
        std::vector<int> all(ops_.size());
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            all[i] = static_cast<int>(i);
        }
        return compute(m, all);
    }

private:
    TwoFormField compute(int m, const std::vector<int>& indices) {
        std::vector<int> key;
        key.reserve(indices.size() + 1);
        key.push_back(m);
        for (int i : indices) {
            key.push_back(uniq_.uid_of[i]);
        }
        std::sort(key.begin() + 1, key.end());
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }

        TwoFormField result = TwoFormField::zero(ops_[0].chart());
        if (m == 1) {
            result = fn_bracket(ops_[indices[0]], ops_[indices[1]]);
        } else {
            const ChartPtr& chart = ops_[0].chart();
            for (std::size_t a = 0; a < indices.size(); ++a) {
                for (std::size_t b = a + 1; b < indices.size(); ++b) {
                    const OperatorField& aj = ops_[indices[a]];
                    const OperatorField& ak = ops_[indices[b]];
                    std::vector<int> complement;
                    complement.reserve(indices.size() - 2);
                    for (std::size_t t = 0; t < indices.size(); ++t) {
                        if (t != a && t != b) {
                            complement.push_back(indices[t]);
                        }
                    }
                    TwoFormField pc = compute(m - 1, complement);
                    OperatorField anti = aj.compose(ak) + ak.compose(aj);
                    result = result + TwoFormField::from_basis_action(chart, [&](int p, int q) {
                        VectorField ep = VectorField::basis(chart, p);
                        VectorField eq = VectorField::basis(chart, q);
                        VectorField ajp = aj.column(p);
                        VectorField ajq = aj.column(q);
                        VectorField akp = ak.column(p);
                        VectorField akq = ak.column(q);
                        VectorField r = anti.apply(pc.evaluate(ep, eq));
                        r = r + pc.evaluate(ajp, akq) + pc.evaluate(akp, ajq);
                        r = r - aj.apply(pc.evaluate(akp, eq) + pc.evaluate(ep, akq));
                        r = r - ak.apply(pc.evaluate(ajp, eq) + pc.evaluate(ep, ajq));
                        return r;
                    });
                }
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    UniqueOps uniq_;
    std::span<const OperatorField> ops_;
    std::map<std::vector<int>, TwoFormField> memo_;
};

TwoFormField polarization_lambda(LevelM m, std::span<const OperatorField> ops) {
    const ChartPtr& chart = ops[0].chart();
    const int count = static_cast<int>(ops.size());
    ChartPtr ext = chart->extended_with_parameters(count);
    OperatorField combined = OperatorField::zero(ext);
    for (int i = 0; i < count; ++i) {
        const int n = ext->dim();
        std::vector<MultiPoly> entries;
        entries.reserve(static_cast<std::size_t>(n) * n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                entries.push_back(ops[i].entry(r, c).with_vars(ext->vars()));
            }
        }
        combined = combined + OperatorField(ext, std::move(entries)).scaled(ext->parameter(i));
    }
    TwoFormField w = gen_torsion(combined, m);
    std::vector<Monomial::Factor> factors;
    factors.reserve(count);
    for (int i = 0; i < count; ++i) {
        factors.emplace_back(ext->parameter_id(i), 1u);
    }
    const Monomial lambda_product = Monomial::from_factors(std::move(factors));
    return TwoFormField::from_basis_action(chart, [&](int j, int k) {
        std::vector<MultiPoly> comps;
        comps.reserve(chart->dim());
        for (int i = 0; i < chart->dim(); ++i) {
            comps.push_back(w.component(i, j, k).coefficient_of(lambda_product).with_vars(chart->vars()));
        }
        return VectorField(chart, std::move(comps));
    });
}

} // namespace

TwoFormField polarization(LevelM m, std::span<const OperatorField> ops,
                          PolarizationMethod method) {
    if (static_cast<int>(ops.size()) != 2 * m.value()) {
        throw UsageError("polarization of level m needs exactly 2m operators");
    }
    require_same_chart(ops);
    switch (method) {
    case PolarizationMethod::subset_sum:
        return defect(m, ops);
    case PolarizationMethod::lambda_extraction:
        return polarization_lambda(m, ops);
    case PolarizationMethod::recurrence:
        return RecurrencePolarization(ops).run(m.value());
    }
    throw UsageError("unknown polarization method");
}

bool multilinearity_check(LevelM m, std::span<const OperatorField> ops,
                          const MultiPoly& f, int slot) {
    if (static_cast<int>(ops.size()) != 2 * m.value()) {
        throw UsageError("multilinearity check needs exactly 2m operators");
    }
    if (slot < 0 || slot >= static_cast<int>(ops.size())) {
        throw UsageError("multilinearity slot out of range");
    }
    require_same_chart(ops);
    if (!f.vars()->same_as(*ops[0].chart()->vars())) {
        throw ContextError("scale function over a foreign context");
    }
    if (m.value() >= 2 && !f.is_constant()) {
        for (std::size_t a = 0; a < ops.size(); ++a) {
            for (std::size_t b = a + 1; b < ops.size(); ++b) {
                if (!ops[a].commutator(ops[b]).is_zero()) {
                    throw CommutativityError(
                        "C-infinity multilinearity requires pairwise commuting operators");
                }
            }
        }
    }

    const TwoFormField base = polarization(m, ops);

    std::vector<OperatorField> work(ops.begin(), ops.end());
    work[slot] = ops[slot].scaled(f);
    if (polarization(m, work) != base.scaled(f)) {
        return false;
    }

    const OperatorField& other = ops[(slot + 1) % ops.size()];
    work[slot] = ops[slot] + other;
    TwoFormField sum_form = polarization(m, work);
    work[slot] = other;
    return sum_form == base + polarization(m, work);
}

TwoFormField higher_haantjes(const OperatorField& A, const OperatorField& B, LevelM m) {
    require_same_chart(A, B);
    const ChartPtr& chart = A.chart();
    TwoFormField h = fn_bracket(A, B);
    if (m.value() == 1) {
        return h;
    }
    const OperatorField anti = A.compose(B) + B.compose(A);
    for (int level = 2; level <= m.value(); ++level) {
        h = TwoFormField::from_basis_action(chart, [&](int j, int k) {
            VectorField ej = VectorField::basis(chart, j);
            VectorField ek = VectorField::basis(chart, k);
            VectorField aej = A.column(j);
            VectorField aek = A.column(k);
            VectorField bej = B.column(j);
            VectorField bek = B.column(k);
            VectorField r = anti.apply(h.evaluate(ej, ek));
            r = r + h.evaluate(aej, bek) + h.evaluate(bej, aek);
            r = r - A.apply(h.evaluate(ej, bek) + h.evaluate(bej, ek));
            r = r - B.apply(h.evaluate(ej, aek) + h.evaluate(aej, ek));
            return r;
        });
    }
    return h;
}

TwoFormField h1_bracket(const OperatorField& A, const OperatorField& B) {
    require_same_chart(A, B);
    const ChartPtr& chart = A.chart();
    // One half: B^2 tau_A(X,Y) + tau_A(BX,BY) - B(tau_A(BX,Y) + tau_A(X,BY)).
    auto half = [&](const OperatorField& P, const OperatorField& Q) {
        TwoFormField tau = nijenhuis(P);
        const OperatorField q2 = Q.compose(Q);
        return TwoFormField::from_basis_action(chart, [&](int j, int k) {
            VectorField ej = VectorField::basis(chart, j);
            VectorField ek = VectorField::basis(chart, k);
            VectorField qej = Q.column(j);
            VectorField qek = Q.column(k);
            VectorField r = q2.apply(tau.evaluate(ej, ek));
            r = r + tau.evaluate(qej, qek);
            r = r - Q.apply(tau.evaluate(qej, ek) + tau.evaluate(ej, qek));
            return r;
        });
    };
    return half(A, B) + half(B, A);
}

TwoFormField h2_bracket(const OperatorField& A, const OperatorField& B) {
    require_same_chart(A, B);
    const ChartPtr& chart = A.chart();
    const TwoFormField tau = nijenhuis(A);
    const TwoFormField fn = fn_bracket(A, B);
    const OperatorField anti = A.compose(B) + B.compose(A);
    const OperatorField a2 = A.compose(A);
    return TwoFormField::from_basis_action(chart, [&](int j, int k) {
        VectorField ej = VectorField::basis(chart, j);
        VectorField ek = VectorField::basis(chart, k);
        VectorField aej = A.column(j);
        VectorField aek = A.column(k);
        VectorField bej = B.column(j);
        VectorField bek = B.column(k);
        VectorField r = anti.apply(tau.evaluate(ej, ek));
        r = r + tau.evaluate(aej, bek) + tau.evaluate(bej, aek);
        r = r - A.apply(tau.evaluate(bej, ek) + tau.evaluate(ej, bek));
        r = r - B.apply(tau.evaluate(aej, ek) + tau.evaluate(ej, aek));
        r = r + a2.apply(fn.evaluate(ej, ek));
        r = r + fn.evaluate(aej, aek);
        r = r - A.apply(fn.evaluate(aej, ek) + fn.evaluate(ej, aek));
        return r;
    });
}

} // namespace torsionlab
