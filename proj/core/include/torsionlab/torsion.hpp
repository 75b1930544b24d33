#ifndef TORSIONLAB_TORSION_HPP
#define TORSIONLAB_TORSION_HPP

#include <span>

#include "torsionlab/fields.hpp"

namespace torsionlab {

/// Torsion level m >= 1. Level 1 is the Nijenhuis torsion, level 2 the
/// Haantjes torsion. The level-0 bracket [X,Y] is not tensorial and is
/// deliberately excluded from the form engine; it exists only as
/// lie_bracket.
class LevelM {
public:
    explicit LevelM(int m) : m_(m) {
        if (m < 1) {
            throw UsageError("torsion level must be >= 1");
        }
    }
    int value() const { return m_; }

private:
    int m_;
};

/// Nijenhuis torsion tau_A(X,Y) = A^2[X,Y] + [AX,AY] - A([X,AY] + [AX,Y]),
/// returned as the component form on coordinate basis pairs.
TwoFormField nijenhuis(const OperatorField& A);

/// The same defining formula applied to arbitrary fields; agrees with
/// evaluating nijenhuis(A) (tensoriality).
VectorField nijenhuis_functional(const OperatorField& A, const VectorField& X,
                                 const VectorField& Y);

/// Generalized Nijenhuis torsion of level m, by the recursion
///   tau^(m)(X,Y) = A^2 tau^(m-1)(X,Y) + tau^(m-1)(AX,AY)
///                  - A(tau^(m-1)(X,AY) + tau^(m-1)(AX,Y)),
/// with level 1 the Nijenhuis torsion. Transformed arguments are
/// evaluated through the component form, which is valid because every
/// level is tensorial.
TwoFormField gen_torsion(const OperatorField& A, LevelM m);

/// Independent path to the same tensor: the closed double-binomial sum
///   sum_{p,q=0}^{m} (-1)^(p+q) C(m,p) C(m,q) A^(p+q) [A^(m-p)X, A^(m-q)Y],
/// computed with explicit Lie brackets of the fields A^(m-p) d_j.
TwoFormField gen_torsion_closed(const OperatorField& A, LevelM m);

/// Haantjes torsion: level-2 generalized torsion.
TwoFormField haantjes(const OperatorField& A);

/// Frölicher–Nijenhuis bracket of two operators,
///   [[A,B]](X,Y) = (AB+BA)[X,Y] + [AX,BY] + [BX,AY]
///                  - A([X,BY] + [BX,Y]) - B([X,AY] + [AX,Y]).
/// Symmetric, R-bilinear; [[A,A]] = 2 tau_A.
TwoFormField fn_bracket(const OperatorField& A, const OperatorField& B);

/// Definitional formula on arbitrary fields.
VectorField fn_bracket_functional(const OperatorField& A, const OperatorField& B,
                                  const VectorField& X, const VectorField& Y);

/// Independent path via the local index formula
///   [[A,B]]^i_jk = sum_l ( A^l_j d_l B^i_k - A^l_k d_l B^i_j
///                        - A^i_l (d_j B^l_k - d_k B^l_j) + (A <-> B) ),
/// the antisymmetrizer taken as the plain j,k difference with no 1/2.
TwoFormField fn_bracket_components(const OperatorField& A, const OperatorField& B);

/// Defect of index k of the level-m torsion: the alternating sum
///   Delta_k^(m)(A_1..A_k) = sum_{nonempty I subset {1..k}} (-1)^(k-|I|)
///                           tau^(m) of sum_{i in I} A_i.
/// Symmetric in its arguments; Delta_1 = tau^(m); vanishes for k > 2m.
/// Subset torsions are memoized per call.
TwoFormField defect(LevelM m, std::span<const OperatorField> ops);

/// Checks the defect recurrence
///   Delta_{k+1}(A1,A2,A3..) = Delta_k(A1+A2,A3..) - Delta_k(A1,A3..)
///                             - Delta_k(A2,A3..)
/// componentwise (a regression surface; mathematically always true).
bool defect_recurrence_check(LevelM m, std::span<const OperatorField> ops);

enum class PolarizationMethod {
    subset_sum,        // defect of index 2m, the defining alternating sum
    lambda_extraction, // coefficient of lam_1...lam_2m in tau^(m) of sum lam_i A_i
    recurrence,        // level reduction to 2m-2 arguments, base = fn_bracket
};

/// Polarization of the level-m torsion: the full symmetric multilinear
/// form on exactly 2m operators whose diagonal restriction is
/// (2m)! tau^(m). The three methods are independent computation paths
/// and agree identically.
TwoFormField polarization(LevelM m, std::span<const OperatorField> ops,
                          PolarizationMethod method = PolarizationMethod::subset_sum);

/// True iff the polarization is additive in `slot` and satisfies
/// P(.., f*A_slot, ..) = f * P(.., A_slot, ..). For non-constant f at
/// m >= 2 the operators must pairwise commute (CommutativityError
/// otherwise); at m = 1 the check runs ungated and is expected to fail
/// for generic non-constant f, the bracket being R-linear only.
bool multilinearity_check(LevelM m, std::span<const OperatorField> ops,
                          const MultiPoly& f, int slot);

/// Haantjes bracket of level m: base [[A,B]], then
///   H^(m)(X,Y) = (AB+BA) H^(m-1)(X,Y) + H^(m-1)(AX,BY) + H^(m-1)(BX,AY)
///                - A(H^(m-1)(X,BY) + H^(m-1)(BX,Y))
///                - B(H^(m-1)(X,AY) + H^(m-1)(AX,Y)).
/// Symmetric in A and B.
TwoFormField higher_haantjes(const OperatorField& A, const OperatorField& B, LevelM m);

/// Auxiliary bracket H1(A,B) = B^2 tau_A(X,Y) + tau_A(BX,BY)
///   - B(tau_A(BX,Y) + tau_A(X,BY)) + (A <-> B). Symmetric.
TwoFormField h1_bracket(const OperatorField& A, const OperatorField& B);

/// Auxiliary bracket H2(A,B): the tau_A group under (A,B) plus the
/// [[A,B]] group under A; not symmetric in A, B.
TwoFormField h2_bracket(const OperatorField& A, const OperatorField& B);

} // namespace torsionlab

#endif
