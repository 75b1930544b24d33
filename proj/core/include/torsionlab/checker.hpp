#ifndef TORSIONLAB_CHECKER_HPP
#define TORSIONLAB_CHECKER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/torsion.hpp"

namespace torsionlab {

/// True iff every component of the level-m torsion of A is the zero
/// polynomial (a generalized Nijenhuis operator of level m).
bool is_gen_nijenhuis(const OperatorField& A, LevelM m);

enum class Verdict {
    haantjes_vector_space,
    haantjes_module,
    not_applicable,
    fails,
};

const char* verdict_name(Verdict v);

struct Witness {
    std::string check; // which condition produced it, e.g. "condition k=2"
    int i, j, k;       // 1-based component indices, j < k
    MultiPoly value;
};

/// Outcome of the Theorem-style module check for a pair (A, B) at level m.
/// All conditions are tested on coordinate basis pairs only, which is
/// complete because every form involved is tensorial.
struct ModuleReport {
    int level = 1;
    bool torsion_a_vanishes = false;
    bool torsion_b_vanishes = false;
    bool commutes = false;
    std::vector<bool> mixed_conditions; // k = 1..2m-1
    Verdict verdict = Verdict::fails;
    std::optional<Witness> witness;
    bool spot_validated = false;
    std::uint64_t seed = 0;
};

/// Decides whether A and B generate a generalized Haantjes structure of
/// level m:
///   - both level-m torsions must vanish,
///   - the 2m-1 mixed polarizations P(A x (2m-k), B x k) must vanish.
/// All conditions passing certifies a Haantjes module when m >= 2 and
/// [A,B] = 0, otherwise a Haantjes vector space (there is no module
/// notion at m = 1). A positive verdict is spot-validated by expanding
/// the torsion of a random combination fA + gB (polynomial coefficients
/// in the module case, rational constants otherwise); a nonzero result
/// would contradict the theory and raises InternalError.
ModuleReport check_module(const OperatorField& A, const OperatorField& B, LevelM m,
                          std::uint64_t seed = 1);

enum class SZOutcome { all_zero_at_samples, nonzero_witness };

struct SZWitness {
    std::size_t component;                // flat index into the tested list
    std::optional<std::array<int, 3>> ijk; // 1-based (i,j,k) when testing a form
    std::vector<Rational> point;
    Rational value;
};

/// Randomized zero test: exact evaluation at uniform integer points.
struct SZReport {
    int trials = 0;
    long box = 0;              // samples drawn from [-box, box]^n
    unsigned degree_bound = 0; // max total degree over the components
    /// Probability that a nonzero polynomial of the given degree evades
    /// all samples: min(1, d/(2B+1))^trials.
    Rational failure_probability_bound;
    SZOutcome outcome = SZOutcome::all_zero_at_samples;
    std::optional<SZWitness> witness;
    std::uint64_t seed = 0;
};

/// Evaluates every polynomial at `trials` seeded uniform integer points in
/// [-box, box]^n with exact arithmetic. Never contradicts exact checking:
/// identically zero input always reports all-zero-at-samples.
SZReport sz_verify(std::span<const MultiPoly> components, const ChartPtr& chart,
                   int trials, long box, std::uint64_t seed);
SZReport sz_verify(const TwoFormField& w, int trials, long box, std::uint64_t seed);

/// Same test at caller-fixed sample points.
SZReport sz_verify_at(const TwoFormField& w, const std::vector<std::vector<Rational>>& points,
                      long box);

} // namespace torsionlab

#endif
