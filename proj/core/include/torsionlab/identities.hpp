#ifndef TORSIONLAB_IDENTITIES_HPP
#define TORSIONLAB_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "torsionlab/scene.hpp"

namespace torsionlab {

struct IdentityResult {
    std::string id;    // stable name, I1..I14
    std::string title;
    bool pass = false;
    std::string detail; // filled on failure
};

/// Runs the full identity suite on the scene's chart with seeded random
/// operators. When the scene names operators A and B, the pair is also
/// exercised directly. All checks are exact.
///
///   I1  closed-form vs recursive generalized torsion
///   I2  [[A,A]] = 2 tau_A
///   I3  FN bracket component formula vs definitional path
///   I4  [[fA,B]] = f[[A,B]] - (T(B,A) - T^T(B,A))(df,.,.)
///   I5  tau_{fA} and tau^(2)_{fA+gI} scaling laws
///   I6  P^(1) = FN bracket
///   I7  P^(m)(A,..,A) = (2m)! tau^(m)
///   I8  polarization path agreement (subset, lambda, recurrence)
///   I9  defect recurrence
///   I10 defect vanishing beyond index 2m
///   I11 Delta_2 binomial expansion in mixed polarizations
///   I12 P^(2) against the H, H1, H2 brackets
///   I13 level-2 bracket homogeneity H(fI+gA, hI+kB) = g^2 k^2 H(A,B)
///   I14 level-2 bracket vanishing on diagonal pairs
std::vector<IdentityResult> run_identity_suite(const SceneFile& scene, std::uint64_t seed);

} // namespace torsionlab

#endif
