#pragma once

#include <optional>
#include <vector>

#include "hampack/model.hpp"
#include "hampack/solver.hpp"
#include "hampack/space.hpp"

namespace hampack {

// One canonical choice of the second fixed codeword: a distribution of the d
// differing positions among the alphabet blocks. The canonical word sets the
// last m_j positions of each block to symbol 1.
struct BranchSpec {
    MarginalProfile profile;   // ascending-alphabet block order
    WordIndex second = 0;
};

// All branches for (space, d): one per composition of d into parts bounded by
// the block lengths, ordered lexicographically on the profile read largest
// alphabet first. Empty when d > n.
std::vector<BranchSpec> enumerate_branches(const MixedSpace& space, int d);

enum class AuditOutcome { branch_unavoidable, inconclusive };

struct AuditResult {
    AuditOutcome outcome = AuditOutcome::inconclusive;
    bool pigeonhole = false;                 // decided without solving
    std::optional<SolveResult> forbid_solve; // present when a model was solved
};

// Tests whether every packing of at least known_lower words must contain a
// contact pair with this marginal profile: either by pigeonhole (the profile
// exhausts one block and the other blocks' subspace is smaller than
// known_lower) or because the profile-forbidding model's optimum provably
// stays below known_lower.
AuditResult audit_branch(const MixedSpace& space, int d, const MarginalProfile& profile,
                         int known_lower, const SolveBudget& budget = {},
                         const SolveOptions& options = {});

// The packing number as a maximum over canonical branches of the pair-fixed
// reduced models. Any maximum packing has an equivalent one whose contact
// graph is connected, hence (with two or more words) contains a pair at
// distance exactly d that symmetry maps onto one canonical branch. For d > n
// the answer is 1. Status is optimal only when every branch solve finished.
SolveResult packing_number(const MixedSpace& space, int d, const SolveBudget& budget = {},
                           const SolveOptions& options = {});

} // namespace hampack
