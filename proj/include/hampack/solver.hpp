#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hampack/model.hpp"
#include "hampack/space.hpp"

namespace hampack {

struct SolveBudget {
    std::optional<double> wall_seconds;        // absent = unlimited
    std::optional<std::uint64_t> node_limit;
    // Externally known feasible value (counted with the objective offset).
    // Used as the starting incumbent; the search then only looks for
    // strictly better packings.
    std::optional<int> initial_lower;
};

enum class SolveStatus { optimal, feasible_lower_bound, budget_exhausted, infeasible };

const char* to_string(SolveStatus s);

struct SolveProgress {
    std::uint64_t nodes = 0;
    int best = 0;
    int upper_bound = 0;
    double elapsed_seconds = 0;
};

struct SolveOptions {
    int threads = 0;        // <= 0: all available cores
    int spawn_depth = 3;    // search depth below which subtrees become tasks
    std::function<void(const SolveProgress&)> progress;   // rate-limited
};

struct SolveResult {
    SolveStatus status = SolveStatus::optimal;
    int best_value = 0;       // objective offset + chosen free words
    int upper_bound = 0;
    std::vector<WordIndex> witness;   // includes fixed-one words; ascending rank.
                                      // May be empty when best_value rests only on
                                      // a supplied initial lower bound.
    double elapsed_seconds = 0;
    std::uint64_t node_count = 0;
};

// Exact maximization of offset + sum of free variables subject to the
// conflict rows: branch and bound on the conflict graph (maximum independent
// set) with a greedy clique cover bound per node. The optimal value is
// deterministic regardless of thread count.
SolveResult solve(const PackingModel& m, const SolveBudget& budget = {},
                  const SolveOptions& options = {});

// Optimum with additional words pinned to 1. Pinned words must be free or
// already fixed to one in the model; a pinned pair closer than d yields
// status infeasible.
SolveResult solve_forced(const PackingModel& m, std::span<const WordIndex> forced,
                         const SolveBudget& budget = {},
                         const SolveOptions& options = {});

// Exhaustive reference: depth-first subset enumeration over words in rank
// order with feasibility pruning only. Deliberately has nothing in common
// with the branch-and-bound path. Spaces up to 24 words.
int oracle(const MixedSpace& space, int d, std::span<const WordIndex> forced = {});

} // namespace hampack
