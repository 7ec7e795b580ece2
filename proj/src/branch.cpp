#include "hampack/branch.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace hampack {

namespace {

WordIndex canonical_word(const MixedSpace& space, const MarginalProfile& profile) {
    std::vector<std::uint8_t> sym(std::size_t(space.length()), 0);
    int pos = 0;
    // printed order: blocks from largest alphabet down
    for (int j = space.block_count() - 1; j >= 0; --j) {
        int alpha = space.blocks()[std::size_t(j)].length;
        int m = profile.per_block[std::size_t(j)];
        for (int p = 0; p < alpha; ++p, ++pos)
            if (p >= alpha - m) sym[std::size_t(pos)] = 1;
    }
    return space.rank(sym);
}

void compositions(const MixedSpace& space, int block_from_largest, int left,
                  std::vector<int>& parts, std::vector<BranchSpec>& out) {
    int s = space.block_count();
    if (block_from_largest == s) {
        if (left != 0) return;
        BranchSpec b;
        b.profile.per_block.assign(parts.rbegin(), parts.rend());
        b.second = canonical_word(space, b.profile);
        out.push_back(std::move(b));
        return;
    }
    int alpha = space.blocks()[std::size_t(s - 1 - block_from_largest)].length;
    for (int m = 0; m <= std::min(alpha, left); ++m) {
        parts.push_back(m);
        compositions(space, block_from_largest + 1, left - m, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<BranchSpec> enumerate_branches(const MixedSpace& space, int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    std::vector<BranchSpec> out;
    if (d > space.length()) return out;
    std::vector<int> parts;
    compositions(space, 0, d, parts, out);
    return out;
}

AuditResult audit_branch(const MixedSpace& space, int d, const MarginalProfile& profile,
                         int known_lower, const SolveBudget& budget,
                         const SolveOptions& options) {
    if (int(profile.per_block.size()) != space.block_count() || profile.total() != d)
        throw std::invalid_argument("invalid branch profile");

    AuditResult res;

    // pigeonhole: the profile uses all positions of exactly one block and
    // none elsewhere. More packed words than the other blocks have joint
    // symbol patterns forces two words that agree outside that block, and a
    // minimum distance of d = alpha_j then makes them a contact pair with
    // exactly this profile.
    int full_block = -1;
    bool pigeonhole_shape = true;
    for (int j = 0; j < space.block_count(); ++j) {
        int m = profile.per_block[std::size_t(j)];
        if (m == 0) continue;
        if (m == space.blocks()[std::size_t(j)].length && full_block < 0)
            full_block = j;
        else
            pigeonhole_shape = false;
    }
    if (pigeonhole_shape && full_block >= 0) {
        WordIndex rest = 1;
        for (int j = 0; j < space.block_count(); ++j)
            if (j != full_block)
                for (int p = 0; p < space.blocks()[std::size_t(j)].length; ++p)
                    rest *= WordIndex(space.blocks()[std::size_t(j)].alphabet);
        if (WordIndex(known_lower) > rest) {
            res.outcome = AuditOutcome::branch_unavoidable;
            res.pigeonhole = true;
            return res;
        }
    }

    PackingModel model = build_profile_forbidding(space, d, profile, options.threads);
    SolveResult r = solve(model, budget, options);
    bool below = (r.status == SolveStatus::optimal && r.best_value < known_lower) ||
                 (r.status != SolveStatus::optimal && r.upper_bound < known_lower);
    res.outcome = below ? AuditOutcome::branch_unavoidable : AuditOutcome::inconclusive;
    res.forbid_solve = std::move(r);
    return res;
}

SolveResult packing_number(const MixedSpace& space, int d, const SolveBudget& budget,
                           const SolveOptions& options) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");

    if (d > space.length()) {
        // every pair of distinct words is closer than d
        SolveResult r;
        r.status = SolveStatus::optimal;
        r.best_value = r.upper_bound = 1;
        r.witness = {0};
        return r;
    }

    auto start = std::chrono::steady_clock::now();
    auto remaining = [&]() -> std::optional<double> {
        if (!budget.wall_seconds) return std::nullopt;
        double used = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        return std::max(0.0, *budget.wall_seconds - used);
    };

    SolveResult total;
    total.best_value = 0;
    total.upper_bound = 0;
    bool all_optimal = true;
    std::uint64_t nodes_left =
        budget.node_limit ? *budget.node_limit : UINT64_MAX;

    for (const BranchSpec& branch : enumerate_branches(space, d)) {
        PackingModel model = build_pair(space, d, branch.second, options.threads);
        SolveBudget sub;
        sub.wall_seconds = remaining();
        if (budget.node_limit) sub.node_limit = nodes_left;
        if (total.best_value > 0) sub.initial_lower = total.best_value;
        if (budget.initial_lower)
            sub.initial_lower = std::max(sub.initial_lower.value_or(0),
                                         *budget.initial_lower);

        SolveResult r = solve(model, sub, options);
        total.node_count += r.node_count;
        nodes_left -= std::min(nodes_left, r.node_count);
        all_optimal = all_optimal && r.status == SolveStatus::optimal;
        if (r.best_value > total.best_value) {
            total.best_value = r.best_value;
            total.witness = std::move(r.witness);   // empty when the value rests
                                                    // on a supplied lower bound
        }
        total.upper_bound = std::max(total.upper_bound, r.upper_bound);
    }

    total.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total.status =
        all_optimal ? SolveStatus::optimal : SolveStatus::feasible_lower_bound;
    if (all_optimal) total.upper_bound = total.best_value;
    return total;
}

} // namespace hampack
