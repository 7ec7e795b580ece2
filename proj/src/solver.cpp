#include "hampack/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hampack {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::feasible_lower_bound: return "feasible_lower_bound";
        case SolveStatus::budget_exhausted: return "budget_exhausted";
        case SolveStatus::infeasible: return "infeasible";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    // graph in search order (vertices relabeled by descending conflict degree)
    int nvert = 0;
    std::vector<Bitset> adj;
    std::vector<int> original;   // search label -> free index

    std::atomic<int> best{0};               // incumbent value in free words
    std::atomic<int> best_witnessed{-1};    // largest value backed by best_set
    std::vector<int> best_set;              // search labels
    int best_set_value = -1;
    std::mutex best_mutex;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    Clock::time_point start;
    double wall_limit = -1;                  // < 0: none
    std::uint64_t node_limit = UINT64_MAX;

    int spawn_depth = 0;                     // 0 disables task spawning
    int root_bound = 0;

    const SolveOptions* options = nullptr;
    int offset = 0;
    std::mutex progress_mutex;
    Clock::time_point last_progress;

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    void note_node() {
        std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed);
        if ((n & 1023) == 0) {
            if (n >= node_limit || (wall_limit >= 0 && elapsed() >= wall_limit))
                out_of_budget.store(true, std::memory_order_relaxed);
            if (options->progress && (n & ((std::uint64_t{1} << 20) - 1)) == 0)
                report_progress(n);
        }
    }

    void report_progress(std::uint64_t n) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        auto now = Clock::now();
        if (now - last_progress < std::chrono::milliseconds(500)) return;
        last_progress = now;
        SolveProgress p;
        p.nodes = n;
        p.best = best.load(std::memory_order_relaxed) + offset;
        p.upper_bound = root_bound + offset;
        p.elapsed_seconds = elapsed();
        options->progress(p);
    }

    void improve(const std::vector<int>& stack, const Bitset* take_rest) {
        int value = int(stack.size());
        std::vector<int> extra;
        if (take_rest) {
            take_rest->for_each([&](int v) { extra.push_back(v); });
            value += int(extra.size());
        }
        int cur = best.load(std::memory_order_relaxed);
        while (cur < value &&
               !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
        }
        if (value <= best_witnessed.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(best_mutex);
        if (value > best_set_value) {
            best_set = stack;
            best_set.insert(best_set.end(), extra.begin(), extra.end());
            best_set_value = value;
            best_witnessed.store(value, std::memory_order_relaxed);
        }
    }
};

// Greedy clique cover of P in static (descending degree) order. Stops early
// once the cover exceeds `limit` cliques, since then no pruning is possible.
int cover_bound(const Search& s, const Bitset& p, int limit, Bitset& uncovered,
                Bitset& clique_cand) {
    uncovered = p;
    int m = 0;
    while (true) {
        int v = uncovered.first();
        if (v < 0) return m;
        if (++m > limit) return m;
        uncovered.reset(std::size_t(v));
        clique_cand.assign_and(uncovered, s.adj[std::size_t(v)]);
        while (true) {
            int w = clique_cand.first();
            if (w < 0) break;
            uncovered.reset(std::size_t(w));
            clique_cand.reset(std::size_t(w));
            clique_cand &= s.adj[std::size_t(w)];
        }
    }
}

void expand(Search& s, Bitset p, std::vector<int> stack, int depth, bool parallel);

void branch_include(Search& s, const Bitset& p, const std::vector<int>& stack, int v,
                    int depth, bool spawn, bool parallel) {
    Bitset inner = p;
    inner.and_not(s.adj[std::size_t(v)]);
    inner.reset(std::size_t(v));
    std::vector<int> next = stack;
    next.push_back(v);
    if (spawn) {
        Search* sp = &s;
#pragma omp task firstprivate(inner, next, depth, sp)
        expand(*sp, std::move(inner), std::move(next), depth + 1, true);
    } else {
        expand(s, std::move(inner), std::move(next), depth + 1, parallel);
    }
}

void expand(Search& s, Bitset p, std::vector<int> stack, int depth, bool parallel) {
    Bitset uncovered(std::size_t(s.nvert)), clique_cand(std::size_t(s.nvert));
    while (true) {
        if (s.out_of_budget.load(std::memory_order_relaxed)) return;
        s.note_node();
        if (p.none()) {
            s.improve(stack, nullptr);
            return;
        }
        int psize = int(p.count());
        int gap = s.best.load(std::memory_order_relaxed) - int(stack.size());
        if (psize <= gap) return;   // even taking all of P cannot improve
        if (gap > 0 && cover_bound(s, p, gap, uncovered, clique_cand) <= gap) return;

        // branch vertex: maximum conflict degree within P, ties by rank
        int v = -1;
        std::size_t vdeg = 0;
        p.for_each([&](int u) {
            std::size_t deg = s.adj[std::size_t(u)].count_and(p);
            if (v < 0 || deg > vdeg ||
                (deg == vdeg && s.original[std::size_t(u)] < s.original[std::size_t(v)])) {
                v = u;
                vdeg = deg;
            }
        });

        if (vdeg == 0) {
            // P is an independent set: take all of it
            s.improve(stack, &p);
            return;
        }

        bool spawn = parallel && depth < s.spawn_depth && psize > 64;
        branch_include(s, p, stack, v, depth, spawn, parallel);
        p.reset(std::size_t(v));   // continue with the exclude branch
    }
}

SolveResult finish(Search& s, const PackingModel& m,
                   const std::vector<int>& search_to_free, bool completed) {
    SolveResult r;
    r.node_count = s.nodes.load();
    r.elapsed_seconds = s.elapsed();
    int best_free = s.best.load();
    r.best_value = best_free + s.offset;
    r.status = completed ? SolveStatus::optimal : SolveStatus::budget_exhausted;
    r.upper_bound = completed ? r.best_value : s.root_bound + s.offset;
    {
        std::lock_guard<std::mutex> lock(s.best_mutex);
        if (s.best_set_value == best_free) {
            r.witness = m.fixed_one;
            for (int v : s.best_set)
                r.witness.push_back(
                    m.free_words[std::size_t(search_to_free[std::size_t(v)])]);
            std::sort(r.witness.begin(), r.witness.end());
        }
        // otherwise the value rests on the supplied initial lower bound and
        // no packing of that size was materialized
    }
    return r;
}

} // namespace

SolveResult solve(const PackingModel& m, const SolveBudget& budget,
                  const SolveOptions& options) {
    const std::size_t nfree = m.free_words.size();

    Search s;
    s.options = &options;
    s.offset = m.objective_offset();
    s.start = Clock::now();
    if (budget.wall_seconds) s.wall_limit = *budget.wall_seconds;
    if (budget.node_limit) s.node_limit = *budget.node_limit;

    if (nfree == 0) {
        SolveResult r;
        r.status = SolveStatus::optimal;
        r.best_value = r.upper_bound = s.offset;
        r.witness = m.fixed_one;
        std::sort(r.witness.begin(), r.witness.end());
        r.elapsed_seconds = s.elapsed();
        return r;
    }

    // search order: descending conflict degree, ties by rank
    std::vector<int> order(nfree);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> degree(nfree);
    for (std::size_t i = 0; i < nfree; ++i) degree[i] = m.conflicts[i].count();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return degree[std::size_t(a)] > degree[std::size_t(b)];
    });
    std::vector<int> search_of_free(nfree);
    for (std::size_t k = 0; k < nfree; ++k) search_of_free[std::size_t(order[k])] = int(k);

    s.nvert = int(nfree);
    s.original = order;
    s.adj.assign(nfree, Bitset(nfree));
    for (std::size_t i = 0; i < nfree; ++i)
        m.conflicts[i].for_each([&](int j) {
            s.adj[std::size_t(search_of_free[i])].set(
                std::size_t(search_of_free[std::size_t(j)]));
        });

    // greedy incumbent by ascending rank
    {
        std::vector<int> greedy;
        Bitset allowed(nfree);
        allowed.set_all();
        for (std::size_t i = 0; i < nfree; ++i) {
            int v = search_of_free[i];
            if (allowed.test(std::size_t(v))) {
                greedy.push_back(v);
                allowed.reset(std::size_t(v));
                allowed.and_not(s.adj[std::size_t(v)]);
            }
        }
        s.improve(greedy, nullptr);
    }
    if (budget.initial_lower) {
        int implied = *budget.initial_lower - s.offset;
        int cur = s.best.load();
        if (implied > cur) s.best.store(std::min(implied, int(nfree)));
    }

    Bitset root(nfree);
    root.set_all();
    {
        Bitset scratch_a(nfree), scratch_b(nfree);
        s.root_bound = cover_bound(s, root, int(nfree), scratch_a, scratch_b);
    }

    int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    if (int(s.best.load()) < s.root_bound) {
        if (threads > 1) {
            s.spawn_depth = options.spawn_depth;
#pragma omp parallel num_threads(threads)
            {
#pragma omp single nowait
                expand(s, root, {}, 0, true);
            }
        } else {
            expand(s, std::move(root), {}, 0, false);
        }
    }

    bool completed = !s.out_of_budget.load();
    return finish(s, m, order, completed);
}

SolveResult solve_forced(const PackingModel& m, std::span<const WordIndex> forced,
                         const SolveBudget& budget, const SolveOptions& options) {
    // map free words to variable positions
    std::vector<WordIndex> pins;
    for (WordIndex w : forced)
        if (!std::binary_search(m.fixed_one.begin(), m.fixed_one.end(), w))
            pins.push_back(w);
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());

    std::vector<int> pin_vars;
    for (WordIndex w : pins) {
        auto it = std::lower_bound(m.free_words.begin(), m.free_words.end(), w);
        if (it == m.free_words.end() || *it != w)
            throw std::invalid_argument("forced word " + m.space.format_word(w) +
                                        " is not a free variable of the model");
        pin_vars.push_back(int(it - m.free_words.begin()));
    }

    // pairwise feasibility of the whole pinned set
    std::vector<WordIndex> all_pinned = m.fixed_one;
    all_pinned.insert(all_pinned.end(), pins.begin(), pins.end());
    for (std::size_t i = 0; i < all_pinned.size(); ++i)
        for (std::size_t j = i + 1; j < all_pinned.size(); ++j) {
            int dist = distance(m.space, all_pinned[i], all_pinned[j]);
            bool conflict = dist >= 1 && dist <= m.d - 1;
            if (!conflict && m.forbidden_profile && dist == m.d)
                conflict = marginal_distances(m.space, all_pinned[i], all_pinned[j]) ==
                           *m.forbidden_profile;
            if (conflict) {
                SolveResult r;
                r.status = SolveStatus::infeasible;
                return r;
            }
        }

    // restrict the model: drop pinned variables and everything conflicting
    const std::size_t nfree = m.free_words.size();
    Bitset keep(nfree);
    keep.set_all();
    for (int v : pin_vars) {
        keep.reset(std::size_t(v));
        keep.and_not(m.conflicts[std::size_t(v)]);
    }

    PackingModel sub;
    sub.kind = m.kind;
    sub.space = m.space;
    sub.d = m.d;
    sub.forbidden_profile = m.forbidden_profile;
    sub.fixed_one = all_pinned;
    std::sort(sub.fixed_one.begin(), sub.fixed_one.end());
    std::vector<int> sub_of_free(nfree, -1);
    for (std::size_t i = 0; i < nfree; ++i)
        if (keep.test(i)) {
            sub_of_free[i] = int(sub.free_words.size());
            sub.free_words.push_back(m.free_words[i]);
        } else if (std::find(pin_vars.begin(), pin_vars.end(), int(i)) == pin_vars.end()) {
            sub.fixed_zero.push_back(m.free_words[i]);
        }
    sub.conflicts.assign(sub.free_words.size(), Bitset(sub.free_words.size()));
    for (std::size_t i = 0; i < nfree; ++i)
        if (keep.test(i))
            m.conflicts[i].for_each([&](int j) {
                if (keep.test(std::size_t(j)))
                    sub.conflicts[std::size_t(sub_of_free[i])].set(
                        std::size_t(sub_of_free[std::size_t(j)]));
            });

    return solve(sub, budget, options);
}

} // namespace hampack
