#include "hampack/model.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace hampack {

const char* to_string(ModelKind k) {
    switch (k) {
        case ModelKind::full: return "full";
        case ModelKind::zero_fixed: return "zero";
        case ModelKind::reduced: return "reduced";
        case ModelKind::pair: return "pair";
        case ModelKind::profile_forbidding: return "forbid";
    }
    return "?";
}

std::size_t PackingModel::conflict_count() const {
    std::size_t twice = 0;
    for (const Bitset& row : conflicts) twice += row.count();
    return twice / 2;
}

ModelStats model_stats(const PackingModel& m) {
    return {m.free_words.size(), m.fixed_one.size(), m.fixed_zero.size(),
            m.conflict_count()};
}

namespace {

constexpr WordIndex kMaxModelWords = WordIndex{1} << 15;

void check_model_size(const MixedSpace& space) {
    if (space.cardinality() > kMaxModelWords)
        throw std::invalid_argument(
            "space " + space.spec_string() + " has " +
            std::to_string(space.cardinality()) +
            " words; model construction is capped at " +
            std::to_string(kMaxModelWords));
}

// Decoded symbols of a word list, one contiguous row per word.
struct SymbolTable {
    SymbolTable(const MixedSpace& space, std::span<const WordIndex> words)
        : n(space.length()), data(words.size() * std::size_t(space.length())) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            auto sym = space.unrank(words[i]);
            std::copy(sym.begin(), sym.end(), data.begin() + std::ptrdiff_t(i) * n);
        }
    }
    const std::uint8_t* row(std::size_t i) const { return data.data() + std::ptrdiff_t(i) * n; }
    std::ptrdiff_t n;
    std::vector<std::uint8_t> data;
};

struct ConflictPred {
    const MixedSpace* space;
    int d;
    const MarginalProfile* forbid;

    bool operator()(const std::uint8_t* a, const std::uint8_t* b) const {
        int n = space->length();
        if (!forbid) {
            int diff = 0;
            for (int p = 0; p < n; ++p) {
                diff += int(a[p] != b[p]);
                if (diff >= d) return false;
            }
            return diff >= 1;
        }
        int diff = 0;
        int per_block[8] = {};
        for (int p = 0; p < n; ++p)
            if (a[p] != b[p]) {
                if (++diff > d) return false;
                ++per_block[space->block_of(p)];
            }
        if (diff >= 1 && diff <= d - 1) return true;
        if (diff != d) return false;
        for (int j = 0; j < space->block_count(); ++j)
            if (per_block[j] != forbid->per_block[std::size_t(j)]) return false;
        return true;
    }
};

std::vector<Bitset> conflict_rows(const MixedSpace& space,
                                  std::span<const WordIndex> words, int d,
                                  const MarginalProfile* forbid, int threads) {
    if (space.block_count() > 8)
        throw std::invalid_argument("conflict kernel supports at most 8 blocks");
    const std::size_t m = words.size();
    SymbolTable table(space, words);
    ConflictPred conflict{&space, d, forbid};
    std::vector<Bitset> rows(m, Bitset(m));
    if (threads == 1) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (conflict(table.row(i), table.row(j))) {
                    rows[i].set(j);
                    rows[j].set(i);
                }
        return rows;
    }
    // each thread fills complete rows; no row is touched twice
    if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(m); ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (j != std::size_t(i) && conflict(table.row(std::size_t(i)), table.row(j)))
                rows[std::size_t(i)].set(j);
    return rows;
}

std::vector<WordIndex> all_words(const MixedSpace& space) {
    std::vector<WordIndex> out(space.cardinality());
    for (WordIndex i = 0; i < space.cardinality(); ++i) out[std::size_t(i)] = i;
    return out;
}

void validate_profile(const MixedSpace& space, const MarginalProfile& profile, int d) {
    if (int(profile.per_block.size()) != space.block_count())
        throw std::invalid_argument("profile has " +
                                    std::to_string(profile.per_block.size()) +
                                    " entries, space has " +
                                    std::to_string(space.block_count()) + " blocks");
    for (int j = 0; j < space.block_count(); ++j) {
        int m = profile.per_block[std::size_t(j)];
        if (m < 0 || m > space.blocks()[std::size_t(j)].length)
            throw std::invalid_argument(
                "profile entry " + std::to_string(m) + " out of range for block " +
                std::to_string(space.blocks()[std::size_t(j)].alphabet) + "^" +
                std::to_string(space.blocks()[std::size_t(j)].length));
    }
    if (profile.total() != d)
        throw std::invalid_argument("profile total " + std::to_string(profile.total()) +
                                    " must equal d = " + std::to_string(d));
}

void check_d(int d) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
}

} // namespace

std::vector<Bitset> conflict_rows_serial(const MixedSpace& space,
                                         std::span<const WordIndex> words, int d,
                                         const MarginalProfile* forbid) {
    return conflict_rows(space, words, d, forbid, 1);
}

std::vector<Bitset> conflict_rows_parallel(const MixedSpace& space,
                                           std::span<const WordIndex> words, int d,
                                           const MarginalProfile* forbid, int threads) {
    return conflict_rows(space, words, d, forbid, threads <= 0 ? 0 : std::max(threads, 2));
}

PackingModel build_full(const MixedSpace& space, int d, int threads) {
    check_d(d);
    check_model_size(space);
    PackingModel m;
    m.kind = ModelKind::full;
    m.space = space;
    m.d = d;
    m.free_words = all_words(space);
    m.conflicts = conflict_rows(space, m.free_words, d, nullptr, threads);
    return m;
}

PackingModel build_zero_fixed(const MixedSpace& space, int d, int threads) {
    check_d(d);
    check_model_size(space);
    PackingModel m;
    m.kind = ModelKind::zero_fixed;
    m.space = space;
    m.d = d;
    m.fixed_one = {0};
    std::vector<WordIndex> inner = ball(space, 0, std::min(d - 1, space.length()));
    for (WordIndex w : inner)
        if (w != 0) m.fixed_zero.push_back(w);
    for (WordIndex w = 0; w < space.cardinality(); ++w)
        if (!std::binary_search(inner.begin(), inner.end(), w)) m.free_words.push_back(w);
    m.conflicts = conflict_rows(space, m.free_words, d, nullptr, threads);
    m.fixed_vars_in_model = true;
    return m;
}

PackingModel build_reduced(const MixedSpace& space, int d, int threads) {
    PackingModel m = build_zero_fixed(space, d, threads);
    m.kind = ModelKind::reduced;
    m.fixed_vars_in_model = false;
    return m;
}

PackingModel build_pair(const MixedSpace& space, int d, WordIndex second, int threads) {
    check_d(d);
    check_model_size(space);
    int dz = distance(space, 0, second);
    if (dz != d)
        throw std::invalid_argument("second word " + space.format_word(second) +
                                    " is at distance " + std::to_string(dz) +
                                    " from the all-zero word, need exactly " +
                                    std::to_string(d));
    PackingModel m;
    m.kind = ModelKind::pair;
    m.space = space;
    m.d = d;
    m.fixed_one = {0, second};
    int r = std::min(d - 1, space.length());
    std::vector<WordIndex> around_z = ball(space, 0, r);
    std::vector<WordIndex> around_second = ball(space, second, r);
    std::vector<WordIndex> eliminated;
    std::set_union(around_z.begin(), around_z.end(), around_second.begin(),
                   around_second.end(), std::back_inserter(eliminated));
    for (WordIndex w : eliminated)
        if (w != 0 && w != second) m.fixed_zero.push_back(w);
    for (WordIndex w = 0; w < space.cardinality(); ++w)
        if (!std::binary_search(eliminated.begin(), eliminated.end(), w))
            m.free_words.push_back(w);
    m.conflicts = conflict_rows(space, m.free_words, d, nullptr, threads);
    return m;
}

PackingModel build_profile_forbidding(const MixedSpace& space, int d,
                                      const MarginalProfile& profile, int threads) {
    check_d(d);
    check_model_size(space);
    validate_profile(space, profile, d);
    PackingModel m;
    m.kind = ModelKind::profile_forbidding;
    m.space = space;
    m.d = d;
    m.free_words = all_words(space);
    m.forbidden_profile = profile;
    m.conflicts = conflict_rows(space, m.free_words, d, &profile, threads);
    return m;
}

} // namespace hampack
