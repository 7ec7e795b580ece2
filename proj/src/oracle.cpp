#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hampack/solver.hpp"

namespace hampack {

namespace {

// plain include/exclude enumeration, no bounding
void enumerate(const std::vector<std::uint32_t>& conflict, std::size_t i,
               std::uint32_t chosen, int count, int& best) {
    if (i == conflict.size()) {
        best = std::max(best, count);
        return;
    }
    if ((conflict[i] & chosen) == 0)
        enumerate(conflict, i + 1, chosen | (std::uint32_t{1} << i), count + 1, best);
    enumerate(conflict, i + 1, chosen, count, best);
}

} // namespace

int oracle(const MixedSpace& space, int d, std::span<const WordIndex> forced) {
    if (space.cardinality() > 24)
        throw std::invalid_argument("oracle handles spaces of at most 24 words, " +
                                    space.spec_string() + " has " +
                                    std::to_string(space.cardinality()));
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    const std::size_t n = std::size_t(space.cardinality());

    std::vector<WordIndex> pins(forced.begin(), forced.end());
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    for (std::size_t i = 0; i < pins.size(); ++i)
        for (std::size_t j = i + 1; j < pins.size(); ++j) {
            int dist = distance(space, pins[i], pins[j]);
            if (dist >= 1 && dist <= d - 1)
                throw std::invalid_argument("forced words " +
                                            space.format_word(pins[i]) + " and " +
                                            space.format_word(pins[j]) +
                                            " are at distance " + std::to_string(dist));
        }

    // candidates: words compatible with every forced word, in rank order
    std::vector<WordIndex> cand;
    for (WordIndex w = 0; w < space.cardinality(); ++w) {
        if (std::binary_search(pins.begin(), pins.end(), w)) continue;
        bool ok = true;
        for (WordIndex p : pins) {
            int dist = distance(space, w, p);
            if (dist >= 1 && dist <= d - 1) {
                ok = false;
                break;
            }
        }
        if (ok) cand.push_back(w);
    }

    std::vector<std::uint32_t> conflict(cand.size(), 0);
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (i != j) {
                int dist = distance(space, cand[i], cand[j]);
                if (dist >= 1 && dist <= d - 1)
                    conflict[i] |= std::uint32_t{1} << j;
            }

    int best = 0;
    enumerate(conflict, 0, 0, 0, best);
    return best + int(pins.size());
}

} // namespace hampack
