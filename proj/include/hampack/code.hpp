#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hampack/space.hpp"

namespace hampack {

// A duplicate-free set of codewords in one space, kept in ascending rank
// order. Immutable after construction.
class Code {
public:
    Code() = default;
    Code(MixedSpace space, std::vector<WordIndex> words);

    const MixedSpace& space() const { return space_; }
    const std::vector<WordIndex>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool contains(WordIndex w) const;

private:
    MixedSpace space_;
    std::vector<WordIndex> words_;
};

// Minimum pairwise distance; requires at least two words.
int min_distance(const Code& code);

struct ViolatingPair {
    WordIndex a = 0;
    WordIndex b = 0;
    int distance = 0;
};

struct VerifyReport {
    std::size_t cardinality = 0;
    std::optional<int> min_dist;   // empty when fewer than two words
    int required_d = 0;
    bool pass = false;
    std::vector<ViolatingPair> violations;   // pairs at distance 1..d-1
};

VerifyReport verify(const Code& code, int d);

// Graph on the code's words with edges exactly between pairs at distance d.
struct ContactGraph {
    int d = 0;
    std::size_t edge_count = 0;
    std::vector<std::vector<int>> adjacency;   // indices into code.words()
};

// Requires a d-feasible code (min distance >= d, or at most one word).
ContactGraph contact_graph(const Code& code, int d);

bool is_connected(const ContactGraph& g);

struct ConnectifyStats {
    int outer_iterations = 0;
    int absorbed = 0;
    int swaps = 0;
};

// Transforms a d-feasible packing into one of equal cardinality and min
// distance >= d whose contact graph at d is connected. The seed word is the
// lexicographically smallest; the seeded variant draws it at random.
Code connectify(const Code& code, int d, ConnectifyStats* stats = nullptr);
Code connectify_seeded(const Code& code, int d, std::uint64_t seed,
                       ConnectifyStats* stats = nullptr);

// Exchanges symbols a and b at one printed position across a word set. This
// is an isometry of the space: all pairwise distances are preserved.
std::vector<WordIndex> symbol_swap(const MixedSpace& space,
                                   std::span<const WordIndex> words, int pos,
                                   int a, int b);

// Code files: one word per line in printed digit order; blank lines and
// '#'-prefixed comments ignored. The space is always supplied externally.
Code parse_code_text(const MixedSpace& space, std::string_view text);
Code read_code_file(const MixedSpace& space, const std::filesystem::path& path);
void write_code_file(const Code& code, const std::filesystem::path& path);

} // namespace hampack
