#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hampack {

using WordIndex = std::uint64_t;

// One alphabet block: `length` positions over an alphabet of `alphabet` symbols.
struct Block {
    int alphabet = 0;
    int length = 0;
    bool operator==(const Block&) const = default;
};

// A mixed Hamming space: an ordered ladder of alphabet blocks with strictly
// increasing alphabet sizes. Words print with the largest alphabet block
// first; ranks are mixed-radix with the leftmost printed symbol most
// significant, so ascending rank equals ascending printed string.
class MixedSpace {
public:
    MixedSpace() = default;

    // Validates and sorts blocks by increasing alphabet size.
    // Rejects alphabets < 2, lengths < 1, duplicate alphabet sizes,
    // and spaces whose cardinality overflows.
    static MixedSpace make(std::vector<Block> blocks);

    // Parses a spec string of comma-separated `k^alpha` terms with strictly
    // increasing k, e.g. "2^7,3^1".
    static MixedSpace parse(std::string_view spec);

    int block_count() const { return int(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    int length() const { return int(radix_.size()); }
    WordIndex cardinality() const { return cardinality_; }

    // Alphabet size at a printed position (0 = leftmost).
    int radix(int pos) const { return radix_[std::size_t(pos)]; }
    // Block index (into blocks(), ascending alphabet order) at a printed position.
    int block_of(int pos) const { return block_ix_[std::size_t(pos)]; }

    std::vector<std::uint8_t> unrank(WordIndex i) const;
    WordIndex rank(std::span<const std::uint8_t> symbols) const;

    // Word literals are contiguous digit strings in printed order. Only
    // alphabets up to 10 symbols are representable this way.
    WordIndex parse_word(std::string_view text) const;
    std::string format_word(WordIndex i) const;

    // Canonical spec string, ascending alphabet size: "2^7,3^1".
    std::string spec_string() const;

    bool operator==(const MixedSpace& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<Block> blocks_;            // ascending alphabet size
    std::vector<std::uint8_t> radix_;      // per printed position
    std::vector<std::uint8_t> block_ix_;   // per printed position
    WordIndex cardinality_ = 0;
};

// Number of printed positions where two words of one space differ.
int distance(const MixedSpace& space, WordIndex a, WordIndex b);

// A word pinned to its space; the checked-distance entry points below reject
// operands from different spaces.
struct Codeword {
    const MixedSpace* space = nullptr;
    WordIndex index = 0;
};

int distance(const Codeword& a, const Codeword& b);

// Per-block difference counts, indexed like MixedSpace::blocks() (ascending
// alphabet size). The total over blocks equals the Hamming distance.
struct MarginalProfile {
    std::vector<int> per_block;
    int total() const;
    bool operator==(const MarginalProfile&) const = default;
};

MarginalProfile marginal_distances(const MixedSpace& space, WordIndex a, WordIndex b);
MarginalProfile marginal_distances(const Codeword& a, const Codeword& b);

// Profile text order is largest alphabet first ("m_s,...,m_1"), matching the
// printed word order.
MarginalProfile parse_profile(const MixedSpace& space, std::string_view text);
std::string format_profile(const MixedSpace& space, const MarginalProfile& p);

// All words at distance <= radius from the center, ascending rank.
std::vector<WordIndex> ball(const MixedSpace& space, WordIndex center, int radius);

} // namespace hampack
