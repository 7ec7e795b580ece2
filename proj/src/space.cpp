#include "hampack/space.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hampack {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

int parse_int(std::string_view s, const char* what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        fail(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

} // namespace

MixedSpace MixedSpace::make(std::vector<Block> blocks) {
    if (blocks.empty()) fail("space needs at least one block");
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.alphabet < b.alphabet; });
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (blocks[j].alphabet < 2)
            fail("alphabet size must be at least 2, got " + std::to_string(blocks[j].alphabet));
        if (blocks[j].length < 1)
            fail("block length must be at least 1, got " + std::to_string(blocks[j].length));
        if (j > 0 && blocks[j].alphabet == blocks[j - 1].alphabet)
            fail("duplicate alphabet size " + std::to_string(blocks[j].alphabet));
    }

    MixedSpace s;
    s.blocks_ = std::move(blocks);
    // printed order: largest alphabet block first
    for (int j = s.block_count() - 1; j >= 0; --j) {
        const Block& b = s.blocks_[std::size_t(j)];
        for (int p = 0; p < b.length; ++p) {
            s.radix_.push_back(std::uint8_t(b.alphabet));
            s.block_ix_.push_back(std::uint8_t(j));
        }
    }
    constexpr WordIndex kMaxCardinality = WordIndex{1} << 62;
    WordIndex card = 1;
    for (std::uint8_t r : s.radix_) {
        if (card > kMaxCardinality / r) fail("space cardinality overflows");
        card *= r;
    }
    s.cardinality_ = card;
    return s;
}

MixedSpace MixedSpace::parse(std::string_view spec) {
    std::vector<Block> blocks;
    std::size_t pos = 0;
    int term = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string_view t = spec.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
        ++term;
        std::size_t caret = t.find('^');
        if (t.empty() || caret == std::string_view::npos || caret == 0 || caret + 1 == t.size())
            fail("term " + std::to_string(term) + ": expected k^alpha, got '" +
                 std::string(t) + "'");
        Block b;
        b.alphabet = parse_int(t.substr(0, caret), "alphabet size");
        b.length = parse_int(t.substr(caret + 1), "block length");
        if (!blocks.empty() && b.alphabet <= blocks.back().alphabet)
            fail("term " + std::to_string(term) +
                 ": alphabet sizes must be strictly increasing");
        blocks.push_back(b);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return make(std::move(blocks));
}

std::vector<std::uint8_t> MixedSpace::unrank(WordIndex i) const {
    if (i >= cardinality_)
        fail("word index " + std::to_string(i) + " out of range for space " + spec_string());
    std::vector<std::uint8_t> sym(radix_.size());
    for (int p = length() - 1; p >= 0; --p) {
        std::uint8_t r = radix_[std::size_t(p)];
        sym[std::size_t(p)] = std::uint8_t(i % r);
        i /= r;
    }
    return sym;
}

WordIndex MixedSpace::rank(std::span<const std::uint8_t> symbols) const {
    if (int(symbols.size()) != length())
        fail("expected " + std::to_string(length()) + " symbols, got " +
             std::to_string(symbols.size()));
    WordIndex i = 0;
    for (int p = 0; p < length(); ++p) {
        std::uint8_t r = radix_[std::size_t(p)];
        if (symbols[std::size_t(p)] >= r)
            fail("position " + std::to_string(p) + ": symbol " +
                 std::to_string(symbols[std::size_t(p)]) + " exceeds alphabet size " +
                 std::to_string(r));
        i = i * r + symbols[std::size_t(p)];
    }
    return i;
}

WordIndex MixedSpace::parse_word(std::string_view text) const {
    if (int(text.size()) != length())
        fail("word '" + std::string(text) + "' has " + std::to_string(text.size()) +
             " symbols, space " + spec_string() + " needs " + std::to_string(length()));
    WordIndex i = 0;
    for (int p = 0; p < length(); ++p) {
        char c = text[std::size_t(p)];
        if (c < '0' || c > '9')
            fail("word '" + std::string(text) + "' position " + std::to_string(p) +
                 ": '" + std::string(1, c) + "' is not a digit");
        int v = c - '0';
        int r = radix_[std::size_t(p)];
        if (v >= r)
            fail("word '" + std::string(text) + "' position " + std::to_string(p) +
                 ": symbol " + std::to_string(v) + " exceeds alphabet size " +
                 std::to_string(r));
        i = i * WordIndex(r) + WordIndex(v);
    }
    return i;
}

std::string MixedSpace::format_word(WordIndex i) const {
    for (const Block& b : blocks_)
        if (b.alphabet > 10)
            fail("digit-string format supports alphabets up to 10 symbols, space is " +
                 spec_string());
    std::vector<std::uint8_t> sym = unrank(i);
    std::string out(sym.size(), '0');
    for (std::size_t p = 0; p < sym.size(); ++p) out[p] = char('0' + sym[p]);
    return out;
}

std::string MixedSpace::spec_string() const {
    std::string out;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(blocks_[j].alphabet);
        out += '^';
        out += std::to_string(blocks_[j].length);
    }
    return out;
}

int distance(const MixedSpace& space, WordIndex a, WordIndex b) {
    if (a == b) return 0;
    int diff = 0;
    for (int p = space.length() - 1; p >= 0; --p) {
        WordIndex r = WordIndex(space.radix(p));
        diff += int(a % r != b % r);
        a /= r;
        b /= r;
    }
    return diff;
}

int distance(const Codeword& a, const Codeword& b) {
    if (!a.space || !b.space || !(*a.space == *b.space))
        throw std::invalid_argument("distance: codewords from different spaces");
    return distance(*a.space, a.index, b.index);
}

int MarginalProfile::total() const {
    int t = 0;
    for (int v : per_block) t += v;
    return t;
}

MarginalProfile marginal_distances(const MixedSpace& space, WordIndex a, WordIndex b) {
    MarginalProfile prof;
    prof.per_block.assign(std::size_t(space.block_count()), 0);
    for (int p = space.length() - 1; p >= 0; --p) {
        WordIndex r = WordIndex(space.radix(p));
        if (a % r != b % r) ++prof.per_block[std::size_t(space.block_of(p))];
        a /= r;
        b /= r;
    }
    return prof;
}

MarginalProfile marginal_distances(const Codeword& a, const Codeword& b) {
    if (!a.space || !b.space || !(*a.space == *b.space))
        throw std::invalid_argument("marginal_distances: codewords from different spaces");
    return marginal_distances(*a.space, a.index, b.index);
}

MarginalProfile parse_profile(const MixedSpace& space, std::string_view text) {
    std::vector<int> largest_first;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view t = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
        largest_first.push_back(parse_int(t, "profile entry"));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (int(largest_first.size()) != space.block_count())
        fail("profile needs " + std::to_string(space.block_count()) +
             " entries for space " + space.spec_string());
    MarginalProfile prof;
    prof.per_block.assign(largest_first.rbegin(), largest_first.rend());
    return prof;
}

std::string format_profile(const MixedSpace& space, const MarginalProfile& p) {
    (void)space;
    std::string out;
    for (auto it = p.per_block.rbegin(); it != p.per_block.rend(); ++it) {
        if (!out.empty()) out += ',';
        out += std::to_string(*it);
    }
    return out;
}

namespace {

void ball_rec(const MixedSpace& space, const std::vector<std::uint8_t>& center,
              int pos, int budget, WordIndex acc, std::vector<WordIndex>& out) {
    if (pos == space.length()) {
        out.push_back(acc);
        return;
    }
    WordIndex r = WordIndex(space.radix(pos));
    // keep the center's symbol
    ball_rec(space, center, pos + 1, budget, acc * r + center[std::size_t(pos)], out);
    if (budget == 0) return;
    for (WordIndex v = 0; v < r; ++v)
        if (v != center[std::size_t(pos)])
            ball_rec(space, center, pos + 1, budget - 1, acc * r + v, out);
}

} // namespace

std::vector<WordIndex> ball(const MixedSpace& space, WordIndex center, int radius) {
    if (radius < 0 || radius > space.length())
        fail("ball radius " + std::to_string(radius) + " out of range [0, " +
             std::to_string(space.length()) + "]");
    std::vector<WordIndex> out;
    ball_rec(space, space.unrank(center), 0, radius, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hampack
