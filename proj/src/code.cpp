#include "hampack/code.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hampack {

Code::Code(MixedSpace space, std::vector<WordIndex> words)
    : space_(std::move(space)), words_(std::move(words)) {
    for (WordIndex w : words_)
        if (w >= space_.cardinality())
            throw std::invalid_argument("codeword index " + std::to_string(w) +
                                        " outside space " + space_.spec_string());
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool Code::contains(WordIndex w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

int min_distance(const Code& code) {
    if (code.size() < 2)
        throw std::invalid_argument("min_distance needs at least two words");
    const auto& ws = code.words();
    int best = code.space().length() + 1;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            best = std::min(best, distance(code.space(), ws[i], ws[j]));
    return best;
}

VerifyReport verify(const Code& code, int d) {
    VerifyReport rep;
    rep.cardinality = code.size();
    rep.required_d = d;
    const auto& ws = code.words();
    int best = code.space().length() + 1;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            int dist = distance(code.space(), ws[i], ws[j]);
            best = std::min(best, dist);
            if (dist >= 1 && dist <= d - 1)
                rep.violations.push_back({ws[i], ws[j], dist});
        }
    if (code.size() >= 2) rep.min_dist = best;
    rep.pass = rep.violations.empty();
    return rep;
}

ContactGraph contact_graph(const Code& code, int d) {
    if (code.size() >= 2 && min_distance(code) < d)
        throw std::invalid_argument("code is not feasible at distance " + std::to_string(d));
    ContactGraph g;
    g.d = d;
    g.adjacency.assign(code.size(), {});
    const auto& ws = code.words();
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            if (distance(code.space(), ws[i], ws[j]) == d) {
                g.adjacency[i].push_back(int(j));
                g.adjacency[j].push_back(int(i));
                ++g.edge_count;
            }
    return g;
}

bool is_connected(const ContactGraph& g) {
    if (g.adjacency.empty())
        throw std::invalid_argument("is_connected: empty graph");
    std::vector<char> seen(g.adjacency.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.adjacency[std::size_t(v)])
            if (!seen[std::size_t(u)]) {
                seen[std::size_t(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == g.adjacency.size();
}

namespace {

using Symbols = std::vector<std::uint8_t>;

int sym_distance(const Symbols& a, const Symbols& b) {
    int d = 0;
    for (std::size_t p = 0; p < a.size(); ++p) d += int(a[p] != b[p]);
    return d;
}

// distance from w to the closest element of group
int set_distance(const Symbols& w, const std::vector<Symbols>& group) {
    int best = int(w.size()) + 1;
    for (const Symbols& g : group) best = std::min(best, sym_distance(w, g));
    return best;
}

Code connectify_impl(const Code& code, int d, std::size_t seed_pos,
                     ConnectifyStats* stats) {
    if (code.size() == 0)
        throw std::invalid_argument("connectify: empty code");
    if (code.size() >= 2 && min_distance(code) < d)
        throw std::invalid_argument("connectify: code is not feasible at distance " +
                                    std::to_string(d));

    const MixedSpace& space = code.space();
    std::vector<Symbols> grown, rest;
    for (std::size_t i = 0; i < code.size(); ++i) {
        Symbols s = space.unrank(code.words()[i]);
        if (i == seed_pos)
            grown.push_back(std::move(s));
        else
            rest.push_back(std::move(s));
    }

    ConnectifyStats local{};
    while (!rest.empty()) {
        std::size_t before_rest = rest.size();
        // absorb everything at distance exactly d from the grown component;
        // rest stays sorted, so the first hit is the lexicographically smallest
        bool absorbed = true;
        while (absorbed && !rest.empty()) {
            absorbed = false;
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (set_distance(rest[i], grown) == d) {
                    grown.push_back(rest[i]);
                    rest.erase(rest.begin() + std::ptrdiff_t(i));
                    ++local.absorbed;
                    absorbed = true;
                    break;
                }
        }
        if (rest.empty()) break;

        int gap = int(space.length()) + 1;
        for (const Symbols& w : rest) gap = std::min(gap, set_distance(w, grown));
        // a d-feasible packing cannot bring the sets closer than d, and the
        // absorb loop above exhausted distance-exactly-d pairs
        if (gap <= d)
            throw std::logic_error("connectify: component distance not above d");

        std::sort(rest.begin(), rest.end());
        const Symbols* wprime = nullptr;
        for (const Symbols& w : rest)
            if (set_distance(w, grown) == gap) {
                wprime = &w;
                break;
            }
        std::sort(grown.begin(), grown.end());
        const Symbols* w = nullptr;
        for (const Symbols& g : grown)
            if (sym_distance(g, *wprime) == gap) {
                w = &g;
                break;
            }
        int pos = 0;
        while ((*w)[std::size_t(pos)] == (*wprime)[std::size_t(pos)]) ++pos;
        std::uint8_t a = (*w)[std::size_t(pos)];
        std::uint8_t b = (*wprime)[std::size_t(pos)];
        for (Symbols& y : rest) {
            if (y[std::size_t(pos)] == a)
                y[std::size_t(pos)] = b;
            else if (y[std::size_t(pos)] == b)
                y[std::size_t(pos)] = a;
        }
        ++local.swaps;

        // progress measure (|rest|, d(grown, rest)) must strictly decrease
        int after_gap = int(space.length()) + 1;
        for (const Symbols& y : rest) after_gap = std::min(after_gap, set_distance(y, grown));
        if (rest.size() == before_rest && after_gap != gap - 1)
            throw std::logic_error("connectify: swap did not reduce component distance");
        ++local.outer_iterations;
    }

    std::vector<WordIndex> out;
    out.reserve(grown.size());
    for (const Symbols& g : grown) out.push_back(space.rank(g));
    if (stats) *stats = local;
    return Code(space, std::move(out));
}

} // namespace

Code connectify(const Code& code, int d, ConnectifyStats* stats) {
    return connectify_impl(code, d, 0, stats);   // words are rank-sorted: 0 is lex smallest
}

Code connectify_seeded(const Code& code, int d, std::uint64_t seed, ConnectifyStats* stats) {
    if (code.size() == 0)
        throw std::invalid_argument("connectify: empty code");
    std::mt19937_64 rng(seed);
    std::size_t pos = std::uniform_int_distribution<std::size_t>(0, code.size() - 1)(rng);
    return connectify_impl(code, d, pos, stats);
}

std::vector<WordIndex> symbol_swap(const MixedSpace& space,
                                   std::span<const WordIndex> words, int pos,
                                   int a, int b) {
    if (pos < 0 || pos >= space.length())
        throw std::invalid_argument("symbol_swap: position out of range");
    int r = space.radix(pos);
    if (a == b || a < 0 || b < 0 || a >= r || b >= r)
        throw std::invalid_argument("symbol_swap: invalid symbols for position " +
                                    std::to_string(pos));
    std::vector<WordIndex> out;
    out.reserve(words.size());
    for (WordIndex w : words) {
        Symbols s = space.unrank(w);
        if (s[std::size_t(pos)] == a)
            s[std::size_t(pos)] = std::uint8_t(b);
        else if (s[std::size_t(pos)] == b)
            s[std::size_t(pos)] = std::uint8_t(a);
        out.push_back(space.rank(s));
    }
    return out;
}

Code parse_code_text(const MixedSpace& space, std::string_view text) {
    std::vector<WordIndex> words;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : nl - pos);
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (!line.empty() && line[0] != '#') {
            try {
                words.push_back(space.parse_word(line));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return Code(space, std::move(words));
}

Code read_code_file(const MixedSpace& space, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_code_text(space, ss.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

void write_code_file(const Code& code, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write code file " + path.string());
    for (WordIndex w : code.words()) out << code.space().format_word(w) << '\n';
}

} // namespace hampack
