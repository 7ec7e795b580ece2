#include "hampack/bounds.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hampack {

void BoundLedger::record_lower(const std::string& spec, int d, long long value,
                               const std::string& provenance) {
    LedgerEntry& e = entries_[{spec, d}];
    if (value > e.lower) {
        e.lower = value;
        if (e.provenance.empty()) e.provenance = provenance;
    }
    if (e.upper != kNoBound && e.lower > e.upper)
        throw std::invalid_argument("ledger entry " + spec + " d=" + std::to_string(d) +
                                    ": lower bound exceeds upper bound");
}

void BoundLedger::record_upper(const std::string& spec, int d, long long value,
                               const std::string& provenance) {
    LedgerEntry& e = entries_[{spec, d}];
    if (e.upper == kNoBound || value < e.upper) {
        e.upper = value;
        e.provenance = provenance;
    }
    if (e.lower > 0 && e.upper != kNoBound && e.lower > e.upper)
        throw std::invalid_argument("ledger entry " + spec + " d=" + std::to_string(d) +
                                    ": upper bound drops below lower bound");
}

const LedgerEntry* BoundLedger::find(const std::string& spec, int d) const {
    auto it = entries_.find({spec, d});
    return it == entries_.end() ? nullptr : &it->second;
}

BoundLedger read_anchor_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open anchor file " + path.string());
    BoundLedger ledger;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        std::size_t h = trimmed.find('#');
        if (h != std::string::npos) trimmed.resize(h);
        std::istringstream ss(trimmed);
        std::string kspec, alphaspec, provenance;
        int d = 0;
        long long lower = 0, upper = 0;
        if (!(ss >> kspec)) continue;   // blank line
        if (!(ss >> alphaspec >> d >> lower >> upper >> provenance))
            throw std::invalid_argument(path.string() + " line " + std::to_string(lineno) +
                                        ": expected `k-spec alpha-spec d lower upper "
                                        "provenance`");
        // k-spec "2,3" with alpha-spec "7,1" names the space 2^7,3^1
        std::vector<Block> blocks;
        std::istringstream ks(kspec), as(alphaspec);
        std::string kt, at;
        while (std::getline(ks, kt, ',')) {
            if (!std::getline(as, at, ','))
                throw std::invalid_argument(path.string() + " line " +
                                            std::to_string(lineno) +
                                            ": k-spec and alpha-spec lengths differ");
            blocks.push_back({std::stoi(kt), std::stoi(at)});
        }
        if (std::getline(as, at, ','))
            throw std::invalid_argument(path.string() + " line " + std::to_string(lineno) +
                                        ": k-spec and alpha-spec lengths differ");
        std::string spec = MixedSpace::make(std::move(blocks)).spec_string();
        if (lower > 0) ledger.record_lower(spec, d, lower, provenance);
        ledger.record_upper(spec, d, upper, provenance);
    }
    return ledger;
}

namespace {

constexpr BoundRule kRules[] = {
    {"ii", +1, 0, 0, 2, 1},
    {"ii", 0, +1, 0, 3, 1},
    {"iv", -1, +1, 0, 3, 2},
    {"vi", 0, +1, +1, 1, 1},
};

std::string cell_name(int b, int t, int d) {
    return "N(" + std::to_string(b) + "," + std::to_string(t) + ";" +
           std::to_string(d) + ")";
}

} // namespace

std::span<const BoundRule> rule_table() { return kRules; }

std::vector<BoundRule> rules_by_name(std::span<const std::string> names) {
    std::vector<BoundRule> out;
    for (const std::string& n : names) {
        bool found = false;
        for (const BoundRule& r : kRules)
            if (n == r.name) {
                out.push_back(r);
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown propagation rule '" + n + "'");
    }
    return out;
}

std::string bt_spec(int b, int t) {
    if (b <= 0 && t <= 0) throw std::invalid_argument("bt_spec: empty space");
    std::string s;
    if (b > 0) s += "2^" + std::to_string(b);
    if (t > 0) {
        if (!s.empty()) s += ',';
        s += "3^" + std::to_string(t);
    }
    return s;
}

std::optional<std::pair<int, int>> parse_bt_spec(const std::string& spec) {
    MixedSpace space;
    try {
        space = MixedSpace::parse(spec);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    int b = 0, t = 0;
    for (const Block& blk : space.blocks()) {
        if (blk.alphabet == 2)
            b = blk.length;
        else if (blk.alphabet == 3)
            t = blk.length;
        else
            return std::nullopt;
    }
    return std::make_pair(b, t);
}

int propagate_bounds(BoundLedger& ledger, std::span<const BoundRule> rules,
                     const PropagationGrid& grid) {
    int updates = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        // take a snapshot: rule applications must not see bounds derived in
        // the same sweep through an invalidated iterator
        std::vector<std::tuple<int, int, int, long long>> cells;
        for (const auto& [key, entry] : ledger.entries()) {
            if (entry.upper == kNoBound) continue;
            auto bt = parse_bt_spec(key.first);
            if (!bt) continue;
            cells.emplace_back(bt->first, bt->second, key.second, entry.upper);
        }
        for (auto [b, t, d, upper] : cells) {
            for (const BoundRule& rule : rules) {
                int nb = b + rule.db, nt = t + rule.dt, nd = d + rule.dd;
                if (nb < 0 || nt < 0 || (nb == 0 && nt == 0)) continue;
                if (nb > grid.bmax || nt > grid.tmax || nd < grid.dmin || nd > grid.dmax)
                    continue;
                long long derived = upper * rule.num / rule.den;
                std::string spec = bt_spec(nb, nt);
                const LedgerEntry* cur = ledger.find(spec, nd);
                if (!cur || cur->upper == kNoBound || derived < cur->upper) {
                    ledger.record_upper(spec, nd, derived,
                                        std::string(rule.name) + " from " +
                                            cell_name(b, t, d));
                    ++updates;
                    changed = true;
                }
            }
        }
    }
    return updates;
}

} // namespace hampack
