#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hampack/space.hpp"

namespace hampack {

inline constexpr long long kNoBound = -1;

struct LedgerEntry {
    long long lower = 0;
    long long upper = kNoBound;   // kNoBound = unknown
    std::string provenance;       // "anchor", "solved", or "<rule> from <parent>"
};

// Best known bounds per (space, d), keyed by the canonical space spec string.
class BoundLedger {
public:
    using Key = std::pair<std::string, int>;

    void record_lower(const std::string& spec, int d, long long value,
                      const std::string& provenance);
    void record_upper(const std::string& spec, int d, long long value,
                      const std::string& provenance);

    const LedgerEntry* find(const std::string& spec, int d) const;
    const std::map<Key, LedgerEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<Key, LedgerEntry> entries_;
};

// Anchor files: one entry per line, `k-spec alpha-spec d lower upper
// provenance`, e.g. `2,3 7,1 3 26 26 solved`. '#' comments and blank lines
// are ignored.
BoundLedger read_anchor_file(const std::filesystem::path& path);

// Upper-bound propagation over the binary/ternary grid N(b,t;d). Each rule
// derives a bound for a neighbouring cell: floor(upper * num / den) at
// (b+db, t+dt, d+dd).
struct BoundRule {
    const char* name;
    int db, dt, dd;
    int num, den;
};

// ii: appending a coordinate of alphabet size q multiplies the bound by q.
// iv: trading a binary coordinate for a ternary one costs a factor 3/2.
// vi: deleting the new coordinate of a (b, t+1; d+1) packing keeps d >= d,
//     so its cardinality is at most the (b, t; d) bound.
std::span<const BoundRule> rule_table();
std::vector<BoundRule> rules_by_name(std::span<const std::string> names);

struct PropagationGrid {
    int bmax = 10;
    int tmax = 5;
    int dmin = 3;
    int dmax = 4;
};

// Canonical binary/ternary spec string for N(b,t;.): "2^b,3^t".
std::string bt_spec(int b, int t);
// Inverse of bt_spec; empty when the spec is not a pure binary/ternary space.
std::optional<std::pair<int, int>> parse_bt_spec(const std::string& spec);

// Applies the rules to a fixed point over the grid; returns the number of
// entry improvements. Idempotent once the fixed point is reached.
int propagate_bounds(BoundLedger& ledger, std::span<const BoundRule> rules,
                     const PropagationGrid& grid);

} // namespace hampack
