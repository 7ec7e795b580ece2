#include "hampack/json_io.hpp"

namespace hampack {

using nlohmann::json;

json to_json(const SolveResult& r, const MixedSpace& space) {
    json witness = json::array();
    for (WordIndex w : r.witness) witness.push_back(space.format_word(w));
    return json{{"status", to_string(r.status)},
                {"value", r.best_value},
                {"upper_bound", r.upper_bound},
                {"witness", std::move(witness)},
                {"elapsed_seconds", r.elapsed_seconds},
                {"nodes", r.node_count}};
}

json to_json(const VerifyReport& r, const MixedSpace& space) {
    json violations = json::array();
    for (const ViolatingPair& v : r.violations)
        violations.push_back(json{{"a", space.format_word(v.a)},
                                  {"b", space.format_word(v.b)},
                                  {"distance", v.distance}});
    json min_dist;
    if (r.min_dist) min_dist = *r.min_dist;
    return json{{"cardinality", r.cardinality},
                {"min_distance", std::move(min_dist)},
                {"required_d", r.required_d},
                {"pass", r.pass},
                {"violations", std::move(violations)}};
}

json to_json(const TableReport& r) {
    json checks = json::array();
    for (const TableCheck& c : r.checks)
        checks.push_back(json{{"label", c.label},
                              {"expected", c.expected},
                              {"got", c.got},
                              {"pass", c.pass},
                              {"seconds", c.seconds}});
    return json{{"checks", std::move(checks)},
                {"all_pass", r.all_pass},
                {"total_seconds", r.total_seconds}};
}

json to_json(const BoundLedger& ledger) {
    json entries = json::array();
    for (const auto& [key, e] : ledger.entries()) {
        json entry{{"space", key.first},
                   {"d", key.second},
                   {"lower", e.lower},
                   {"provenance", e.provenance}};
        if (e.upper != kNoBound) entry["upper"] = e.upper;
        entries.push_back(std::move(entry));
    }
    return json{{"entries", std::move(entries)}};
}

} // namespace hampack
