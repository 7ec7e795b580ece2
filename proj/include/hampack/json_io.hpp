#pragma once

#include <json.hpp>

#include "hampack/bounds.hpp"
#include "hampack/code.hpp"
#include "hampack/solver.hpp"
#include "hampack/tables.hpp"

namespace hampack {

nlohmann::json to_json(const SolveResult& r, const MixedSpace& space);
nlohmann::json to_json(const VerifyReport& r, const MixedSpace& space);
nlohmann::json to_json(const TableReport& r);
nlohmann::json to_json(const BoundLedger& ledger);

} // namespace hampack
