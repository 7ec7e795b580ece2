#pragma once

#include <span>
#include <string>
#include <vector>

#include "hampack/bounds.hpp"
#include "hampack/solver.hpp"
#include "hampack/space.hpp"

namespace hampack {

// Known packing optima for small mixed spaces, with the optimum under a
// canonically forced contact pair.
struct ReferenceRow {
    const char* name;          // N-notation label
    const char* spec;          // space spec string
    int d;
    int optimum;
    int forced_optimum;
    const char* forced_a;
    const char* forced_b;
};

std::span<const ReferenceRow> reference_rows_d3();
std::span<const ReferenceRow> reference_rows_d4();

// Exact anchors feeding the bound propagation.
struct ReferenceAnchor {
    int b, t, d;
    long long value;
};
std::span<const ReferenceAnchor> reference_anchors();

// Best known upper bounds on the binary/ternary grid derivable from the
// anchors by the propagation rules.
struct ReferenceCell {
    int b, t, d;
    long long upper;
};
std::span<const ReferenceCell> reference_upper_bounds();

struct TableCheck {
    std::string label;
    std::string expected;
    std::string got;
    bool pass = false;
    double seconds = 0;
};

struct TableReport {
    std::vector<TableCheck> checks;
    bool all_pass = true;
    double total_seconds = 0;
};

// Recomputes every reference row with the internal solver (branch
// decomposition for the optimum, pinned full model for the forced column) and
// re-derives every grid cell from the anchors alone. Mismatches are reported,
// never swallowed.
TableReport reproduce_tables(const SolveBudget& per_solve = {},
                             const SolveOptions& options = {});

std::string format_report(const TableReport& report);

} // namespace hampack
