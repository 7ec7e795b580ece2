#include "hampack/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "hampack/branch.hpp"
#include "hampack/model.hpp"

namespace hampack {

namespace {

constexpr ReferenceRow kRowsD3[] = {
    {"N(4,1;3)", "2^4,3^1", 3, 6, 4, "00000", "00111"},
    {"N(2,3;3)", "2^2,3^3", 3, 9, 8, "00000", "00111"},
    {"N_2,4(4,1;3)", "2^4,4^1", 3, 8, 5, "00000", "00111"},
    {"N(2,2,1;3)", "2^2,3^2,4^1", 3, 11, 9, "00000", "00111"},
    {"N_2,5(4,1;3)", "2^4,5^1", 3, 8, 5, "00000", "00111"},
    {"N_2,3,5(2,2,1;3)", "2^2,3^2,5^1", 3, 12, 11, "00000", "00111"},
    {"N_2,6(4,1;3)", "2^4,6^1", 3, 8, 5, "00000", "00111"},
    {"N_2,7(4,1;3)", "2^4,7^1", 3, 8, 5, "00000", "00111"},
};

constexpr ReferenceRow kRowsD4[] = {
    {"N(3,2;4)", "2^3,3^2", 4, 3, 2, "00000", "01111"},
    {"N(3,1,1;4)", "2^3,3^1,4^1", 4, 3, 2, "00000", "01111"},
    {"N(2,2,1;4)", "2^2,3^2,4^1", 4, 4, 3, "00000", "01111"},
    {"N_2,4(3,2;4)", "2^3,4^2", 4, 4, 2, "00000", "01111"},
    {"N_2,3,5(3,1,1;4)", "2^3,3^1,5^1", 4, 3, 2, "00000", "01111"},
    {"N_2,3,5(2,2,1;4)", "2^2,3^2,5^1", 4, 4, 3, "00000", "01111"},
    {"N_2,3,5(1,3,1;4)", "2^1,3^3,5^1", 4, 5, 4, "00000", "01111"},
    {"N_2,4,5(3,1,1;4)", "2^3,4^1,5^1", 4, 4, 2, "00000", "01111"},
    {"N_2,5(3,2;4)", "2^3,5^2", 4, 4, 2, "00000", "01111"},
    {"N_2,3,6(3,1,1;4)", "2^3,3^1,6^1", 4, 3, 2, "00000", "01111"},
    {"N_2,3,6(2,2,1;4)", "2^2,3^2,6^1", 4, 4, 3, "00000", "01111"},
    {"N_2,3,6(1,3,1;4)", "2^1,3^3,6^1", 4, 6, 4, "00000", "01111"},
    {"N_2,4,6(3,1,1;4)", "2^3,4^1,6^1", 4, 4, 2, "00000", "01111"},
    {"N_2,5,6(3,1,1;4)", "2^3,5^1,6^1", 4, 4, 2, "00000", "01111"},
    {"N_2,6(3,2;4)", "2^3,6^2", 4, 4, 2, "00000", "01111"},
    {"N_2,3,7(3,1,1;4)", "2^3,3^1,7^1", 4, 3, 2, "00000", "01111"},
    {"N_2,3,7(2,2,1;4)", "2^2,3^2,7^1", 4, 4, 3, "00000", "01111"},
    {"N_2,3,7(1,3,1;4)", "2^1,3^3,7^1", 4, 6, 4, "00000", "01111"},
    {"N_3,7(4,1;4)", "3^4,7^1", 4, 7, 6, "00000", "01111"},
    {"N_2,4,7(3,1,1;4)", "2^3,4^1,7^1", 4, 4, 2, "00000", "01111"},
    {"N_3,8(4,1;4)", "3^4,8^1", 4, 8, 6, "00000", "01111"},
    {"N_3,9(4,1;4)", "3^4,9^1", 4, 9, 6, "00000", "01111"},
};

constexpr ReferenceAnchor kAnchors[] = {
    {7, 1, 3, 26},
    {4, 3, 3, 28},
};

constexpr ReferenceCell kCells[] = {
    // d = 3
    {7, 1, 3, 26},
    {4, 3, 3, 28},
    {8, 1, 3, 52},
    {9, 1, 3, 104},
    {10, 1, 3, 208},
    {6, 2, 3, 39},
    {7, 2, 3, 78},
    {5, 3, 3, 56},
    {6, 3, 3, 112},
    {7, 3, 3, 224},
    {3, 4, 3, 42},
    {4, 4, 3, 84},
    {2, 5, 3, 63},
    // d = 4
    {7, 2, 4, 26},
    {4, 4, 4, 28},
    {8, 2, 4, 52},
    {9, 2, 4, 104},
    {10, 2, 4, 208},
    {6, 3, 4, 39},
    {7, 3, 4, 78},
    {5, 4, 4, 56},
    {6, 4, 4, 112},
    {3, 5, 4, 42},
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_rows(std::span<const ReferenceRow> rows, const SolveBudget& per_solve,
                const SolveOptions& options, TableReport& report) {
    for (const ReferenceRow& row : rows) {
        auto t0 = std::chrono::steady_clock::now();
        MixedSpace space = MixedSpace::parse(row.spec);

        SolveResult unconstrained = packing_number(space, row.d, per_solve, options);
        PackingModel full = build_full(space, row.d, options.threads);
        WordIndex forced[2] = {space.parse_word(row.forced_a),
                               space.parse_word(row.forced_b)};
        SolveResult pinned = solve_forced(full, forced, per_solve, options);

        TableCheck check;
        check.label = row.name;
        check.expected = "(" + std::to_string(row.optimum) + "," +
                         std::to_string(row.forced_optimum) + ")";
        std::string status;
        if (unconstrained.status != SolveStatus::optimal ||
            pinned.status != SolveStatus::optimal)
            status = " [" + std::string(to_string(unconstrained.status)) + "/" +
                     to_string(pinned.status) + "]";
        check.got = "(" + std::to_string(unconstrained.best_value) + "," +
                    std::to_string(pinned.best_value) + ")" + status;
        check.pass = unconstrained.status == SolveStatus::optimal &&
                     pinned.status == SolveStatus::optimal &&
                     unconstrained.best_value == row.optimum &&
                     pinned.best_value == row.forced_optimum;
        check.seconds = seconds_since(t0);
        report.checks.push_back(std::move(check));
    }
}

} // namespace

std::span<const ReferenceRow> reference_rows_d3() { return kRowsD3; }
std::span<const ReferenceRow> reference_rows_d4() { return kRowsD4; }
std::span<const ReferenceAnchor> reference_anchors() { return kAnchors; }
std::span<const ReferenceCell> reference_upper_bounds() { return kCells; }

TableReport reproduce_tables(const SolveBudget& per_solve, const SolveOptions& options) {
    auto t0 = std::chrono::steady_clock::now();
    TableReport report;
    check_rows(reference_rows_d3(), per_solve, options, report);
    check_rows(reference_rows_d4(), per_solve, options, report);

    // grid cells from the anchors alone
    auto tp = std::chrono::steady_clock::now();
    BoundLedger ledger;
    for (const ReferenceAnchor& a : reference_anchors()) {
        ledger.record_lower(bt_spec(a.b, a.t), a.d, a.value, "anchor");
        ledger.record_upper(bt_spec(a.b, a.t), a.d, a.value, "anchor");
    }
    propagate_bounds(ledger, rule_table(), PropagationGrid{});
    double prop_seconds = seconds_since(tp);
    for (const ReferenceCell& cell : reference_upper_bounds()) {
        TableCheck check;
        check.label = "N(" + std::to_string(cell.b) + "," + std::to_string(cell.t) +
                      ";" + std::to_string(cell.d) + ") upper";
        check.expected = std::to_string(cell.upper);
        const LedgerEntry* e = ledger.find(bt_spec(cell.b, cell.t), cell.d);
        check.got = (e && e->upper != kNoBound) ? std::to_string(e->upper) : "none";
        check.pass = e && e->upper == cell.upper;
        check.seconds = prop_seconds / std::size(kCells);
        report.checks.push_back(std::move(check));
    }

    for (const TableCheck& check : report.checks) report.all_pass &= check.pass;
    report.total_seconds = seconds_since(t0);
    return report;
}

std::string format_report(const TableReport& report) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const TableCheck& c : report.checks) width = std::max(width, c.label.size());
    for (const TableCheck& c : report.checks) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.label
            << std::string(width - c.label.size() + 2, ' ') << "expected " << c.expected
            << "  got " << c.got;
        char buf[32];
        std::snprintf(buf, sizeof buf, "  %.2fs", c.seconds);
        out << buf << "\n";
    }
    out << (report.all_pass ? "all checks passed" : "CHECK FAILURES PRESENT");
    char buf[48];
    std::snprintf(buf, sizeof buf, " (%.1fs total)\n", report.total_seconds);
    out << buf;
    return out.str();
}

} // namespace hampack
