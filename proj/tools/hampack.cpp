#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hampack/branch.hpp"
#include "hampack/bounds.hpp"
#include "hampack/code.hpp"
#include "hampack/json_io.hpp"
#include "hampack/model.hpp"
#include "hampack/solver.hpp"
#include "hampack/tables.hpp"

namespace {

using namespace hampack;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

SolveBudget make_budget(double seconds) {
    SolveBudget b;
    if (seconds > 0) b.wall_seconds = seconds;   // 0 requests an unbounded run
    return b;
}

SolveOptions make_options(int threads) {
    SolveOptions o;
    o.threads = threads;
    o.progress = [](const SolveProgress& p) {
        std::fprintf(stderr, "  ... %llu nodes, incumbent %d, bound %d, %.1fs\n",
                     static_cast<unsigned long long>(p.nodes), p.best, p.upper_bound,
                     p.elapsed_seconds);
    };
    return o;
}

std::vector<WordIndex> parse_word_list(const MixedSpace& space, const std::string& arg) {
    std::vector<WordIndex> out;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
        std::size_t comma = arg.find(',', pos);
        std::string w = arg.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (!w.empty()) out.push_back(space.parse_word(w));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void print_solve(const MixedSpace& space, const SolveResult& r, int branches) {
    std::printf("status      %s\n", to_string(r.status));
    std::printf("value       %d\n", r.best_value);
    std::printf("upper bound %d\n", r.upper_bound);
    if (branches >= 0) std::printf("branches    %d\n", branches);
    std::printf("nodes       %llu\n", static_cast<unsigned long long>(r.node_count));
    std::printf("elapsed     %.3fs\n", r.elapsed_seconds);
    if (!r.witness.empty()) {
        std::printf("witness     ");
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            std::printf("%s%s", i ? " " : "", space.format_word(r.witness[i]).c_str());
        std::printf("\n");
    }
    nlohmann::json j = to_json(r, space);
    j["space"] = space.spec_string();
    std::printf("%s\n", j.dump().c_str());
}

int exit_code(const SolveResult& r) {
    return r.status == SolveStatus::optimal ? kExitOk : kExitBudget;
}

int run(int argc, char** argv) {
    CLI::App app{"mixed Hamming packing toolkit"};
    app.require_subcommand(1);

    std::string space_spec, second_word, profile_spec, model_name = "full";
    std::string format_name = "lp", code_path, solution_path, out_path, anchors_path;
    std::string force_list, rules_list = "ii,iv,vi", grid_spec = "10x5";
    double budget_seconds = 0;
    int d = 0, threads = 0, known_lower = 0, dmin = 3, dmax = 4;
    std::optional<std::uint64_t> seed;

    auto add_space = [&](CLI::App* cmd) {
        cmd->add_option("--space", space_spec, "space spec, e.g. 2^7,3^1")->required();
        cmd->add_option("-d", d, "minimum distance")->required();
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "packing number of a space");
    add_space(solve_cmd);
    solve_cmd->add_option("--budget", budget_seconds, "wall budget in seconds, 0 = unbounded");
    solve_cmd->add_option("--threads", threads, "solver threads, 0 = all cores");
    solve_cmd->add_option("--force", force_list, "comma-separated words pinned to 1");

    CLI::App* emit_cmd = app.add_subcommand("emit", "write a model file");
    add_space(emit_cmd);
    emit_cmd->add_option("--model", model_name, "full|zero|reduced|pair|forbid");
    emit_cmd->add_option("--second", second_word, "second fixed word (pair model)");
    emit_cmd->add_option("--profile", profile_spec,
                         "forbidden contact profile m_s,...,m_1 (forbid model)");
    emit_cmd->add_option("--format", format_name, "lp|mps");
    emit_cmd->add_option("-o", out_path, "output path")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a code file");
    add_space(verify_cmd);
    verify_cmd->add_option("--code", code_path, "code file, one word per line");
    verify_cmd->add_option("--solution", solution_path,
                           "solver output with x_<word> = <value> lines");

    CLI::App* connectify_cmd =
        app.add_subcommand("connectify", "rebuild a packing with connected contact graph");
    add_space(connectify_cmd);
    connectify_cmd->add_option("--code", code_path)->required();
    connectify_cmd->add_option("-o", out_path, "output code file")->required();
    connectify_cmd->add_option("--seed", seed, "draw the seed word at random");

    CLI::App* branches_cmd = app.add_subcommand("branches", "canonical second words");
    add_space(branches_cmd);

    CLI::App* audit_cmd =
        app.add_subcommand("audit", "test whether a branch profile is unavoidable");
    add_space(audit_cmd);
    audit_cmd->add_option("--profile", profile_spec, "profile m_s,...,m_1")->required();
    audit_cmd->add_option("--known-lower", known_lower, "known packing cardinality")
        ->required();
    audit_cmd->add_option("--budget", budget_seconds, "wall budget in seconds, 0 = unbounded");
    audit_cmd->add_option("--threads", threads);
    audit_cmd->add_option("--emit", out_path, "also write the forbidding model (LP)");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "propagate upper bounds");
    bounds_cmd->add_option("--anchors", anchors_path, "anchor file")->required();
    bounds_cmd->add_option("--rules", rules_list, "comma-separated rule names");
    bounds_cmd->add_option("--grid", grid_spec, "grid extent BxT, e.g. 10x5");
    bounds_cmd->add_option("--dmin", dmin);
    bounds_cmd->add_option("--dmax", dmax);
    bounds_cmd->add_option("-o", out_path, "write the ledger as JSON");

    CLI::App* tables_cmd = app.add_subcommand("tables", "reproduce the reference tables");
    tables_cmd->add_option("--budget", budget_seconds, "per-row budget in seconds");
    tables_cmd->add_option("--threads", threads);

    CLI11_PARSE(app, argc, argv);

    if (solve_cmd->parsed()) {
        MixedSpace space = MixedSpace::parse(space_spec);
        SolveOptions options = make_options(threads);
        SolveResult r;
        int branch_count = -1;
        if (!force_list.empty()) {
            std::vector<WordIndex> forced = parse_word_list(space, force_list);
            PackingModel model = build_full(space, d, threads);
            r = solve_forced(model, forced, make_budget(budget_seconds), options);
            if (r.status == SolveStatus::infeasible) {
                std::fprintf(stderr, "forced words are mutually infeasible at d=%d\n", d);
                return kExitUsage;
            }
        } else {
            branch_count = int(enumerate_branches(space, d).size());
            r = packing_number(space, d, make_budget(budget_seconds), options);
        }
        print_solve(space, r, branch_count);
        return exit_code(r);
    }

    if (emit_cmd->parsed()) {
        MixedSpace space = MixedSpace::parse(space_spec);
        PackingModel model;
        if (model_name == "full") {
            model = build_full(space, d, threads);
        } else if (model_name == "zero") {
            model = build_zero_fixed(space, d, threads);
        } else if (model_name == "reduced") {
            model = build_reduced(space, d, threads);
        } else if (model_name == "pair") {
            if (second_word.empty()) throw CLI::ValidationError("pair model needs --second");
            model = build_pair(space, d, space.parse_word(second_word), threads);
        } else if (model_name == "forbid") {
            if (profile_spec.empty())
                throw CLI::ValidationError("forbid model needs --profile");
            model = build_profile_forbidding(space, d, parse_profile(space, profile_spec),
                                             threads);
        } else {
            throw CLI::ValidationError("unknown model '" + model_name + "'");
        }
        EmitFormat format;
        if (format_name == "lp")
            format = EmitFormat::lp;
        else if (format_name == "mps")
            format = EmitFormat::mps;
        else
            throw CLI::ValidationError("unknown format '" + format_name + "'");
        std::size_t bytes = emit_file(model, format, out_path);
        ModelStats stats = model_stats(model);
        std::printf("wrote %s: %zu bytes, %zu free variables, %zu conflicts\n",
                    out_path.c_str(), bytes, stats.free_count, stats.conflict_count);
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        MixedSpace space = MixedSpace::parse(space_spec);
        Code code;
        if (!code_path.empty()) {
            code = read_code_file(space, code_path);
        } else if (!solution_path.empty()) {
            std::ifstream in(solution_path);
            if (!in) throw std::runtime_error("cannot open " + solution_path);
            code = Code(space, parse_solution_text(space, in));
        } else {
            throw CLI::ValidationError("verify needs --code or --solution");
        }
        VerifyReport rep = verify(code, d);
        std::printf("cardinality  %zu\n", rep.cardinality);
        if (rep.min_dist) std::printf("min distance %d\n", *rep.min_dist);
        std::printf("verdict      %s\n", rep.pass ? "pass" : "FAIL");
        for (const ViolatingPair& v : rep.violations)
            std::printf("  violation: %s %s at distance %d\n",
                        space.format_word(v.a).c_str(), space.format_word(v.b).c_str(),
                        v.distance);
        nlohmann::json j = to_json(rep, space);
        j["space"] = space.spec_string();
        std::printf("%s\n", j.dump().c_str());
        return rep.pass ? kExitOk : kExitUsage;
    }

    if (connectify_cmd->parsed()) {
        MixedSpace space = MixedSpace::parse(space_spec);
        Code code = read_code_file(space, code_path);
        ConnectifyStats stats;
        Code out = seed ? connectify_seeded(code, d, *seed, &stats)
                        : connectify(code, d, &stats);
        write_code_file(out, out_path);
        ContactGraph g = contact_graph(out, d);
        std::printf("wrote %s: %zu words, contact graph %s, %d absorbed, %d swaps\n",
                    out_path.c_str(), out.size(),
                    is_connected(g) ? "connected" : "DISCONNECTED", stats.absorbed,
                    stats.swaps);
        return kExitOk;
    }

    if (branches_cmd->parsed()) {
        MixedSpace space = MixedSpace::parse(space_spec);
        auto branches = enumerate_branches(space, d);
        nlohmann::json arr = nlohmann::json::array();
        for (const BranchSpec& b : branches) {
            std::printf("profile %-12s second %s\n",
                        format_profile(space, b.profile).c_str(),
                        space.format_word(b.second).c_str());
            arr.push_back({{"profile", format_profile(space, b.profile)},
                           {"second", space.format_word(b.second)}});
        }
        std::printf("%s\n", arr.dump().c_str());
        return kExitOk;
    }

    if (audit_cmd->parsed()) {
        MixedSpace space = MixedSpace::parse(space_spec);
        MarginalProfile profile = parse_profile(space, profile_spec);
        if (!out_path.empty()) {
            PackingModel model =
                build_profile_forbidding(space, d, profile, threads);
            emit_file(model, EmitFormat::lp, out_path);
            std::printf("wrote forbidding model to %s\n", out_path.c_str());
        }
        AuditResult res = audit_branch(space, d, profile, known_lower,
                                       make_budget(budget_seconds),
                                       make_options(threads));
        if (res.pigeonhole) {
            std::printf("branch unavoidable by pigeonhole: %d words exceed the number "
                        "of symbol patterns outside the profile block\n",
                        known_lower);
        } else if (res.forbid_solve) {
            const SolveResult& r = *res.forbid_solve;
            std::printf("forbidding model: status %s, value %d, upper bound %d\n",
                        to_string(r.status), r.best_value, r.upper_bound);
        }
        bool unavoidable = res.outcome == AuditOutcome::branch_unavoidable;
        std::printf("outcome: %s\n", unavoidable ? "branch_unavoidable" : "inconclusive");
        return unavoidable ? kExitOk : kExitBudget;
    }

    if (bounds_cmd->parsed()) {
        BoundLedger ledger = read_anchor_file(anchors_path);
        std::vector<std::string> names;
        std::size_t pos = 0;
        while (pos <= rules_list.size()) {
            std::size_t comma = rules_list.find(',', pos);
            names.push_back(rules_list.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        std::vector<BoundRule> rules = rules_by_name(names);
        PropagationGrid grid;
        if (std::sscanf(grid_spec.c_str(), "%dx%d", &grid.bmax, &grid.tmax) != 2)
            throw CLI::ValidationError("bad --grid '" + grid_spec + "', expected BxT");
        grid.dmin = dmin;
        grid.dmax = dmax;
        int updates = propagate_bounds(ledger, rules, grid);
        for (const auto& [key, e] : ledger.entries()) {
            std::string upper = e.upper == kNoBound ? "-" : std::to_string(e.upper);
            std::printf("%-12s d=%d  lower %lld  upper %s  (%s)\n", key.first.c_str(),
                        key.second, e.lower, upper.c_str(), e.provenance.c_str());
        }
        std::printf("%d derived bounds\n", updates);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << to_json(ledger).dump(2) << "\n";
        }
        return kExitOk;
    }

    if (tables_cmd->parsed()) {
        TableReport report =
            reproduce_tables(make_budget(budget_seconds), make_options(threads));
        std::printf("%s", format_report(report).c_str());
        std::printf("%s\n", to_json(report).dump().c_str());
        return report.all_pass ? kExitOk : kExitUsage;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error&) {
        throw;   // handled by CLI11_PARSE
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
