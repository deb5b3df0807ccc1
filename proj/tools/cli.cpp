#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "mcran/config_io.hpp"
#include "mcran/conflict_graph.hpp"
#include "mcran/mwis_solver.hpp"
#include "mcran/network_model.hpp"
#include "mcran/oracle.hpp"

namespace mcran::cli {

namespace {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

NetworkConfig load_config(const std::string& path, const std::optional<std::uint64_t>& seed) {
    NetworkConfig config = load_network_config(path);
    if (seed) config.rng_seed = *seed;
    return config;
}

ConflictGraph graph_for(const NetworkConfig& config, CoordinationMode mode) {
    return build_graph(mode, utility_tensor(generate_instance(config)), config.dims);
}

// Output files are written to memory first so a failed run leaves no partial
// file behind.
void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    file << content;
    if (!file.flush()) throw std::runtime_error("cannot write '" + path + "'");
}

int run_solve(const SolveCommand& cmd, std::ostream& out) {
    const NetworkConfig config = load_config(cmd.config_path, cmd.seed);
    const ConflictGraph graph = graph_for(config, cmd.mode);
    const SolveReport report =
        cmd.solver == SolverKind::Exact ? solve_exact(graph) : solve_greedy(graph, cmd.local_search_passes);
    if (!report.feasible()) {
        out << "infeasible: U < C·B\n";
        return kInfeasible;
    }
    for (const auto& a : report.schedule.associations) {
        out << a.cloud << ' ' << a.user << ' ' << a.bs << ' ' << a.pz << ' ' << format_real(graph.weight(graph.index_of(a)))
            << '\n';
    }
    out << "total_sum_rate " << format_real(report.schedule.total_weight) << '\n';
    out << "mode " << to_string(cmd.mode) << " solver " << to_string(cmd.solver) << " nodes "
        << report.nodes_explored << '\n';
    return kOk;
}

int run_verify(const VerifyCommand& cmd, std::ostream& out) {
    const NetworkConfig config = load_config(cmd.config_path, cmd.seed);
    const UtilityTensor tensor = utility_tensor(generate_instance(config));
    bool all_passed = true;
    for (auto mode : kAllModes) {
        const ConflictGraph graph = build_graph(mode, tensor, config.dims);
        const auto report = oracle::check_equivalence(graph, cmd.cap);
        all_passed = all_passed && report.passed();
        out << to_string(mode) << ' ' << (report.passed() ? "PASS" : "FAIL") << " feasible=" << report.feasible_count
            << " independent_sets=" << report.independent_count
            << " optimum=" << (report.optimum ? format_real(*report.optimum) : std::string("infeasible")) << '\n';
    }
    return all_passed ? kOk : kVerificationFailed;
}

int run_count(const CountSetsCommand& cmd, std::ostream& out) {
    const NetworkConfig config = load_config(cmd.config_path, cmd.seed);
    out << oracle::count_feasible({cmd.mode, config.dims, cmd.cap}) << '\n';
    return kOk;
}

int run_sweep_command(const SweepCommand& cmd, std::ostream& out) {
    SweepSpec spec = load_sweep_spec(cmd.spec_path);
    if (cmd.seed) spec.base_config.rng_seed = *cmd.seed;
    const auto results = run_sweep(spec);
    std::ostringstream rows;
    emit_csv(rows, spec.swept_parameter, results);
    std::ostringstream summary;
    emit_summary_csv(summary, spec.swept_parameter, summarize(results));
    write_file(cmd.out_path, rows.str());
    write_file(summary_path(cmd.out_path), summary.str());
    const auto infeasible = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.feasible; });
    out << "wrote " << results.size() << " results (" << infeasible << " infeasible) to " << cmd.out_path << '\n';
    return kOk;
}

int run_export(const ExportGraphCommand& cmd, std::ostream& out) {
    const NetworkConfig config = load_config(cmd.config_path, cmd.seed);
    const ConflictGraph graph = graph_for(config, cmd.mode);
    std::ostringstream text;
    write_edge_list(graph, text);
    write_file(cmd.out_path, text.str());
    out << "wrote " << graph.vertex_count() << " vertices and " << graph.edge_count() << " edges to " << cmd.out_path
        << '\n';
    return kOk;
}

const std::vector<std::string> kModeNames{"hybrid", "signal", "sched"};
const std::vector<std::string> kSolverNames{"exact", "greedy"};

}  // namespace

std::string summary_path(const std::string& path) {
    const std::filesystem::path p(path);
    return (p.parent_path() / (p.stem().string() + "_summary" + p.extension().string())).string();
}

ParseResult parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coordinated scheduling for multi-cloud radio access networks", "mcran"};
    app.require_subcommand(1);

    SolveCommand solve;
    VerifyCommand verify;
    CountSetsCommand count;
    SweepCommand sweep;
    ExportGraphCommand export_graph;
    std::uint64_t seed = 0;
    std::string mode = "hybrid";
    std::string solver = "exact";

    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print the schedule");
    solve_cmd->add_option("config", solve.config_path, "Network configuration file")->required();
    solve_cmd->add_option("--mode", mode, "hybrid|signal|sched")->check(CLI::IsMember(kModeNames));
    solve_cmd->add_option("--solver", solver, "exact|greedy")->check(CLI::IsMember(kSolverNames));
    solve_cmd->add_option("--passes", solve.local_search_passes, "Local search passes for the greedy solver");
    auto* solve_seed = solve_cmd->add_option("--seed", seed, "Overrides rng_seed from the file");

    auto* verify_cmd = app.add_subcommand("verify", "Check oracle against conflict graph for all modes");
    verify_cmd->add_option("config", verify.config_path, "Network configuration file")->required();
    verify_cmd->add_option("--cap", verify.cap, "Maximum number of C*B*Z slots to enumerate");
    auto* verify_seed = verify_cmd->add_option("--seed", seed, "Overrides rng_seed from the file");

    auto* count_cmd = app.add_subcommand("count", "Count feasible schedules by enumeration");
    count_cmd->add_option("config", count.config_path, "Network configuration file")->required();
    count_cmd->add_option("--mode", mode, "hybrid|signal|sched")->check(CLI::IsMember(kModeNames));
    count_cmd->add_option("--cap", count.cap, "Maximum number of C*B*Z slots to enumerate");
    auto* count_seed = count_cmd->add_option("--seed", seed, "Overrides rng_seed from the file");

    auto* sweep_cmd = app.add_subcommand("sweep", "Run a Monte Carlo sweep and write CSV files");
    sweep_cmd->add_option("spec", sweep.spec_path, "Sweep specification file")->required();
    sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path")->required();
    auto* sweep_seed = sweep_cmd->add_option("--seed", seed, "Overrides rng_seed from the file");

    auto* export_cmd = app.add_subcommand("export-graph", "Write the conflict graph as an edge list");
    export_cmd->add_option("config", export_graph.config_path, "Network configuration file")->required();
    export_cmd->add_option("--mode", mode, "hybrid|signal|sched")->check(CLI::IsMember(kModeNames));
    export_cmd->add_option("--out", export_graph.out_path, "Output path")->required();
    auto* export_seed = export_cmd->add_option("--seed", seed, "Overrides rng_seed from the file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    // Values were checked against the name lists above.
    solve.mode = count.mode = export_graph.mode = *parse_mode(mode);
    solve.solver = *parse_solver(solver);
    auto seed_if = [&](CLI::Option* opt) { return opt->count() > 0 ? std::optional<std::uint64_t>(seed) : std::nullopt; };
    if (solve_cmd->parsed()) {
        solve.seed = seed_if(solve_seed);
        return Command{solve};
    }
    if (verify_cmd->parsed()) {
        verify.seed = seed_if(verify_seed);
        return Command{verify};
    }
    if (count_cmd->parsed()) {
        count.seed = seed_if(count_seed);
        return Command{count};
    }
    if (sweep_cmd->parsed()) {
        sweep.seed = seed_if(sweep_seed);
        return Command{sweep};
    }
    export_graph.seed = seed_if(export_seed);
    return Command{export_graph};
}

int run(const Command& command, std::ostream& out, std::ostream& err) {
    try {
        return std::visit(
            [&](const auto& cmd) -> int {
                using T = std::decay_t<decltype(cmd)>;
                if constexpr (std::is_same_v<T, SolveCommand>) return run_solve(cmd, out);
                else if constexpr (std::is_same_v<T, VerifyCommand>) return run_verify(cmd, out);
                else if constexpr (std::is_same_v<T, CountSetsCommand>) return run_count(cmd, out);
                else if constexpr (std::is_same_v<T, SweepCommand>) return run_sweep_command(cmd, out);
                else return run_export(cmd, out);
            },
            command);
    } catch (const std::exception& e) {
        // ConfigError, oracle::CapExceeded, unwritable outputs.
        err << "error: " << e.what() << '\n';
    }
    return kInputError;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const ParseResult parsed = parse(args, out, err);
    if (const int* status = std::get_if<int>(&parsed)) return *status;
    return run(std::get<Command>(parsed), out, err);
}

}  // namespace mcran::cli
