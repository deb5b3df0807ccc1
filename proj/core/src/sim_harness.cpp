#include "mcran/sim_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "mcran/conflict_graph.hpp"
#include "mcran/mwis_solver.hpp"
#include "random.hpp"

namespace mcran {

namespace {

std::string format_real(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

TrialResult solve_trial(const UtilityTensor& tensor, CoordinationMode mode, SolverKind solver,
                        std::size_t local_search_passes) {
    const ConflictGraph graph = build_graph(mode, tensor, tensor.dims);
    const SolveReport report =
        solver == SolverKind::Exact ? solve_exact(graph) : solve_greedy(graph, local_search_passes);
    TrialResult result;
    result.mode = mode;
    result.solver = solver;
    result.feasible = report.feasible();
    result.sum_rate = report.feasible() ? report.schedule.total_weight : 0.0;
    result.solver_nodes = report.nodes_explored;
    return result;
}

}  // namespace

std::string_view to_string(SolverKind solver) noexcept { return solver == SolverKind::Exact ? "exact" : "greedy"; }

std::optional<SolverKind> parse_solver(std::string_view text) noexcept {
    if (text == "exact") return SolverKind::Exact;
    if (text == "greedy") return SolverKind::Greedy;
    return std::nullopt;
}

std::string_view to_string(SweepParameter param) noexcept {
    switch (param) {
    case SweepParameter::U: return "U";
    case SweepParameter::Z: return "Z";
    case SweepParameter::B: return "B";
    case SweepParameter::C: return "C";
    }
    return "?";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view text) noexcept {
    for (auto p : {SweepParameter::U, SweepParameter::Z, SweepParameter::B, SweepParameter::C})
        if (to_string(p) == text) return p;
    return std::nullopt;
}

void SweepSpec::validate() const {
    base_config.validate();
    if (sweep_values.empty()) throw std::invalid_argument("sweep_values must not be empty");
    for (std::size_t i = 0; i < sweep_values.size(); ++i) {
        if (sweep_values[i] == 0) throw std::invalid_argument("sweep_values must be positive");
        if (i > 0 && sweep_values[i] <= sweep_values[i - 1])
            throw std::invalid_argument("sweep_values must be strictly increasing");
    }
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    if (modes.empty()) throw std::invalid_argument("modes must not be empty");
    if (users_per_cloud && swept_parameter == SweepParameter::C &&
        base_config.dims.users % base_config.dims.clouds != 0)
        throw std::invalid_argument("users_per_cloud needs num_users divisible by num_clouds");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t point, std::uint64_t trial) noexcept {
    return detail::mix64(detail::mix64(detail::mix64(base_seed) ^ point) ^ trial);
}

TrialResult run_trial(const NetworkConfig& config, CoordinationMode mode, SolverKind solver, std::uint64_t seed,
                      std::size_t local_search_passes) {
    NetworkConfig seeded = config;
    seeded.rng_seed = seed;
    const UtilityTensor tensor = utility_tensor(generate_instance(seeded));
    TrialResult result = solve_trial(tensor, mode, solver, local_search_passes);
    result.seed_used = seed;
    return result;
}

NetworkConfig config_at_point(const SweepSpec& spec, std::uint64_t value) {
    NetworkConfig config = spec.base_config;
    Dimensions& d = config.dims;
    switch (spec.swept_parameter) {
    case SweepParameter::U: d.users = value; break;
    case SweepParameter::Z: d.pz_per_bs = value; break;
    case SweepParameter::B: d.bs_per_cloud = value; break;
    case SweepParameter::C:
        if (spec.users_per_cloud) d.users = value * (spec.base_config.dims.users / spec.base_config.dims.clouds);
        d.clouds = value;
        break;
    }
    return config;
}

std::vector<TrialResult> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<CoordinationMode> modes;
    for (auto mode : kAllModes)
        if (std::find(spec.modes.begin(), spec.modes.end(), mode) != spec.modes.end()) modes.push_back(mode);

    const std::size_t jobs = spec.sweep_values.size() * spec.trials;
    std::vector<TrialResult> results(jobs * modes.size());

    auto run_job = [&](std::size_t job) {
        const std::uint64_t point = spec.sweep_values[job / spec.trials];
        const std::size_t trial = job % spec.trials;
        NetworkConfig config = config_at_point(spec, point);
        config.rng_seed = derive_seed(spec.base_config.rng_seed, point, trial);
        const UtilityTensor tensor = utility_tensor(generate_instance(config));
        for (std::size_t m = 0; m < modes.size(); ++m) {
            TrialResult r = solve_trial(tensor, modes[m], spec.solver, spec.local_search_passes);
            r.point = point;
            r.trial = trial;
            r.seed_used = config.rng_seed;
            results[job * modes.size() + m] = r;
        }
    };

    std::size_t threads = spec.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : spec.threads;
    threads = std::min(threads, jobs);
    if (threads <= 1) {
        for (std::size_t job = 0; job < jobs; ++job) run_job(job);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t job = next++; job < jobs; job = next++) run_job(job);
        });
    }
    for (auto& w : workers) w.join();
    return results;
}

std::vector<SummaryRow> summarize(const std::vector<TrialResult>& results) {
    using Key = std::tuple<std::uint64_t, int, int>;
    std::map<Key, std::vector<const TrialResult*>> groups;
    for (const auto& r : results)
        groups[{r.point, static_cast<int>(r.mode), static_cast<int>(r.solver)}].push_back(&r);

    std::vector<SummaryRow> rows;
    for (const auto& [key, members] : groups) {
        SummaryRow row;
        row.point = std::get<0>(key);
        row.mode = static_cast<CoordinationMode>(std::get<1>(key));
        row.solver = static_cast<SolverKind>(std::get<2>(key));
        row.trials = members.size();
        double sum = 0.0;
        for (const auto* r : members) {
            if (!r->feasible) continue;
            ++row.feasible;
            sum += r->sum_rate;
        }
        if (row.feasible > 0) row.mean = sum / static_cast<double>(row.feasible);
        if (row.feasible > 1) {
            double squares = 0.0;
            for (const auto* r : members)
                if (r->feasible) squares += (r->sum_rate - row.mean) * (r->sum_rate - row.mean);
            row.stddev = std::sqrt(squares / static_cast<double>(row.feasible - 1));
        }
        rows.push_back(row);
    }
    return rows;
}

void emit_csv(std::ostream& out, SweepParameter param, const std::vector<TrialResult>& results) {
    out << "sweep_param,point,trial,mode,feasible,sum_rate_bps_hz,solver,nodes,seed\n";
    for (const auto& r : results) {
        out << to_string(param) << ',' << r.point << ',' << r.trial << ',' << to_string(r.mode) << ','
            << (r.feasible ? "true" : "false") << ',' << (r.feasible ? format_real(r.sum_rate) : "") << ','
            << to_string(r.solver) << ',' << r.solver_nodes << ',' << r.seed_used << '\n';
    }
    if (!out) throw std::runtime_error("emit_csv: output stream is not writable");
}

void emit_summary_csv(std::ostream& out, SweepParameter param, const std::vector<SummaryRow>& rows) {
    out << "sweep_param,point,mode,solver,trials,n_feasible,mean_sum_rate_bps_hz,stddev_sum_rate_bps_hz\n";
    for (const auto& row : rows) {
        out << to_string(param) << ',' << row.point << ',' << to_string(row.mode) << ',' << to_string(row.solver)
            << ',' << row.trials << ',' << row.feasible << ',' << format_real(row.mean) << ','
            << format_real(row.stddev) << '\n';
    }
    if (!out) throw std::runtime_error("emit_summary_csv: output stream is not writable");
}

}  // namespace mcran
