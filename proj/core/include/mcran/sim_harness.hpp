#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "mcran/association.hpp"
#include "mcran/network_model.hpp"

namespace mcran {

enum class SolverKind { Exact, Greedy };
enum class SweepParameter { U, Z, B, C };

[[nodiscard]] std::string_view to_string(SolverKind solver) noexcept;
[[nodiscard]] std::optional<SolverKind> parse_solver(std::string_view text) noexcept;
[[nodiscard]] std::string_view to_string(SweepParameter param) noexcept;
[[nodiscard]] std::optional<SweepParameter> parse_sweep_parameter(std::string_view text) noexcept;

struct SweepSpec {
    NetworkConfig base_config;
    SweepParameter swept_parameter = SweepParameter::U;
    std::vector<std::uint64_t> sweep_values;
    std::size_t trials = 100;
    std::vector<CoordinationMode> modes{std::begin(kAllModes), std::end(kAllModes)};
    SolverKind solver = SolverKind::Exact;
    /// When sweeping C, U becomes value * base users-per-cloud, where the base
    /// users-per-cloud is base_config users / base_config clouds.
    bool users_per_cloud = false;
    std::size_t local_search_passes = 2;
    /// Worker threads; 0 picks the hardware concurrency. Output never depends
    /// on this value.
    std::size_t threads = 0;

    void validate() const;
};

struct TrialResult {
    std::uint64_t point = 0;
    std::size_t trial = 0;
    CoordinationMode mode = CoordinationMode::Hybrid;
    SolverKind solver = SolverKind::Exact;
    bool feasible = false;
    double sum_rate = 0.0;  // bits/s/Hz, 0 when infeasible
    std::uint64_t solver_nodes = 0;
    std::uint64_t seed_used = 0;
};

/// Seed of trial `trial` at sweep point `point`. Independent of the mode so
/// every mode sees the same channel realization.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t point, std::uint64_t trial) noexcept;

/// generate_instance -> utility_tensor -> build_graph -> solve, with `seed`
/// replacing config.rng_seed.
[[nodiscard]] TrialResult run_trial(const NetworkConfig& config, CoordinationMode mode, SolverKind solver,
                                    std::uint64_t seed, std::size_t local_search_passes = 2);

/// Network configuration used at one sweep point.
[[nodiscard]] NetworkConfig config_at_point(const SweepSpec& spec, std::uint64_t value);

/// |sweep_values| * trials * |modes| results ordered by (point, trial, mode),
/// modes in Hybrid, SignalLevel, SchedulingLevel order.
[[nodiscard]] std::vector<TrialResult> run_sweep(const SweepSpec& spec);

struct SummaryRow {
    std::uint64_t point = 0;
    CoordinationMode mode = CoordinationMode::Hybrid;
    SolverKind solver = SolverKind::Exact;
    std::size_t trials = 0;
    std::size_t feasible = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation over feasible trials
};

/// Per (point, mode) aggregates over feasible trials.
[[nodiscard]] std::vector<SummaryRow> summarize(const std::vector<TrialResult>& results);

/// Header `sweep_param,point,trial,mode,feasible,sum_rate_bps_hz,solver,nodes,seed`
/// followed by one row per result; reals use 9 significant digits, and the
/// sum_rate field is left empty for infeasible trials.
void emit_csv(std::ostream& out, SweepParameter param, const std::vector<TrialResult>& results);

/// Header `sweep_param,point,mode,solver,trials,n_feasible,mean_sum_rate_bps_hz,stddev_sum_rate_bps_hz`.
void emit_summary_csv(std::ostream& out, SweepParameter param, const std::vector<SummaryRow>& rows);

}  // namespace mcran
