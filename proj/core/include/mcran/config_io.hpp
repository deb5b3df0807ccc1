#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mcran/network_model.hpp"
#include "mcran/sim_harness.hpp"

namespace mcran {

/// Malformed configuration text. `line()` is 1-based, 0 when the problem is
/// not tied to a line (for example a missing required key).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Configuration files are flat `key = value` lines. Blank lines and lines
// starting with '#' are ignored; a '#' after a value starts a comment.
//
// Network keys:
//   num_clouds, num_bs_per_cloud, num_pz_per_bs, num_users   (required)
//   cell_distance, tx_psd_dbm_hz, noise_psd_dbm_hz, sinr_gap_db,
//   bandwidth_hz, pathloss_exponent, pathloss_ref_db,
//   shadowing_sigma_db, fading (none|rayleigh), rng_seed
// Sweep keys (sweep files only):
//   sweep_parameter (U|Z|B|C), sweep_values (comma list), trials,
//   modes (comma list of hybrid|signal|sched), solver (exact|greedy),
//   users_per_cloud (true|false), local_search_passes, threads
//
// Unknown or repeated keys are errors.

[[nodiscard]] NetworkConfig parse_network_config(std::istream& in);
[[nodiscard]] SweepSpec parse_sweep_spec(std::istream& in);

/// Reads a file; an unreadable path is reported as ConfigError with line 0.
[[nodiscard]] NetworkConfig load_network_config(const std::string& path);
[[nodiscard]] SweepSpec load_sweep_spec(const std::string& path);

}  // namespace mcran
