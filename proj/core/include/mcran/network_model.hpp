#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "mcran/association.hpp"

namespace mcran {

enum class Fading { None, Rayleigh };

[[nodiscard]] std::string_view to_string(Fading fading) noexcept;
[[nodiscard]] std::optional<Fading> parse_fading(std::string_view text) noexcept;

/// Parameters of a simulated multi-cloud network. Defaults follow the
/// reference simulation setup (hexagonal layout, 500 m cells, 10 MHz).
struct NetworkConfig {
    Dimensions dims;
    double cell_distance = 500.0;        // m, center-to-center
    double tx_psd_dbm_hz = -42.60;
    double noise_psd_dbm_hz = -168.60;
    double sinr_gap_db = 0.0;
    double bandwidth_hz = 1.0e7;
    double pathloss_exponent = 3.5;
    double pathloss_ref_db = 37.0;       // loss at the 1 m reference distance
    double shadowing_sigma_db = 8.0;
    Fading fading = Fading::Rayleigh;
    std::uint64_t rng_seed = 1;

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// A realized network: geometry, fixed per-PZ powers, noise and the power gain
/// |h|^2 of every (c, u, b, z) link. Immutable once generated.
struct NetworkInstance {
    NetworkConfig config;
    std::vector<Point> bs_positions;    // indexed c * B + b
    std::vector<Point> user_positions;  // indexed u
    std::vector<double> power;          // P_{cbz}, indexed (c * B + b) * Z + z
    double noise_power = 1.0;           // sigma^2, linear
    double sinr_gap = 1.0;              // Gamma, linear
    std::vector<double> channel_gain;   // |h^u_{cbz}|^2, indexed by association_index

    [[nodiscard]] const Dimensions& dims() const noexcept { return config.dims; }
    [[nodiscard]] double gain(const Association& a) const { return channel_gain[association_index(dims(), a)]; }
    [[nodiscard]] double power_at(std::uint32_t c, std::uint32_t b, std::uint32_t z) const {
        return power[(c * dims().bs_per_cloud + b) * dims().pz_per_bs + z];
    }

    /// Checks shapes, finiteness and positivity; throws std::invalid_argument.
    void validate() const;
};

/// Builds an instance from explicit powers and gains (no geometry). Used for
/// hand-constructed scenarios; validates the result.
[[nodiscard]] NetworkInstance make_instance(const Dimensions& dims, std::vector<double> power, double noise_power,
                                            double sinr_gap, std::vector<double> channel_gain);

/// Generates a reproducible instance.
///
/// Layout: cloud c is a hexagonal cell whose center is the c-th cell of a
/// hexagonal spiral (ring by ring) with neighbor distance `cell_distance`.
/// A single BS sits at the cell center; B > 1 BSs sit at radius
/// cell_distance / 4 at angles 2*pi*b/B. User u lives in cell u mod C.
///
/// Every PZ gets an equal share of the band: P_{cbz} = tx_psd * bandwidth / Z
/// and sigma^2 = noise_psd * bandwidth / Z. Link gain in dB is
/// -(pathloss_ref_db + 10 * pathloss_exponent * log10(max(d, 10 m)) + shadow),
/// multiplied by an Exp(1) power gain under Rayleigh fading.
///
/// Draw order from a mt19937_64 seeded with rng_seed:
///   1. for u in users: a uniform point in its hexagon (rejection sampling
///      from the bounding box, two uniforms per attempt, x then y);
///   2. for c, for u, for b: one standard normal for shadowing (only when
///      shadowing_sigma_db > 0), then for z: one uniform for the Rayleigh
///      power gain (only when fading is rayleigh).
/// Uniforms are (x >> 11) * 2^-53, normals use Box-Muller on two uniforms
/// (cosine branch), exponentials are -ln(1 - uniform).
[[nodiscard]] NetworkInstance generate_instance(const NetworkConfig& config);

/// Same model with caller-supplied user positions (one per user); the draw
/// sequence starts directly at step 2.
[[nodiscard]] NetworkInstance generate_instance(const NetworkConfig& config, std::span<const Point> user_positions);

/// SINR of user u on PZ z of BS b in cloud c; the interference sums every
/// other (c', b') pair of the whole network on the same PZ index.
[[nodiscard]] double sinr(const NetworkInstance& inst, const Association& a);

/// pi_{cubz} for every association, indexed by association_index.
struct UtilityTensor {
    Dimensions dims;
    std::vector<double> value;

    [[nodiscard]] double at(const Association& a) const { return value[association_index(dims, a)]; }
};

/// Sum-rate utility log2(1 + SINR) for every association.
[[nodiscard]] UtilityTensor utility_tensor(const NetworkInstance& inst);

/// Wraps explicit per-association weights; throws on shape mismatch or
/// non-finite entries.
[[nodiscard]] UtilityTensor make_tensor(const Dimensions& dims, std::vector<double> value);

[[nodiscard]] inline double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

}  // namespace mcran
