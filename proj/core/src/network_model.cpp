#include "mcran/network_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "random.hpp"

namespace mcran {

namespace {

constexpr double kMinLinkDistance = 10.0;  // m

double dbm_to_watt(double dbm) { return db_to_linear(dbm - 30.0); }

void require(bool condition, const std::string& what) {
    if (!condition) throw std::invalid_argument(what);
}

// Axial coordinates of the first `count` cells of a hexagonal spiral.
std::vector<std::pair<int, int>> hex_spiral(std::size_t count) {
    static constexpr std::pair<int, int> kDirections[6] = {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}};
    std::vector<std::pair<int, int>> cells{{0, 0}};
    for (int ring = 1; cells.size() < count; ++ring) {
        int q = kDirections[4].first * ring;
        int r = kDirections[4].second * ring;
        for (const auto& [dq, dr] : kDirections) {
            for (int step = 0; step < ring; ++step) {
                cells.emplace_back(q, r);
                q += dq;
                r += dr;
            }
        }
    }
    cells.resize(count);
    return cells;
}

Point cell_center(std::pair<int, int> axial, double spacing) {
    const auto [q, r] = axial;
    return {spacing * (q + 0.5 * r), spacing * (std::numbers::sqrt3 / 2.0) * r};
}

// Inside the hexagon with apothem `apothem` centered at the origin, whose flat
// sides face the 0, 60 and 120 degree directions.
bool inside_hexagon(double x, double y, double apothem) {
    const double h = std::numbers::sqrt3 / 2.0;
    return std::abs(x) <= apothem && std::abs(0.5 * x + h * y) <= apothem && std::abs(-0.5 * x + h * y) <= apothem;
}

}  // namespace

std::string_view to_string(Fading fading) noexcept { return fading == Fading::None ? "none" : "rayleigh"; }

std::optional<Fading> parse_fading(std::string_view text) noexcept {
    if (text == "none") return Fading::None;
    if (text == "rayleigh") return Fading::Rayleigh;
    return std::nullopt;
}

void NetworkConfig::validate() const {
    require(dims.clouds >= 1, "num_clouds must be >= 1");
    require(dims.bs_per_cloud >= 1, "num_bs_per_cloud must be >= 1");
    require(dims.pz_per_bs >= 1, "num_pz_per_bs must be >= 1");
    require(dims.users >= 1, "num_users must be >= 1");
    require(std::isfinite(cell_distance) && cell_distance > 0.0, "cell_distance must be > 0");
    require(std::isfinite(bandwidth_hz) && bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
    require(std::isfinite(pathloss_exponent) && pathloss_exponent >= 2.0, "pathloss_exponent must be >= 2");
    require(std::isfinite(shadowing_sigma_db) && shadowing_sigma_db >= 0.0, "shadowing_sigma_db must be >= 0");
    require(std::isfinite(tx_psd_dbm_hz), "tx_psd_dbm_hz must be finite");
    require(std::isfinite(noise_psd_dbm_hz), "noise_psd_dbm_hz must be finite");
    require(std::isfinite(sinr_gap_db) && sinr_gap_db >= 0.0, "sinr_gap_db must be >= 0");
    require(std::isfinite(pathloss_ref_db), "pathloss_ref_db must be finite");
}

void NetworkInstance::validate() const {
    const Dimensions& d = dims();
    require(d.clouds >= 1 && d.bs_per_cloud >= 1 && d.pz_per_bs >= 1 && d.users >= 1, "dimensions must be >= 1");
    require(power.size() == d.total_slots(), "power must have C*B*Z entries");
    require(channel_gain.size() == d.total_associations(), "channel_gain must have C*U*B*Z entries");
    require(std::isfinite(noise_power) && noise_power > 0.0, "noise power must be > 0");
    require(std::isfinite(sinr_gap) && sinr_gap >= 1.0, "linear SINR gap must be >= 1");
    for (double p : power) require(std::isfinite(p) && p > 0.0, "transmit powers must be > 0");
    for (double g : channel_gain) require(std::isfinite(g) && g >= 0.0, "channel gains must be finite and >= 0");
}

NetworkInstance make_instance(const Dimensions& dims, std::vector<double> power, double noise_power,
                              double sinr_gap, std::vector<double> channel_gain) {
    NetworkInstance inst;
    inst.config.dims = dims;
    inst.power = std::move(power);
    inst.noise_power = noise_power;
    inst.sinr_gap = sinr_gap;
    inst.channel_gain = std::move(channel_gain);
    inst.validate();
    return inst;
}

namespace {

std::vector<Point> layout_centers(const NetworkConfig& config) {
    std::vector<Point> centers;
    for (const auto& cell : hex_spiral(config.dims.clouds)) centers.push_back(cell_center(cell, config.cell_distance));
    return centers;
}

std::vector<Point> draw_users(const NetworkConfig& config, const std::vector<Point>& centers, detail::Rng& rng) {
    const double apothem = config.cell_distance / 2.0;
    const double circumradius = config.cell_distance / std::numbers::sqrt3;
    std::vector<Point> users;
    users.reserve(config.dims.users);
    for (std::size_t u = 0; u < config.dims.users; ++u) {
        const Point& center = centers[u % config.dims.clouds];
        double x = 0.0;
        double y = 0.0;
        do {
            x = (2.0 * rng.uniform() - 1.0) * apothem;
            y = (2.0 * rng.uniform() - 1.0) * circumradius;
        } while (!inside_hexagon(x, y, apothem));
        users.push_back({center.x + x, center.y + y});
    }
    return users;
}

NetworkInstance realize(const NetworkConfig& config, const std::vector<Point>& centers, std::vector<Point> users,
                        detail::Rng& rng) {
    const Dimensions& d = config.dims;
    NetworkInstance inst;
    inst.config = config;
    inst.user_positions = std::move(users);

    inst.bs_positions.reserve(d.bs_count());
    for (std::size_t c = 0; c < d.clouds; ++c) {
        for (std::size_t b = 0; b < d.bs_per_cloud; ++b) {
            Point p = centers[c];
            if (d.bs_per_cloud > 1) {
                const double angle = 2.0 * std::numbers::pi * static_cast<double>(b) / static_cast<double>(d.bs_per_cloud);
                p.x += 0.25 * config.cell_distance * std::cos(angle);
                p.y += 0.25 * config.cell_distance * std::sin(angle);
            }
            inst.bs_positions.push_back(p);
        }
    }

    const double per_pz = config.bandwidth_hz / static_cast<double>(d.pz_per_bs);
    inst.power.assign(d.total_slots(), dbm_to_watt(config.tx_psd_dbm_hz) * per_pz);
    inst.noise_power = dbm_to_watt(config.noise_psd_dbm_hz) * per_pz;
    inst.sinr_gap = db_to_linear(config.sinr_gap_db);

    inst.channel_gain.assign(d.total_associations(), 0.0);
    for (std::uint32_t c = 0; c < d.clouds; ++c) {
        for (std::uint32_t u = 0; u < d.users; ++u) {
            for (std::uint32_t b = 0; b < d.bs_per_cloud; ++b) {
                const Point& bs = inst.bs_positions[c * d.bs_per_cloud + b];
                const Point& ue = inst.user_positions[u];
                const double distance = std::max(std::hypot(bs.x - ue.x, bs.y - ue.y), kMinLinkDistance);
                double loss_db = config.pathloss_ref_db + 10.0 * config.pathloss_exponent * std::log10(distance);
                if (config.shadowing_sigma_db > 0.0) loss_db += config.shadowing_sigma_db * rng.normal();
                const double mean_gain = db_to_linear(-loss_db);
                for (std::uint32_t z = 0; z < d.pz_per_bs; ++z) {
                    const double fading = config.fading == Fading::Rayleigh ? rng.exponential() : 1.0;
                    inst.channel_gain[association_index(d, {c, u, b, z})] = mean_gain * fading;
                }
            }
        }
    }
    inst.validate();
    return inst;
}

}  // namespace

NetworkInstance generate_instance(const NetworkConfig& config) {
    config.validate();
    detail::Rng rng(config.rng_seed);
    const auto centers = layout_centers(config);
    auto users = draw_users(config, centers, rng);
    return realize(config, centers, std::move(users), rng);
}

NetworkInstance generate_instance(const NetworkConfig& config, std::span<const Point> user_positions) {
    config.validate();
    require(user_positions.size() == config.dims.users, "need one position per user");
    detail::Rng rng(config.rng_seed);
    return realize(config, layout_centers(config), {user_positions.begin(), user_positions.end()}, rng);
}

double sinr(const NetworkInstance& inst, const Association& a) {
    const Dimensions& d = inst.dims();
    if (!in_range(d, a)) throw std::out_of_range("association index out of range");
    double interference = 0.0;
    for (std::uint32_t c = 0; c < d.clouds; ++c) {
        for (std::uint32_t b = 0; b < d.bs_per_cloud; ++b) {
            if (c == a.cloud && b == a.bs) continue;
            interference += inst.power_at(c, b, a.pz) * inst.gain({c, a.user, b, a.pz});
        }
    }
    const double signal = inst.power_at(a.cloud, a.bs, a.pz) * inst.gain(a);
    return signal / (inst.sinr_gap * (inst.noise_power + interference));
}

UtilityTensor utility_tensor(const NetworkInstance& inst) {
    const Dimensions& d = inst.dims();
    UtilityTensor tensor{d, std::vector<double>(d.total_associations())};
    for (std::size_t i = 0; i < tensor.value.size(); ++i)
        tensor.value[i] = std::log2(1.0 + sinr(inst, association_at(d, i)));
    return tensor;
}

UtilityTensor make_tensor(const Dimensions& dims, std::vector<double> value) {
    require(value.size() == dims.total_associations(), "utility tensor must have C*U*B*Z entries");
    for (double v : value) require(std::isfinite(v), "utility entries must be finite");
    return {dims, std::move(value)};
}

}  // namespace mcran
