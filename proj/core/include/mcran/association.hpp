#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcran {

/// Network dimensions: C clouds, B base stations per cloud, Z power zones per
/// base station and U users in total.
struct Dimensions {
    std::size_t clouds = 1;
    std::size_t bs_per_cloud = 1;
    std::size_t pz_per_bs = 1;
    std::size_t users = 1;

    /// Number of (cloud, bs, pz) slots, which is also the cardinality every
    /// feasible schedule must have.
    [[nodiscard]] std::size_t total_slots() const noexcept { return clouds * bs_per_cloud * pz_per_bs; }
    [[nodiscard]] std::size_t total_associations() const noexcept { return total_slots() * users; }
    [[nodiscard]] std::size_t bs_count() const noexcept { return clouds * bs_per_cloud; }

    friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

/// One candidate scheduling decision: user `user` served on power zone `pz`
/// of base station `bs` in cloud `cloud`. Ordered lexicographically by
/// (cloud, user, bs, pz).
struct Association {
    std::uint32_t cloud = 0;
    std::uint32_t user = 0;
    std::uint32_t bs = 0;
    std::uint32_t pz = 0;

    friend auto operator<=>(const Association&, const Association&) = default;
};

/// Flat index of an association in lexicographic (c, u, b, z) order.
[[nodiscard]] inline std::size_t association_index(const Dimensions& dims, const Association& a) noexcept {
    return ((a.cloud * dims.users + a.user) * dims.bs_per_cloud + a.bs) * dims.pz_per_bs + a.pz;
}

[[nodiscard]] Association association_at(const Dimensions& dims, std::size_t index) noexcept;

/// Flat index of the (c, b, z) slot an association occupies, in (c, b, z)
/// lexicographic order.
[[nodiscard]] inline std::size_t slot_index(const Dimensions& dims, const Association& a) noexcept {
    return (a.cloud * dims.bs_per_cloud + a.bs) * dims.pz_per_bs + a.pz;
}

[[nodiscard]] bool in_range(const Dimensions& dims, const Association& a) noexcept;

/// All C*U*B*Z associations in lexicographic order.
[[nodiscard]] std::vector<Association> enumerate_associations(const Dimensions& dims);

enum class CoordinationMode { Hybrid, SignalLevel, SchedulingLevel };

inline constexpr CoordinationMode kAllModes[] = {CoordinationMode::Hybrid, CoordinationMode::SignalLevel,
                                                 CoordinationMode::SchedulingLevel};

/// "hybrid", "signal" or "sched".
[[nodiscard]] std::string_view to_string(CoordinationMode mode) noexcept;
[[nodiscard]] std::optional<CoordinationMode> parse_mode(std::string_view text) noexcept;

}  // namespace mcran
