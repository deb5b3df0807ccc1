#include "mcran/association.hpp"

namespace mcran {

Association association_at(const Dimensions& dims, std::size_t index) noexcept {
    Association a;
    a.pz = static_cast<std::uint32_t>(index % dims.pz_per_bs);
    index /= dims.pz_per_bs;
    a.bs = static_cast<std::uint32_t>(index % dims.bs_per_cloud);
    index /= dims.bs_per_cloud;
    a.user = static_cast<std::uint32_t>(index % dims.users);
    a.cloud = static_cast<std::uint32_t>(index / dims.users);
    return a;
}

bool in_range(const Dimensions& dims, const Association& a) noexcept {
    return a.cloud < dims.clouds && a.user < dims.users && a.bs < dims.bs_per_cloud && a.pz < dims.pz_per_bs;
}

std::vector<Association> enumerate_associations(const Dimensions& dims) {
    std::vector<Association> out;
    out.reserve(dims.total_associations());
    for (std::uint32_t c = 0; c < dims.clouds; ++c)
        for (std::uint32_t u = 0; u < dims.users; ++u)
            for (std::uint32_t b = 0; b < dims.bs_per_cloud; ++b)
                for (std::uint32_t z = 0; z < dims.pz_per_bs; ++z) out.push_back({c, u, b, z});
    return out;
}

std::string_view to_string(CoordinationMode mode) noexcept {
    switch (mode) {
    case CoordinationMode::Hybrid: return "hybrid";
    case CoordinationMode::SignalLevel: return "signal";
    case CoordinationMode::SchedulingLevel: return "sched";
    }
    return "unknown";
}

std::optional<CoordinationMode> parse_mode(std::string_view text) noexcept {
    for (auto mode : kAllModes)
        if (to_string(mode) == text) return mode;
    return std::nullopt;
}

}  // namespace mcran
