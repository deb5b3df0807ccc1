#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mcran/association.hpp"
#include "mcran/network_model.hpp"

namespace mcran::testing {

/// Uniform random weights in [0, 1) for every association.
inline UtilityTensor random_tensor(const Dimensions& dims, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> weight(0.0, 1.0);
    std::vector<double> values(dims.total_associations());
    for (double& v : values) v = weight(rng);
    return make_tensor(dims, std::move(values));
}

inline UtilityTensor uniform_tensor(const Dimensions& dims, double value = 1.0) {
    return make_tensor(dims, std::vector<double>(dims.total_associations(), value));
}

/// C, B, Z drawn from {1, 2}, U from [max(1, C*B - 1), 5].
inline Dimensions random_small_dims(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> one_or_two(1, 2);
    Dimensions d;
    d.clouds = one_or_two(rng);
    d.bs_per_cloud = one_or_two(rng);
    d.pz_per_bs = one_or_two(rng);
    std::uniform_int_distribution<std::size_t> users(std::max<std::size_t>(1, d.bs_count() - 1), 5);
    d.users = users(rng);
    return d;
}

/// Edge rule written directly with the discrete Dirac delta on the projected
/// indices, for cross-checking are_conflicting.
inline bool conflict_by_delta(CoordinationMode mode, const Association& a, const Association& b) {
    auto delta = [](std::int64_t x) { return x == 0 ? 1 : 0; };
    const auto du = delta(std::int64_t(a.user) - b.user);
    const auto dc = delta(std::int64_t(a.cloud) - b.cloud);
    const auto db = delta(std::int64_t(a.bs) - b.bs);
    const auto dz = delta(std::int64_t(a.pz) - b.pz);
    const bool cc1 = du * (1 - dc) == 1;
    const bool cc2 = dc * db * dz == 1;
    const bool cc3 = du * dz == 1;
    const bool other_bs = du * (1 - db) == 1;
    switch (mode) {
    case CoordinationMode::Hybrid: return cc1 || cc2 || cc3;
    case CoordinationMode::SignalLevel: return cc2 || cc3;
    case CoordinationMode::SchedulingLevel: return cc1 || cc2 || other_bs;
    }
    return false;
}

}  // namespace mcran::testing
