#include "mcran/schedule.hpp"

#include <algorithm>

#include "mcran/conflict_graph.hpp"

namespace mcran {

double canonical_weight(std::span<const Association> associations, const Dimensions& dims,
                        std::span<const double> weights) {
    std::vector<const Association*> order;
    order.reserve(associations.size());
    for (const auto& a : associations) order.push_back(&a);
    std::sort(order.begin(), order.end(), [&](const Association* x, const Association* y) {
        const auto sx = slot_index(dims, *x);
        const auto sy = slot_index(dims, *y);
        return sx != sy ? sx < sy : x->user < y->user;
    });
    double total = 0.0;
    for (const Association* a : order) total += weights[association_index(dims, *a)];
    return total;
}

Schedule make_schedule(std::vector<Association> associations, CoordinationMode mode, const Dimensions& dims,
                       std::span<const double> weights) {
    std::sort(associations.begin(), associations.end());
    Schedule s;
    s.total_weight = canonical_weight(associations, dims, weights);
    s.associations = std::move(associations);
    s.mode = mode;
    return s;
}

bool lex_less(std::span<const Association> a, std::span<const Association> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool satisfies_program(std::span<const Association> s, CoordinationMode mode, const Dimensions& dims) {
    const std::size_t C = dims.clouds, U = dims.users, B = dims.bs_per_cloud, Z = dims.pz_per_bs;
    for (const auto& a : s)
        if (!in_range(dims, a)) return false;

    // X_{cubz} as counts so that a repeated association shows up as X = 2.
    std::vector<int> x(dims.total_associations(), 0);
    for (const auto& a : s) ++x[association_index(dims, a)];
    auto X = [&](std::size_t c, std::size_t u, std::size_t b, std::size_t z) {
        return x[((c * U + u) * B + b) * Z + z];
    };
    for (int v : x)
        if (v > 1) return false;

    // Every (c, b, z) PZ is allocated to exactly one user.
    for (std::size_t c = 0; c < C; ++c)
        for (std::size_t b = 0; b < B; ++b)
            for (std::size_t z = 0; z < Z; ++z) {
                int users = 0;
                for (std::size_t u = 0; u < U; ++u) users += X(c, u, b, z);
                if (users != 1) return false;
            }

    if (mode == CoordinationMode::Hybrid || mode == CoordinationMode::SignalLevel) {
        // Y_{uz} = sum_{c,b} X_{cubz} <= 1.
        for (std::size_t u = 0; u < U; ++u)
            for (std::size_t z = 0; z < Z; ++z) {
                int y = 0;
                for (std::size_t c = 0; c < C; ++c)
                    for (std::size_t b = 0; b < B; ++b) y += X(c, u, b, z);
                if (y > 1) return false;
            }
    }
    if (mode == CoordinationMode::Hybrid) {
        // Z_{cu} = 1 - delta(sum_{b,z} X_{cubz}), sum_c Z_{cu} <= 1.
        for (std::size_t u = 0; u < U; ++u) {
            int clouds = 0;
            for (std::size_t c = 0; c < C; ++c) {
                int served = 0;
                for (std::size_t b = 0; b < B; ++b)
                    for (std::size_t z = 0; z < Z; ++z) served += X(c, u, b, z);
                clouds += served == 0 ? 0 : 1;
            }
            if (clouds > 1) return false;
        }
    }
    if (mode == CoordinationMode::SchedulingLevel) {
        // Y_{cub} = min(sum_z X_{cubz}, 1), sum_{c,b} Y_{cub} <= 1.
        for (std::size_t u = 0; u < U; ++u) {
            int bs_count = 0;
            for (std::size_t c = 0; c < C; ++c)
                for (std::size_t b = 0; b < B; ++b) {
                    int served = 0;
                    for (std::size_t z = 0; z < Z; ++z) served += X(c, u, b, z);
                    bs_count += std::min(served, 1);
                }
            if (bs_count > 1) return false;
        }
    }
    return true;
}

bool validate_schedule(const Schedule& s, const ConflictGraph& graph) {
    const Dimensions& dims = graph.dims();
    if (s.mode != graph.mode()) return false;
    if (s.associations.size() != graph.z_tot()) return false;
    for (const auto& a : s.associations)
        if (!in_range(dims, a)) return false;

    std::vector<int> slot_cover(dims.total_slots(), 0);
    for (const auto& a : s.associations) ++slot_cover[slot_index(dims, a)];
    if (std::any_of(slot_cover.begin(), slot_cover.end(), [](int n) { return n != 1; })) return false;

    for (std::size_t i = 0; i < s.associations.size(); ++i) {
        const auto vi = graph.index_of(s.associations[i]);
        for (std::size_t j = i + 1; j < s.associations.size(); ++j) {
            const auto vj = graph.index_of(s.associations[j]);
            if (vi == vj || graph.adjacent(vi, vj)) return false;
        }
    }
    return satisfies_program(s.associations, s.mode, dims);
}

}  // namespace mcran
