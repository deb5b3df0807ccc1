#include "mcran/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mcran/mwis_solver.hpp"
#include "random.hpp"

namespace mcran::oracle {

namespace {

// Partial sums of the indicator variables of the mode's integer program.
// Constraints are upper bounds on these sums, so they can be checked after
// every placement; slot coverage holds by construction. The per-user totals
// of Z_{cu} and Y_{cub} are kept up to date as their arguments cross zero.
class ProgramState {
public:
    explicit ProgramState(const FeasibleSetSpec& spec)
        : mode_(spec.mode),
          d_(spec.dims),
          per_cub_(d_.clouds * d_.users * d_.bs_per_cloud, 0),
          per_uz_(d_.users * d_.pz_per_bs, 0),
          per_cu_(d_.clouds * d_.users, 0),
          clouds_of_(d_.users, 0),
          bs_links_of_(d_.users, 0) {}

    void add(const Association& a, int delta) {
        int& cub = per_cub_[(a.cloud * d_.users + a.user) * d_.bs_per_cloud + a.bs];
        int& cu = per_cu_[a.cloud * d_.users + a.user];
        // Y_{cub} = min(sum_z X_{cubz}, 1), Z_{cu} = 1 - delta(sum_{b,z} X_{cubz})
        bs_links_of_[a.user] -= std::min(cub, 1);
        clouds_of_[a.user] -= cu == 0 ? 0 : 1;
        cub += delta;
        cu += delta;
        bs_links_of_[a.user] += std::min(cub, 1);
        clouds_of_[a.user] += cu == 0 ? 0 : 1;
        per_uz_[a.user * d_.pz_per_bs + a.pz] += delta;
    }

    // Whether the constraints involving a.user would still hold after adding
    // a, evaluated on the indicator sums the placement would produce.
    [[nodiscard]] bool admits(const Association& a) const {
        const int y_uz_after = per_uz_[a.user * d_.pz_per_bs + a.pz] + 1;
        switch (mode_) {
        case CoordinationMode::Hybrid: {
            const bool new_cloud = per_cu_[a.cloud * d_.users + a.user] == 0;
            return y_uz_after <= 1 && clouds_of_[a.user] + (new_cloud ? 1 : 0) <= 1;
        }
        case CoordinationMode::SignalLevel:
            return y_uz_after <= 1;
        case CoordinationMode::SchedulingLevel: {
            const bool new_link = per_cub_[(a.cloud * d_.users + a.user) * d_.bs_per_cloud + a.bs] == 0;
            return bs_links_of_[a.user] + (new_link ? 1 : 0) <= 1;
        }
        }
        return false;
    }

private:
    CoordinationMode mode_;
    Dimensions d_;
    std::vector<int> per_cub_;
    std::vector<int> per_uz_;
    std::vector<int> per_cu_;
    std::vector<int> clouds_of_;    // sum_c Z_{cu}
    std::vector<int> bs_links_of_;  // sum_{c,b} Y_{cub}
};

void check_cap(const FeasibleSetSpec& spec) {
    const auto slots = spec.dims.total_slots();
    if (slots > spec.slot_cap)
        throw CapExceeded("oracle: " + std::to_string(slots) + " slots exceed the enumeration cap of " +
                          std::to_string(spec.slot_cap));
}

// Slot list in (c, b, z) order.
std::vector<Association> slot_templates(const Dimensions& d) {
    std::vector<Association> slots;
    for (std::uint32_t c = 0; c < d.clouds; ++c)
        for (std::uint32_t b = 0; b < d.bs_per_cloud; ++b)
            for (std::uint32_t z = 0; z < d.pz_per_bs; ++z) slots.push_back({c, 0, b, z});
    return slots;
}

// Calls leaf(assignment, value) with one association per slot, in slot order.
// `value` is the weight sum accumulated in slot order from 0.0 (0 without
// weights), which is exactly canonical_weight of the assignment.
template <typename Leaf>
class Enumerator {
public:
    Enumerator(const FeasibleSetSpec& spec, const double* weights, Leaf& leaf)
        : spec_(spec), weights_(weights), leaf_(leaf), program_(spec), slots_(slot_templates(spec.dims)),
          current_(slots_) {}

    void run(std::size_t slot = 0, double value = 0.0) {
        if (slot == slots_.size()) {
            leaf_(current_, value);
            return;
        }
        for (std::uint32_t u = 0; u < spec_.dims.users; ++u) {
            Association a = slots_[slot];
            a.user = u;
            if (!program_.admits(a)) continue;
            program_.add(a, +1);
            current_[slot] = a;
            run(slot + 1, weights_ ? value + weights_[association_index(spec_.dims, a)] : 0.0);
            program_.add(a, -1);
        }
    }

private:
    const FeasibleSetSpec& spec_;
    const double* weights_;
    Leaf& leaf_;
    ProgramState program_;
    std::vector<Association> slots_;
    std::vector<Association> current_;
};

template <typename Leaf>
void enumerate(const FeasibleSetSpec& spec, const double* weights, Leaf& leaf) {
    check_cap(spec);
    Enumerator<Leaf> enumerator(spec, weights, leaf);
    enumerator.run();
}

}  // namespace

void enumerate_feasible(const FeasibleSetSpec& spec, const std::function<void(std::span<const Association>)>& visit) {
    std::vector<Association> sorted;
    auto leaf = [&](const std::vector<Association>& assignment, double) {
        sorted = assignment;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted);
    };
    enumerate(spec, nullptr, leaf);
}

std::uint64_t count_feasible(const FeasibleSetSpec& spec) {
    std::uint64_t count = 0;
    auto leaf = [&](const std::vector<Association>&, double) { ++count; };
    enumerate(spec, nullptr, leaf);
    return count;
}

BruteForceResult brute_force(const FeasibleSetSpec& spec, const UtilityTensor& tensor) {
    if (tensor.dims != spec.dims) throw std::invalid_argument("brute_force_opt: tensor shape does not match spec");
    BruteForceResult result;
    bool found = false;
    double best_value = 0.0;
    std::vector<Association> best;
    std::vector<Association> sorted;
    auto leaf = [&](const std::vector<Association>& assignment, double value) {
        ++result.feasible_count;
        if (found && value < best_value) return;
        sorted = assignment;
        std::sort(sorted.begin(), sorted.end());
        if (!found || value > best_value || lex_less(sorted, best)) {
            found = true;
            best_value = value;
            best = sorted;
        }
    };
    enumerate(spec, tensor.value.data(), leaf);
    if (found) result.optimum = make_schedule(std::move(best), spec.mode, spec.dims, tensor.value);
    return result;
}

std::optional<Schedule> brute_force_opt(const FeasibleSetSpec& spec, const UtilityTensor& tensor) {
    return brute_force(spec, tensor).optimum;
}

namespace {

// Collects a family of vertex-index sets: count, an order-independent
// fingerprint, and the members themselves while there are few enough.
class Family {
public:
    explicit Family(std::uint64_t keep_limit) : keep_limit_(keep_limit) {}

    void add(std::span<const std::uint32_t> sorted_vertices) {
        std::uint64_t h1 = 0x243f6a8885a308d3ULL;
        std::uint64_t h2 = 0x13198a2e03707344ULL;
        for (std::uint32_t v : sorted_vertices) {
            h1 = detail::mix64(h1 ^ v);
            h2 = detail::mix64(h2 + 0x9e3779b97f4a7c15ULL * (v + 1));
        }
        sum1_ += h1;
        sum2_ += h2;
        ++count_;
        if (count_ <= keep_limit_) {
            members_.emplace_back(sorted_vertices.begin(), sorted_vertices.end());
        } else {
            members_.clear();
            members_.shrink_to_fit();
        }
    }

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    [[nodiscard]] bool kept() const noexcept { return count_ <= keep_limit_; }

    [[nodiscard]] bool same_fingerprint(const Family& other) const noexcept {
        return count_ == other.count_ && sum1_ == other.sum1_ && sum2_ == other.sum2_;
    }

    [[nodiscard]] bool same_members(Family& other) {
        std::sort(members_.begin(), members_.end());
        std::sort(other.members_.begin(), other.members_.end());
        return members_ == other.members_;
    }

private:
    std::uint64_t keep_limit_;
    std::uint64_t count_ = 0;
    std::uint64_t sum1_ = 0;
    std::uint64_t sum2_ = 0;
    std::vector<std::vector<std::uint32_t>> members_;
};

}  // namespace

EquivalenceReport check_equivalence(const ConflictGraph& graph, std::size_t slot_cap, std::uint64_t exact_limit) {
    const FeasibleSetSpec spec{graph.mode(), graph.dims(), slot_cap};
    EquivalenceReport report;
    report.mode = graph.mode();

    Family from_program(exact_limit);
    std::vector<std::uint32_t> indices;
    enumerate_feasible(spec, [&](std::span<const Association> schedule) {
        indices.clear();
        for (const auto& a : schedule) indices.push_back(static_cast<std::uint32_t>(graph.index_of(a)));
        std::sort(indices.begin(), indices.end());
        from_program.add(indices);
    });

    Family from_graph(exact_limit);
    for_each_full_independent_set(graph, [&](std::span<const std::uint32_t> set) { from_graph.add(set); });

    report.feasible_count = from_program.count();
    report.independent_count = from_graph.count();
    report.exact_family_check = from_program.kept() && from_graph.kept();
    report.same_family = from_program.same_fingerprint(from_graph) &&
                         (!report.exact_family_check || from_program.same_members(from_graph));

    const UtilityTensor tensor{graph.dims(), std::vector<double>(graph.weights().begin(), graph.weights().end())};
    const auto oracle_best = brute_force_opt(spec, tensor);
    const SolveReport solved = solve_exact(graph);
    if (oracle_best) {
        report.optimum = oracle_best->total_weight;
        const double scale = std::max(1.0, std::abs(oracle_best->total_weight));
        report.same_optimum = solved.feasible() &&
                              std::abs(solved.schedule.total_weight - oracle_best->total_weight) <= 1e-9 * scale &&
                              solved.schedule.associations == oracle_best->associations;
        report.schedule_valid = solved.feasible() && validate_schedule(solved.schedule, graph);
    } else {
        report.same_optimum = !solved.feasible();
        report.schedule_valid = !solved.feasible();
    }
    return report;
}

}  // namespace mcran::oracle
