#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

#include "mcran/association.hpp"
#include "mcran/conflict_graph.hpp"
#include "mcran/network_model.hpp"
#include "mcran/schedule.hpp"

namespace mcran::oracle {

/// Brute-force ground truth. Feasibility is decided from the integer programs
/// themselves (indicator variables and their constraints), never from the
/// conflict-graph edge rules.

struct FeasibleSetSpec {
    static constexpr std::size_t kDefaultSlotCap = 12;

    CoordinationMode mode = CoordinationMode::Hybrid;
    Dimensions dims;
    std::size_t slot_cap = kDefaultSlotCap;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Calls `visit` once per feasible schedule (sorted associations). Schedules
/// are produced slot by slot, so each (c, b, z) slot holds exactly one user by
/// construction; the remaining constraints are checked as partial sums of the
/// indicator variables after every placement.
/// Throws CapExceeded when C*B*Z > slot_cap.
void enumerate_feasible(const FeasibleSetSpec& spec, const std::function<void(std::span<const Association>)>& visit);

/// |F| for the spec.
[[nodiscard]] std::uint64_t count_feasible(const FeasibleSetSpec& spec);

/// Feasible schedule of maximum summed utility, ties broken toward the
/// lexicographically smallest set; std::nullopt when F is empty.
[[nodiscard]] std::optional<Schedule> brute_force_opt(const FeasibleSetSpec& spec, const UtilityTensor& tensor);

struct BruteForceResult {
    std::uint64_t feasible_count = 0;
    std::optional<Schedule> optimum;
};

/// count_feasible and brute_force_opt in a single enumeration.
[[nodiscard]] BruteForceResult brute_force(const FeasibleSetSpec& spec, const UtilityTensor& tensor);

/// Outcome of comparing the oracle with the graph route on one graph.
struct EquivalenceReport {
    CoordinationMode mode = CoordinationMode::Hybrid;
    std::uint64_t feasible_count = 0;       // |F| from the program constraints
    std::uint64_t independent_count = 0;    // size-z_tot independent sets of the graph
    bool same_family = false;               // F equals the independent-set family
    bool exact_family_check = false;        // compared element-wise, not by fingerprint
    bool same_optimum = false;              // solve_exact agrees with brute_force_opt
    bool schedule_valid = false;            // solve_exact output passes validate_schedule
    std::optional<double> optimum;          // brute-force optimum, nullopt when infeasible

    [[nodiscard]] bool passed() const noexcept { return same_family && same_optimum && schedule_valid; }
};

/// Runs the graph/program equivalence checks for `graph`: the family of
/// feasible schedules against the family of size-z_tot independent sets, and
/// brute_force_opt against solve_exact (relative tolerance 1e-9 on the value,
/// identical association sets). Families with at most `exact_limit` members
/// are compared element-wise; larger ones by count and an order-independent
/// 128-bit fingerprint. Throws CapExceeded like enumerate_feasible.
[[nodiscard]] EquivalenceReport check_equivalence(const ConflictGraph& graph,
                                                  std::size_t slot_cap = FeasibleSetSpec::kDefaultSlotCap,
                                                  std::uint64_t exact_limit = 200000);

}  // namespace mcran::oracle
