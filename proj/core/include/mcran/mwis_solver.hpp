#pragma once

#include <cstddef>
#include <cstdint>

#include "mcran/conflict_graph.hpp"
#include "mcran/schedule.hpp"

namespace mcran {

enum class SolveStatus { Feasible, Infeasible };

struct SolveReport {
    SolveStatus status = SolveStatus::Infeasible;
    Schedule schedule;           // empty when infeasible
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    double wall_time = 0.0;      // seconds

    [[nodiscard]] bool feasible() const noexcept { return status == SolveStatus::Feasible; }
};

/// Maximum-weight independent set of size exactly z_tot.
///
/// Branches over the (c, b, z) slots in lexicographic order and picks one
/// non-conflicting user per slot, trying users by decreasing weight. A node is
/// pruned when its weight plus, for every remaining slot, the largest weight
/// still compatible with the partial assignment cannot reach the incumbent.
/// Among equal-weight optima the lexicographically smallest set is returned.
///
/// Infeasible is reported without search when U < C*B: every PZ index needs
/// C*B distinct users in all three modes.
[[nodiscard]] SolveReport solve_exact(const ConflictGraph& graph);

/// Slot-wise greedy followed by `local_search_passes` rounds of pairwise
/// slot re-assignment. Never better than solve_exact; optimal is false.
[[nodiscard]] SolveReport solve_greedy(const ConflictGraph& graph, std::size_t local_search_passes = 2);

}  // namespace mcran
