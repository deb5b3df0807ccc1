#include "mcran/mwis_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace mcran {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Slack on bound comparisons; covers summation-order rounding between the
// bound and the canonical totals.
double slack(double reference) { return 1e-12 * std::max(1.0, std::abs(reference)); }

bool pigeonhole_infeasible(const Dimensions& dims) { return dims.users < dims.bs_count(); }

// Per-slot candidate lists plus a count of chosen neighbors per vertex; a
// vertex is free while its count is zero.
class SlotState {
public:
    explicit SlotState(const ConflictGraph& graph)
        : graph_(graph), members_(graph.z_tot()), blocked_(graph.vertex_count(), 0), chosen_(graph.z_tot(), kUnassigned) {
        for (std::size_t v = 0; v < graph.vertex_count(); ++v)
            members_[slot_index(graph.dims(), graph.vertex(v))].push_back(static_cast<std::uint32_t>(v));
        for (auto& slot : members_) {
            std::stable_sort(slot.begin(), slot.end(),
                             [&](std::uint32_t a, std::uint32_t b) { return graph.weight(a) > graph.weight(b); });
        }
    }

    [[nodiscard]] std::size_t slot_count() const noexcept { return members_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t>& members(std::size_t slot) const { return members_[slot]; }
    [[nodiscard]] bool is_free(std::uint32_t v) const { return blocked_[v] == 0; }
    [[nodiscard]] std::uint32_t chosen(std::size_t slot) const { return chosen_[slot]; }

    void place(std::size_t slot, std::uint32_t v) {
        chosen_[slot] = v;
        for (std::uint32_t w : graph_.neighbors(v)) ++blocked_[w];
    }

    void unplace(std::size_t slot) {
        for (std::uint32_t w : graph_.neighbors(chosen_[slot])) --blocked_[w];
        chosen_[slot] = kUnassigned;
    }

    /// Heaviest free vertex of the slot (members are weight-sorted), or
    /// kUnassigned.
    [[nodiscard]] std::uint32_t best_free(std::size_t slot) const {
        for (std::uint32_t v : members_[slot])
            if (is_free(v)) return v;
        return kUnassigned;
    }

    [[nodiscard]] Schedule to_schedule() const {
        std::vector<Association> set;
        set.reserve(chosen_.size());
        for (std::uint32_t v : chosen_) set.push_back(graph_.vertex(v));
        return make_schedule(std::move(set), graph_.mode(), graph_.dims(), graph_.weights());
    }

private:
    const ConflictGraph& graph_;
    std::vector<std::vector<std::uint32_t>> members_;
    std::vector<int> blocked_;
    std::vector<std::uint32_t> chosen_;
};

class ExactSearch {
public:
    explicit ExactSearch(const ConflictGraph& graph) : graph_(graph), state_(graph) {}

    void run() { descend(0, 0.0); }

    [[nodiscard]] bool found() const noexcept { return found_; }
    [[nodiscard]] const Schedule& best() const noexcept { return best_; }
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void descend(std::size_t slot, double weight) {
        ++nodes_;
        if (slot == state_.slot_count()) {
            consider_leaf();
            return;
        }
        double bound = weight;
        for (std::size_t s = slot; s < state_.slot_count(); ++s) {
            const std::uint32_t v = state_.best_free(s);
            if (v == kUnassigned) return;
            bound += graph_.weight(v);
        }
        if (found_ && bound < best_.total_weight - slack(best_.total_weight)) return;

        for (std::uint32_t v : state_.members(slot)) {
            if (!state_.is_free(v)) continue;
            state_.place(slot, v);
            descend(slot + 1, weight + graph_.weight(v));
            state_.unplace(slot);
        }
    }

    void consider_leaf() {
        Schedule candidate = state_.to_schedule();
        if (!found_ || candidate.total_weight > best_.total_weight ||
            (candidate.total_weight == best_.total_weight && lex_less(candidate.associations, best_.associations))) {
            best_ = std::move(candidate);
            found_ = true;
        }
    }

    const ConflictGraph& graph_;
    SlotState state_;
    Schedule best_;
    bool found_ = false;
    std::uint64_t nodes_ = 0;
};

// Depth-first search for any complete assignment, heaviest users first, with
// forward checking on the remaining slots.
bool complete_feasibly(SlotState& state, std::size_t slot, std::uint64_t& nodes) {
    ++nodes;
    if (slot == state.slot_count()) return true;
    for (std::size_t s = slot; s < state.slot_count(); ++s)
        if (state.best_free(s) == kUnassigned) return false;
    for (std::uint32_t v : state.members(slot)) {
        if (!state.is_free(v)) continue;
        state.place(slot, v);
        if (complete_feasibly(state, slot + 1, nodes)) return true;
        state.unplace(slot);
    }
    return false;
}

// Greedy construction: each step places the heaviest free (slot, user) pair
// that leaves every open slot with a free user. On a dead end the most recent
// choice is replaced by the next-heaviest alternative. Gives up after a node
// budget, leaving the state partially assigned.
class GreedyDescent {
public:
    GreedyDescent(const ConflictGraph& graph, SlotState& state, std::uint64_t& nodes)
        : graph_(graph), state_(state), nodes_(nodes), budget_(nodes + 64 * (state.slot_count() + 1) * 64) {}

    bool run() { return descend(0); }

private:
    struct Candidate {
        std::size_t slot;
        std::uint32_t vertex;
    };

    bool open_slots_alive() const {
        for (std::size_t s = 0; s < state_.slot_count(); ++s)
            if (state_.chosen(s) == kUnassigned && state_.best_free(s) == kUnassigned) return false;
        return true;
    }

    bool descend(std::size_t placed) {
        if (placed == state_.slot_count()) return true;
        if (++nodes_ > budget_) return false;
        std::vector<Candidate> candidates;
        for (std::size_t s = 0; s < state_.slot_count(); ++s) {
            if (state_.chosen(s) != kUnassigned) continue;
            for (std::uint32_t v : state_.members(s))
                if (state_.is_free(v)) candidates.push_back({s, v});
        }
        std::stable_sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
            return graph_.weight(a.vertex) > graph_.weight(b.vertex);
        });
        for (const auto& c : candidates) {
            state_.place(c.slot, c.vertex);
            if (open_slots_alive() && descend(placed + 1)) return true;
            state_.unplace(c.slot);
            if (nodes_ > budget_) return false;
        }
        return false;
    }

    const ConflictGraph& graph_;
    SlotState& state_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
};

// One pass of pairwise re-assignment; returns true if any pair improved.
bool pairwise_pass(const ConflictGraph& graph, SlotState& state) {
    bool improved = false;
    const std::size_t slots = state.slot_count();
    for (std::size_t s1 = 0; s1 < slots; ++s1) {
        for (std::size_t s2 = s1 + 1; s2 < slots; ++s2) {
            const std::uint32_t old1 = state.chosen(s1);
            const std::uint32_t old2 = state.chosen(s2);
            const double current = graph.weight(old1) + graph.weight(old2);
            state.unplace(s1);
            state.unplace(s2);

            std::uint32_t best1 = old1;
            std::uint32_t best2 = old2;
            double best = current + slack(current);
            for (std::uint32_t v1 : state.members(s1)) {
                if (!state.is_free(v1)) continue;
                if (graph.weight(v1) + graph.weight(state.members(s2).front()) <= best) break;
                for (std::uint32_t v2 : state.members(s2)) {
                    if (!state.is_free(v2) || graph.adjacent(v1, v2)) continue;
                    const double pair = graph.weight(v1) + graph.weight(v2);
                    if (pair > best) {
                        best = pair;
                        best1 = v1;
                        best2 = v2;
                    }
                    break;  // members are weight-sorted: first compatible v2 is the best for v1
                }
            }
            state.place(s1, best1);
            state.place(s2, best2);
            improved = improved || best1 != old1 || best2 != old2;
        }
    }
    return improved;
}

}  // namespace

SolveReport solve_exact(const ConflictGraph& graph) {
    const auto start = Clock::now();
    SolveReport report;
    report.optimal = true;
    if (!pigeonhole_infeasible(graph.dims())) {
        ExactSearch search(graph);
        search.run();
        report.nodes_explored = search.nodes();
        if (search.found()) {
            report.status = SolveStatus::Feasible;
            report.schedule = search.best();
        }
    }
    report.wall_time = seconds_since(start);
    return report;
}

SolveReport solve_greedy(const ConflictGraph& graph, std::size_t local_search_passes) {
    const auto start = Clock::now();
    SolveReport report;
    report.optimal = false;
    if (pigeonhole_infeasible(graph.dims())) {
        report.wall_time = seconds_since(start);
        return report;
    }

    SlotState state(graph);
    GreedyDescent descent(graph, state, report.nodes_explored);
    if (!descent.run()) {
        for (std::size_t s = 0; s < state.slot_count(); ++s)
            if (state.chosen(s) != kUnassigned) state.unplace(s);
        if (!complete_feasibly(state, 0, report.nodes_explored)) {
            report.wall_time = seconds_since(start);
            return report;
        }
    }

    for (std::size_t pass = 0; pass < local_search_passes; ++pass) {
        ++report.nodes_explored;
        if (!pairwise_pass(graph, state)) break;
    }

    report.status = SolveStatus::Feasible;
    report.schedule = state.to_schedule();
    report.wall_time = seconds_since(start);
    return report;
}

}  // namespace mcran
