#include "mcran/conflict_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace mcran {

namespace {

bool same_slot(const Association& a, const Association& b) {
    return a.cloud == b.cloud && a.bs == b.bs && a.pz == b.pz;
}

bool same_user_other_cloud(const Association& a, const Association& b) {
    return a.user == b.user && a.cloud != b.cloud;
}

bool same_user_same_pz(const Association& a, const Association& b) {
    return a.user == b.user && a.pz == b.pz;
}

bool same_user_other_bs(const Association& a, const Association& b) {
    return a.user == b.user && a.bs != b.bs;
}

}  // namespace

bool are_conflicting(CoordinationMode mode, const Association& a, const Association& b) {
    if (a == b) throw std::invalid_argument("are_conflicting: an association does not conflict with itself");
    switch (mode) {
    case CoordinationMode::Hybrid:
        return same_user_other_cloud(a, b) || same_slot(a, b) || same_user_same_pz(a, b);
    case CoordinationMode::SignalLevel:
        return same_slot(a, b) || same_user_same_pz(a, b);
    case CoordinationMode::SchedulingLevel:
        return same_user_other_cloud(a, b) || same_slot(a, b) || same_user_other_bs(a, b);
    }
    return false;
}

ConflictGraph::ConflictGraph(CoordinationMode mode, Dimensions dims, std::vector<double> weights,
                             std::vector<std::vector<std::uint32_t>> adjacency)
    : mode_(mode), dims_(dims), vertices_(enumerate_associations(dims)), weights_(std::move(weights)) {
    const std::size_t n = vertices_.size();
    if (weights_.size() != n || adjacency.size() != n)
        throw std::invalid_argument("ConflictGraph: weights and adjacency must have one entry per association");

    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& row = adjacency[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("ConflictGraph: duplicate edge");
        offsets_[v + 1] = offsets_[v] + row.size();
    }
    neighbor_data_.reserve(offsets_[n]);
    for (const auto& row : adjacency) neighbor_data_.insert(neighbor_data_.end(), row.begin(), row.end());

    for (std::size_t v = 0; v < n; ++v) {
        for (std::uint32_t w : neighbors(v)) {
            if (w >= n || w == v) throw std::invalid_argument("ConflictGraph: bad neighbor index or self-loop");
            const auto back = neighbors(w);
            if (!std::binary_search(back.begin(), back.end(), static_cast<std::uint32_t>(v)))
                throw std::invalid_argument("ConflictGraph: adjacency is not symmetric");
        }
    }

    if (n <= kDenseLimit) {
        words_per_row_ = (n + 63) / 64;
        dense_.assign(n * words_per_row_, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (std::uint32_t w : neighbors(v)) dense_[v * words_per_row_ + w / 64] |= std::uint64_t{1} << (w % 64);
    }
}

bool ConflictGraph::adjacent(std::size_t v, std::size_t w) const {
    if (!dense_.empty()) return (dense_[v * words_per_row_ + w / 64] >> (w % 64)) & 1U;
    const auto row = neighbors(v);
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(w));
}

ConflictGraph ConflictGraph::scaled(double factor) const {
    ConflictGraph copy = *this;
    for (double& w : copy.weights_) w *= factor;
    return copy;
}

ConflictGraph build_graph(CoordinationMode mode, const UtilityTensor& tensor, const Dimensions& dims) {
    if (tensor.dims != dims || tensor.value.size() != dims.total_associations())
        throw std::invalid_argument("build_graph: utility tensor shape does not match the network dimensions");
    const auto vertices = enumerate_associations(dims);
    const std::size_t n = vertices.size();
    std::vector<std::vector<std::uint32_t>> adjacency(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (are_conflicting(mode, vertices[i], vertices[j])) {
                adjacency[i].push_back(static_cast<std::uint32_t>(j));
                adjacency[j].push_back(static_cast<std::uint32_t>(i));
            }
        }
    }
    return ConflictGraph(mode, dims, tensor.value, std::move(adjacency));
}

namespace {

struct SubsetSearch {
    const ConflictGraph& graph;
    std::size_t target;
    std::vector<std::uint32_t> chosen;
    std::uint64_t count = 0;

    void run(std::size_t next) {
        if (chosen.size() == target) {
            ++count;
            return;
        }
        const std::size_t n = graph.vertex_count();
        for (std::size_t v = next; v + (target - chosen.size()) <= n; ++v) {
            bool free = true;
            for (std::uint32_t w : chosen) {
                if (graph.adjacent(v, w)) {
                    free = false;
                    break;
                }
            }
            if (!free) continue;
            chosen.push_back(static_cast<std::uint32_t>(v));
            run(v + 1);
            chosen.pop_back();
        }
    }
};

struct SlotSearch {
    const ConflictGraph& graph;
    const std::function<void(std::span<const std::uint32_t>)>& visit;
    std::vector<std::vector<std::uint32_t>> slot_members;
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> sorted;

    void run(std::size_t slot) {
        if (slot == slot_members.size()) {
            sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            visit(sorted);
            return;
        }
        for (std::uint32_t v : slot_members[slot]) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](std::uint32_t w) { return graph.adjacent(v, w); }))
                continue;
            chosen.push_back(v);
            run(slot + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::uint64_t count_independent_sets(const ConflictGraph& graph, std::size_t size) {
    SubsetSearch search{graph, size, {}, 0};
    search.chosen.reserve(size);
    search.run(0);
    return search.count;
}

void for_each_full_independent_set(const ConflictGraph& graph,
                                   const std::function<void(std::span<const std::uint32_t>)>& visit) {
    SlotSearch search{graph, visit, std::vector<std::vector<std::uint32_t>>(graph.z_tot()), {}, {}};
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
        search.slot_members[slot_index(graph.dims(), graph.vertex(v))].push_back(static_cast<std::uint32_t>(v));
    search.run(0);
}

void write_edge_list(const ConflictGraph& graph, std::ostream& out) {
    out << "vertices " << graph.vertex_count() << " mode " << to_string(graph.mode()) << '\n';
    char buffer[64];
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        std::snprintf(buffer, sizeof buffer, "%.17g", graph.weight(v));
        out << v << ' ' << buffer << '\n';
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
        for (std::uint32_t w : graph.neighbors(v))
            if (w > v) out << v << ' ' << w << '\n';
}

}  // namespace mcran
