#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "mcran/association.hpp"
#include "mcran/network_model.hpp"

namespace mcran {

/// Edge rule between two distinct associations.
///
///   Hybrid:          same user in different clouds, or same (c, b, z) slot,
///                    or same user on the same PZ index.
///   SignalLevel:     same (c, b, z) slot, or same user on the same PZ index.
///   SchedulingLevel: same user in different clouds, or same (c, b, z) slot,
///                    or same user on different BS indices.
///
/// Throws std::invalid_argument when a == b.
[[nodiscard]] bool are_conflicting(CoordinationMode mode, const Association& a, const Association& b);

/// Undirected conflict graph over all C*U*B*Z associations. Vertex i is the
/// i-th association in lexicographic order; weights are the utilities.
class ConflictGraph {
public:
    /// Above this many vertices only neighbor lists are kept.
    static constexpr std::size_t kDenseLimit = 4096;

    ConflictGraph(CoordinationMode mode, Dimensions dims, std::vector<double> weights,
                  std::vector<std::vector<std::uint32_t>> adjacency);

    [[nodiscard]] CoordinationMode mode() const noexcept { return mode_; }
    [[nodiscard]] const Dimensions& dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return neighbor_data_.size() / 2; }
    [[nodiscard]] std::size_t z_tot() const noexcept { return dims_.total_slots(); }

    [[nodiscard]] const Association& vertex(std::size_t v) const { return vertices_[v]; }
    [[nodiscard]] std::span<const Association> vertices() const noexcept { return vertices_; }
    [[nodiscard]] double weight(std::size_t v) const { return weights_[v]; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

    /// Sorted neighbor indices of v.
    [[nodiscard]] std::span<const std::uint32_t> neighbors(std::size_t v) const {
        return {neighbor_data_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    [[nodiscard]] bool adjacent(std::size_t v, std::size_t w) const;

    /// Vertex index of the association (c, u, b, z).
    [[nodiscard]] std::size_t index_of(const Association& a) const { return association_index(dims_, a); }

    /// Copy of this graph with every weight multiplied by `factor`.
    [[nodiscard]] ConflictGraph scaled(double factor) const;

private:
    CoordinationMode mode_;
    Dimensions dims_;
    std::vector<Association> vertices_;
    std::vector<double> weights_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> neighbor_data_;
    std::vector<std::uint64_t> dense_;  // row-major bit matrix, empty above kDenseLimit
    std::size_t words_per_row_ = 0;
};

/// Builds the graph of `mode` with vertex weights taken from `tensor`.
/// Throws std::invalid_argument when the tensor is not shaped for `dims`.
[[nodiscard]] ConflictGraph build_graph(CoordinationMode mode, const UtilityTensor& tensor, const Dimensions& dims);

/// Number of independent sets of exactly `size` vertices, by plain subset
/// search over vertex indices (no use of the slot structure). Exponential;
/// meant for small graphs.
[[nodiscard]] std::uint64_t count_independent_sets(const ConflictGraph& graph, std::size_t size);

/// Calls `visit` with every independent set of size z_tot (sorted vertex
/// indices). Since each (c, b, z) slot is a clique, such a set picks exactly
/// one vertex per slot; the search branches slot by slot and checks
/// adjacency against the graph only.
void for_each_full_independent_set(const ConflictGraph& graph,
                                   const std::function<void(std::span<const std::uint32_t>)>& visit);

/// Plain-text edge list:
///   vertices N mode M
///   <v_index> <weight>      (N lines)
///   <i> <j>                 (one per edge, i < j, sorted)
/// Weights use 17 significant digits.
void write_edge_list(const ConflictGraph& graph, std::ostream& out);

}  // namespace mcran
