#pragma once

#include <span>
#include <vector>

#include "mcran/association.hpp"

namespace mcran {

class ConflictGraph;

/// A set of associations chosen for transmission, kept sorted
/// lexicographically.
struct Schedule {
    std::vector<Association> associations;
    CoordinationMode mode = CoordinationMode::Hybrid;
    double total_weight = 0.0;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Sum of the weights of `associations` accumulated in (c, b, z) slot order,
/// starting from 0.0. Every solver reports totals through this function so
/// equal sets always carry bit-identical totals.
[[nodiscard]] double canonical_weight(std::span<const Association> associations, const Dimensions& dims,
                                      std::span<const double> weights);

/// Builds a Schedule from an arbitrary association list: sorts it and fills
/// total_weight with canonical_weight.
[[nodiscard]] Schedule make_schedule(std::vector<Association> associations, CoordinationMode mode,
                                     const Dimensions& dims, std::span<const double> weights);

/// Tie-break order between equal-weight schedules: lexicographic comparison of
/// the sorted association lists. Returns true if `a` precedes `b`.
[[nodiscard]] bool lex_less(std::span<const Association> a, std::span<const Association> b);

/// True iff `s` is a feasible schedule for its mode on `graph`'s network.
///
/// Checks, in order: size is C*B*Z, indices are in range, no duplicates, every
/// (c, b, z) slot is covered exactly once, no pair is adjacent in `graph`, and
/// the integer-program constraints of the mode hold when evaluated directly on
/// the indicator variables X_{cubz}, Y and Z derived from the set.
[[nodiscard]] bool validate_schedule(const Schedule& s, const ConflictGraph& graph);

/// Only the integer-program part of validate_schedule: evaluates the mode's
/// constraints on the indicator variables, without consulting any graph.
[[nodiscard]] bool satisfies_program(std::span<const Association> s, CoordinationMode mode, const Dimensions& dims);

}  // namespace mcran
