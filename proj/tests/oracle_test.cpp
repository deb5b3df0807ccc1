#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcran/mwis_solver.hpp"
#include "mcran/oracle.hpp"
#include "test_support.hpp"

namespace mcran {
namespace {

using testing::random_tensor;
using testing::uniform_tensor;

constexpr Dimensions kTwoByTwo{2, 2, 2, 4};

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TEST(Oracle, SingleSlotTwoUsers) {
    for (auto mode : kAllModes) EXPECT_EQ(oracle::count_feasible({mode, {1, 1, 1, 2}}), 2U);
}

TEST(Oracle, TwoByTwoCounts) {
    EXPECT_EQ(oracle::count_feasible({CoordinationMode::Hybrid, kTwoByTwo}), 96U);
    // Independent permutations per PZ layer, and one user-to-BS bijection.
    EXPECT_EQ(oracle::count_feasible({CoordinationMode::SignalLevel, kTwoByTwo}), factorial(4) * factorial(4));
    EXPECT_EQ(oracle::count_feasible({CoordinationMode::SchedulingLevel, kTwoByTwo}), factorial(4));
}

TEST(Oracle, EnumeratesDistinctSortedSchedules) {
    std::set<std::vector<Association>> seen;
    oracle::enumerate_feasible({CoordinationMode::Hybrid, kTwoByTwo}, [&](std::span<const Association> s) {
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
        EXPECT_EQ(s.size(), 8U);
        seen.emplace(s.begin(), s.end());
    });
    EXPECT_EQ(seen.size(), 96U);
}

TEST(Oracle, CountsAreNested) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const Dimensions d = testing::random_small_dims(rng);
        const auto hybrid = oracle::count_feasible({CoordinationMode::Hybrid, d});
        EXPECT_LE(oracle::count_feasible({CoordinationMode::SchedulingLevel, d}), hybrid);
        EXPECT_LE(hybrid, oracle::count_feasible({CoordinationMode::SignalLevel, d}));
    }
}

TEST(Oracle, SingleSlotArgmax) {
    const Dimensions d{1, 1, 1, 3};
    const auto best = oracle::brute_force_opt({CoordinationMode::Hybrid, d}, make_tensor(d, {0.2, 0.9, 0.4}));
    ASSERT_TRUE(best);
    EXPECT_EQ(best->associations, (std::vector<Association>{{0, 1, 0, 0}}));
    EXPECT_DOUBLE_EQ(best->total_weight, 0.9);
}

TEST(Oracle, UniformWeightsPickLexicographicMinimum) {
    const double w = 0.75;
    const auto best = oracle::brute_force_opt({CoordinationMode::Hybrid, kTwoByTwo}, uniform_tensor(kTwoByTwo, w));
    ASSERT_TRUE(best);
    EXPECT_EQ(best->total_weight, 8 * w);
    std::vector<Association> smallest;
    oracle::enumerate_feasible({CoordinationMode::Hybrid, kTwoByTwo}, [&](std::span<const Association> s) {
        std::vector<Association> v(s.begin(), s.end());
        if (smallest.empty() || lex_less(v, smallest)) smallest = v;
    });
    EXPECT_EQ(best->associations, smallest);
}

TEST(Oracle, InfeasibleGivesNullopt) {
    const Dimensions d{2, 2, 1, 3};
    EXPECT_FALSE(oracle::brute_force_opt({CoordinationMode::Hybrid, d}, uniform_tensor(d)));
    EXPECT_EQ(oracle::count_feasible({CoordinationMode::Hybrid, d}), 0U);
    const Dimensions none{1, 1, 1, 0};
    EXPECT_FALSE(oracle::brute_force_opt({CoordinationMode::Hybrid, none}, make_tensor(none, {})));
}

TEST(Oracle, SingleEnumerationAgreesWithSeparateCalls) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 10; ++i) {
        const Dimensions d = testing::random_small_dims(rng);
        const auto t = random_tensor(d, rng);
        for (auto mode : kAllModes) {
            const auto both = oracle::brute_force({mode, d}, t);
            EXPECT_EQ(both.feasible_count, oracle::count_feasible({mode, d}));
            EXPECT_EQ(both.optimum, oracle::brute_force_opt({mode, d}, t));
        }
    }
}

TEST(Oracle, MatchesExactSolver) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        const Dimensions d = testing::random_small_dims(rng);
        const auto t = random_tensor(d, rng);
        for (auto mode : kAllModes) {
            const auto best = oracle::brute_force_opt({mode, d}, t);
            const auto r = solve_exact(build_graph(mode, t, d));
            ASSERT_EQ(best.has_value(), r.feasible());
            if (best) EXPECT_EQ(*best, r.schedule);
        }
    }
}

TEST(Oracle, CapExceeded) {
    EXPECT_THROW((void)oracle::count_feasible({CoordinationMode::Hybrid, {2, 2, 4, 4}}), oracle::CapExceeded);
    EXPECT_NO_THROW((void)oracle::count_feasible({CoordinationMode::Hybrid, {2, 2, 4, 4}, 16}));
}

TEST(CheckEquivalence, PassesOnTwoByTwo) {
    for (auto mode : kAllModes) {
        const auto report = oracle::check_equivalence(build_graph(mode, uniform_tensor(kTwoByTwo), kTwoByTwo));
        EXPECT_TRUE(report.passed());
        EXPECT_TRUE(report.exact_family_check);
        EXPECT_EQ(report.feasible_count, report.independent_count);
        ASSERT_TRUE(report.optimum);
        EXPECT_EQ(*report.optimum, 8.0);
    }
}

TEST(CheckEquivalence, FingerprintPathForLargeFamilies) {
    std::mt19937_64 rng(9);
    const auto t = random_tensor(kTwoByTwo, rng);
    const auto report = oracle::check_equivalence(build_graph(CoordinationMode::SignalLevel, t, kTwoByTwo), 12, 100);
    EXPECT_FALSE(report.exact_family_check);
    EXPECT_TRUE(report.passed());
}

TEST(CheckEquivalence, DetectsAMissingEdge) {
    // Without the edge between user 0 on BS 0 and user 0 on BS 1 (same PZ),
    // the graph admits a set the program forbids.
    const Dimensions d{1, 2, 1, 2};
    const auto full = build_graph(CoordinationMode::Hybrid, uniform_tensor(d), d);
    std::vector<std::vector<std::uint32_t>> adjacency(full.vertex_count());
    for (std::size_t v = 0; v < full.vertex_count(); ++v)
        for (auto w : full.neighbors(v))
            if (!((v == 0 && w == 1) || (v == 1 && w == 0))) adjacency[v].push_back(w);
    const ConflictGraph broken(CoordinationMode::Hybrid, d, std::vector<double>(4, 1.0), adjacency);
    const auto report = oracle::check_equivalence(broken);
    EXPECT_FALSE(report.same_family);
    EXPECT_FALSE(report.passed());
}

}  // namespace
}  // namespace mcran
