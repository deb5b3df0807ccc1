#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mcran/network_model.hpp"

namespace mcran {
namespace {

NetworkConfig table_defaults(std::size_t C, std::size_t B, std::size_t Z, std::size_t U) {
    NetworkConfig config;
    config.dims = {C, B, Z, U};
    return config;
}

TEST(NetworkConfig, RejectsInvalidValues) {
    NetworkConfig config = table_defaults(1, 1, 1, 1);
    EXPECT_NO_THROW(config.validate());

    auto bad = config;
    bad.dims.clouds = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = config;
    bad.bandwidth_hz = 0.0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = config;
    bad.cell_distance = -1.0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    bad = config;
    bad.pathloss_exponent = 1.5;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Sinr, SingleBaseStationHasNoInterference) {
    const auto inst = make_instance({1, 1, 1, 1}, {1.0}, 0.01, 1.0, {0.25});
    EXPECT_DOUBLE_EQ(sinr(inst, {0, 0, 0, 0}), 25.0);
}

TEST(Sinr, TwoBaseStationsEqualLinks) {
    // C = 1, B = 2, Z = 1, U = 1: both links have unit gain.
    const auto inst = make_instance({1, 2, 1, 1}, {1.0, 1.0}, 1.0, 1.0, {1.0, 1.0});
    EXPECT_DOUBLE_EQ(sinr(inst, {0, 0, 0, 0}), 0.5);
    EXPECT_DOUBLE_EQ(sinr(inst, {0, 0, 1, 0}), 0.5);
}

TEST(Sinr, InterferenceAcrossCloudsCounts) {
    // Two clouds with one BS each; the other cloud's BS interferes too.
    const auto inst = make_instance({2, 1, 1, 1}, {1.0, 1.0}, 1.0, 1.0, {1.0, 1.0});
    EXPECT_DOUBLE_EQ(sinr(inst, {0, 0, 0, 0}), 0.5);
}

TEST(Sinr, OutOfRangeThrows) {
    const auto inst = make_instance({1, 1, 1, 1}, {1.0}, 0.01, 1.0, {0.25});
    EXPECT_THROW((void)sinr(inst, {0, 1, 0, 0}), std::out_of_range);
    EXPECT_THROW((void)sinr(inst, {0, 0, 0, 1}), std::out_of_range);
}

TEST(Sinr, DecreasesWhenInterferingGainGrows) {
    NetworkConfig config = table_defaults(2, 2, 2, 3);
    config.rng_seed = 5;
    const NetworkInstance base = generate_instance(config);
    std::mt19937_64 rng(99);
    for (std::size_t i = 0; i < base.channel_gain.size(); ++i) {
        const Association served = association_at(base.dims(), i);
        // Bump one interfering link of the same user on the same PZ.
        const Association interferer{served.cloud ^ 1U, served.user, served.bs, served.pz};
        NetworkInstance bumped = base;
        bumped.channel_gain[association_index(base.dims(), interferer)] *= 1.5 + std::uniform_real_distribution<>(0, 1)(rng);
        EXPECT_LT(sinr(bumped, served), sinr(base, served));
    }
}

TEST(Sinr, OtherPzGainsDoNotMatter) {
    NetworkConfig config = table_defaults(2, 2, 3, 4);
    const NetworkInstance base = generate_instance(config);
    NetworkInstance perturbed = base;
    for (std::size_t i = 0; i < perturbed.channel_gain.size(); ++i)
        if (association_at(base.dims(), i).pz != 1) perturbed.channel_gain[i] *= 7.0;
    for (std::size_t i = 0; i < base.channel_gain.size(); ++i) {
        const Association a = association_at(base.dims(), i);
        if (a.pz == 1) EXPECT_EQ(sinr(perturbed, a), sinr(base, a));
    }
}

TEST(GenerateInstance, TableDefaultsShape) {
    const NetworkInstance inst = generate_instance(table_defaults(3, 3, 5, 24));
    ASSERT_EQ(inst.channel_gain.size(), 1080U);
    for (double g : inst.channel_gain) {
        EXPECT_TRUE(std::isfinite(g));
        EXPECT_GT(g, 0.0);
    }
    EXPECT_EQ(inst.bs_positions.size(), 9U);
    EXPECT_EQ(inst.user_positions.size(), 24U);
    EXPECT_EQ(inst.power.size(), 45U);
}

TEST(GenerateInstance, PowerAndNoiseFromPsd) {
    const NetworkInstance inst = generate_instance(table_defaults(1, 1, 4, 1));
    const double per_pz_band = 1.0e7 / 4.0;
    EXPECT_NEAR(inst.power[0], std::pow(10.0, (-42.60 - 30.0) / 10.0) * per_pz_band, 1e-18);
    EXPECT_NEAR(inst.noise_power, std::pow(10.0, (-168.60 - 30.0) / 10.0) * per_pz_band, 1e-30);
    EXPECT_DOUBLE_EQ(inst.sinr_gap, 1.0);
}

TEST(GenerateInstance, SameSeedIsBitIdentical) {
    NetworkConfig config = table_defaults(3, 2, 2, 9);
    config.rng_seed = 1234;
    const NetworkInstance a = generate_instance(config);
    const NetworkInstance b = generate_instance(config);
    EXPECT_EQ(a.channel_gain, b.channel_gain);
    ASSERT_EQ(a.user_positions.size(), b.user_positions.size());
    for (std::size_t u = 0; u < a.user_positions.size(); ++u) {
        EXPECT_EQ(a.user_positions[u].x, b.user_positions[u].x);
        EXPECT_EQ(a.user_positions[u].y, b.user_positions[u].y);
    }
    config.rng_seed = 1235;
    EXPECT_NE(generate_instance(config).channel_gain, a.channel_gain);
}

TEST(GenerateInstance, UsersStayInsideTheirCell) {
    NetworkConfig config = table_defaults(7, 1, 1, 70);
    const NetworkInstance inst = generate_instance(config);
    for (std::size_t u = 0; u < inst.user_positions.size(); ++u) {
        // B = 1 puts the BS at the cell center; the hexagon's circumradius
        // is d / sqrt(3).
        const Point& center = inst.bs_positions[u % 7];
        const double r = std::hypot(inst.user_positions[u].x - center.x, inst.user_positions[u].y - center.y);
        EXPECT_LE(r, config.cell_distance / std::sqrt(3.0) + 1e-9);
    }
}

TEST(GenerateInstance, HexagonalCenters) {
    const NetworkInstance inst = generate_instance(table_defaults(7, 1, 1, 7));
    // Ring 1 cells are one cell distance from the central cell.
    for (std::size_t c = 1; c < 7; ++c)
        EXPECT_NEAR(std::hypot(inst.bs_positions[c].x, inst.bs_positions[c].y), 500.0, 1e-9);
}

TEST(GenerateInstance, DeterministicModelIsSymmetricForEquidistantUsers) {
    NetworkConfig config = table_defaults(1, 2, 2, 2);
    config.fading = Fading::None;
    config.shadowing_sigma_db = 0.0;
    // The two BSs sit at (+125, 0) and (-125, 0); users mirrored across the
    // x axis are equidistant from both.
    const Point users[] = {{0.0, 90.0}, {0.0, -90.0}};
    const NetworkInstance inst = generate_instance(config, users);
    for (std::uint32_t b = 0; b < 2; ++b)
        for (std::uint32_t z = 0; z < 2; ++z) EXPECT_EQ(inst.gain({0, 0, b, z}), inst.gain({0, 1, b, z}));
    const UtilityTensor t = utility_tensor(inst);
    for (std::uint32_t b = 0; b < 2; ++b)
        for (std::uint32_t z = 0; z < 2; ++z) EXPECT_EQ(t.at({0, 0, b, z}), t.at({0, 1, b, z}));
}

TEST(GenerateInstance, NoFadingNoShadowingGainsDependOnlyOnDistance) {
    NetworkConfig config = table_defaults(2, 2, 3, 6);
    config.fading = Fading::None;
    config.shadowing_sigma_db = 0.0;
    const NetworkInstance inst = generate_instance(config);
    for (std::size_t i = 0; i < inst.channel_gain.size(); ++i) {
        const Association a = association_at(inst.dims(), i);
        const Point& bs = inst.bs_positions[a.cloud * 2 + a.bs];
        const Point& ue = inst.user_positions[a.user];
        const double d = std::max(10.0, std::hypot(bs.x - ue.x, bs.y - ue.y));
        const double expected = db_to_linear(-(37.0 + 35.0 * std::log10(d)));
        EXPECT_NEAR(inst.channel_gain[i], expected, 1e-12 * expected);
    }
}

TEST(UtilityTensor, LogOfOnePlusSinr) {
    // SINR = 1 -> 1 bit/s/Hz; zero gain -> 0.
    const auto inst = make_instance({1, 2, 1, 1}, {1.0, 1.0}, 1.0, 1.0, {1.0, 0.0});
    const UtilityTensor t = utility_tensor(inst);
    EXPECT_DOUBLE_EQ(t.at({0, 0, 0, 0}), 1.0);
    EXPECT_DOUBLE_EQ(t.at({0, 0, 1, 0}), 0.0);
}

TEST(UtilityTensor, MatchesEntrywiseRecomputation) {
    NetworkConfig config = table_defaults(3, 2, 3, 8);
    config.rng_seed = 42;
    const NetworkInstance inst = generate_instance(config);
    const UtilityTensor t = utility_tensor(inst);
    ASSERT_EQ(t.value.size(), inst.dims().total_associations());
    for (std::size_t i = 0; i < t.value.size(); ++i) {
        const double expected = std::log2(1.0 + sinr(inst, association_at(inst.dims(), i)));
        EXPECT_GE(t.value[i], 0.0);
        EXPECT_NEAR(t.value[i], expected, 1e-12 * std::max(1.0, expected));
    }
}

TEST(UtilityTensor, MakeTensorChecksShape) {
    EXPECT_THROW((void)make_tensor({1, 1, 1, 2}, {1.0}), std::invalid_argument);
    EXPECT_THROW((void)make_tensor({1, 1, 1, 1}, {std::nan("")}), std::invalid_argument);
}

TEST(MakeInstance, RejectsBadInputs) {
    EXPECT_THROW((void)make_instance({1, 1, 1, 1}, {0.0}, 1.0, 1.0, {1.0}), std::invalid_argument);
    EXPECT_THROW((void)make_instance({1, 1, 1, 1}, {1.0}, 0.0, 1.0, {1.0}), std::invalid_argument);
    EXPECT_THROW((void)make_instance({1, 1, 1, 1}, {1.0}, 1.0, 1.0, {-1.0}), std::invalid_argument);
    EXPECT_THROW((void)make_instance({1, 1, 1, 2}, {1.0}, 1.0, 1.0, {1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace mcran
