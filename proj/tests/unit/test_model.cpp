#include "posenergy/errors.hpp"
#include "posenergy/model.hpp"

#include <gtest/gtest.h>

#include <random>

namespace posenergy {
namespace {

TEST(GlobalPower, HederaMidBound) {
    EXPECT_NEAR(global_power_kw(26, (168.10 + 328.00) / 2), 6.449, 5e-4);
}

TEST(GlobalPower, EthereumMidBound) {
    EXPECT_NEAR(global_power_kw(5294, 85.03), 450.15, 5e-3);
}

TEST(GlobalPower, ZeroValidators) {
    EXPECT_EQ(global_power_kw(0, 509), 0.0);
}

TEST(EnergyPerTx, PublishedRows) {
    EXPECT_NEAR(energy_per_tx_kwh(26, 248.05, 568.45), 3.15e-6, 0.005e-6);
    EXPECT_NEAR(energy_per_tx_kwh(2512, 365.165, 493.00), 0.000517, 5e-7);
    EXPECT_NEAR(energy_per_tx_kwh(1227, 87.06, 8.70), 0.003411, 5e-7);
}

TEST(EnergyPerTx, ZeroThroughputIsDomainError) {
    EXPECT_THROW(energy_per_tx_kwh(10, 100, 0.0), DomainError);
    EXPECT_THROW(energy_per_tx_kwh(10, 100, -1.0), DomainError);
}

TEST(ModelProperties, BilinearAndConsistent) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> n_dist(0, 10000);
    std::uniform_real_distribution<double> p_dist(1, 600);
    std::uniform_real_distribution<double> l_dist(0.01, 10000);
    for (int i = 0; i < 1000; ++i) {
        const double n = n_dist(rng);
        const double p = p_dist(rng);
        const double l = l_dist(rng);
        const double g = global_power_kw(n, p);
        EXPECT_DOUBLE_EQ(global_power_kw(2 * n, p), 2 * g);
        EXPECT_DOUBLE_EQ(global_power_kw(n, 2 * p), 2 * g);

        const double direct = energy_per_tx_kwh(n, p, l);
        const double via_power = g * 1000.0 / (l * 3.6e6);
        if (direct != 0.0) {
            EXPECT_LE(std::abs(direct - via_power) / direct, 1e-12);
        }
        if (n > 0) {
            EXPECT_GT(direct, energy_per_tx_kwh(n, p, l * 1.001));
        }
    }
}

TEST(NetworkId, Validation) {
    EXPECT_NO_THROW(NetworkId("bnb"));
    EXPECT_NO_THROW(NetworkId("near-2"));
    EXPECT_THROW(NetworkId(""), InvalidArgument);
    EXPECT_THROW(NetworkId("Hedera"), InvalidArgument);
    EXPECT_THROW(NetworkId("bnb chain"), InvalidArgument);
}

TEST(Bounds, Validation) {
    ValidatorPowerBounds ok{NetworkId("x"), 1, 1, ""};
    EXPECT_NO_THROW(ok.validate());
    ValidatorPowerBounds inverted{NetworkId("x"), 2, 1, ""};
    EXPECT_THROW(inverted.validate(), InvalidArgument);
    ValidatorPowerBounds zero{NetworkId("x"), 0, 1, ""};
    EXPECT_THROW(zero.validate(), InvalidArgument);
    EXPECT_DOUBLE_EQ((ValidatorPowerBounds{NetworkId("x"), 168.10, 328.00, ""}.mid_w()), 248.05);
}

TEST(Profile, Validation) {
    ValidatorPowerBounds b{NetworkId("x"), 1, 2, ""};
    EXPECT_THROW((NetworkProfile{NetworkId("x"), b, 0.0}.validate()), InvalidArgument);
    EXPECT_THROW((NetworkProfile{NetworkId("y"), b, 10.0}.validate()), InvalidArgument);
    EXPECT_NO_THROW((NetworkProfile{NetworkId("x"), b, 10.0}.validate()));
}

} // namespace
} // namespace posenergy
