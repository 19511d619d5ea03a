#include <gtest/gtest.h>

#include <cmath>

#include "stochel/units.hpp"

namespace stochel {
namespace {

TEST(UnitSystem, AtomicDefaults) {
    const UnitSystem u = atomic_units();
    EXPECT_EQ(u.hbar, 1.0);
    EXPECT_EQ(u.mass, 1.0);
    EXPECT_EQ(u.charge, 1.0);
    EXPECT_EQ(u.light_speed, 137.035999084);
    EXPECT_EQ(u.alpha * u.light_speed, 1.0);
}

TEST(UnitSystem, AlphaConsistencyEnforced) {
    EXPECT_NO_THROW(UnitSystem(1.0, 1.0, 1.0, 137.035999084, 1.0 / 137.035999084));
    EXPECT_THROW(UnitSystem(1.0, 1.0, 1.0, 137.035999084, 0.008), std::invalid_argument);
    EXPECT_THROW(UnitSystem(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(UnitSystem(1.0, -1.0, 1.0, 1.0), std::invalid_argument);
}

TEST(UnitSystem, HandConstructedSystemsAccepted) {
    // Scaled systems with consistent alpha pass the constructor.
    const UnitSystem u(2.0, 3.0, 4.0, 5.0);
    EXPECT_NEAR(u.alpha, 16.0 / 10.0, 1e-15);
}

TEST(OscillationLength, AtomicValue) {
    // sqrt(1.5) / 137.035999084, frozen
    EXPECT_NEAR(oscillation_length(atomic_units()), 0.00893739513396657, 1e-17);
}

TEST(OscillationLength, SquaredRatioIsThreeHalves) {
    const UnitSystem u = atomic_units();
    const double lam = oscillation_length(u);
    const double compton = u.hbar / (u.mass * u.light_speed);
    EXPECT_NEAR(lam * lam / (compton * compton), 1.5, 1e-14);
}

TEST(OscillationLength, ScalingLaws) {
    const UnitSystem base = atomic_units();
    const UnitSystem double_c(1.0, 1.0, 1.0, 2.0 * base.light_speed);
    EXPECT_NEAR(oscillation_length(double_c), 0.5 * oscillation_length(base), 1e-18);

    const UnitSystem double_m(1.0, 2.0, 1.0, base.light_speed);
    EXPECT_NEAR(oscillation_length(double_m), 0.5 * oscillation_length(base), 1e-18);
}

}  // namespace
}  // namespace stochel
