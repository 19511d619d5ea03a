#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "stochel/cloud.hpp"
#include "stochel/quadrature.hpp"
#include "stochel/wavestate.hpp"

namespace stochel {
namespace {

TEST(WaveState, Eigenvalues) {
    EXPECT_EQ(WaveState::hydrogen_1s(1.0).energy, -0.5);
    EXPECT_EQ(WaveState::hydrogen_1s(2.0).energy, -2.0);
    EXPECT_EQ(WaveState::harmonic_ground(1.0, 1).energy, 0.5);
    EXPECT_EQ(WaveState::harmonic_ground(2.0, 3).energy, 3.0);
    EXPECT_EQ(WaveState::plane_wave(2.0).energy, 2.0);
    EXPECT_FALSE(WaveState::plane_wave(1.0).normalizable);
}

TEST(WaveState, AmplitudeNormalization) {
    for (double z : {1.0, 3.0}) {
        const WaveState s = WaveState::hydrogen_1s(z);
        auto radial = [&s](double r) {
            const double a = s.amplitude(Vec3{r, 0.0, 0.0});
            return 4.0 * std::numbers::pi * r * r * a * a;
        };
        EXPECT_NEAR(integrate(radial, 0.0, kInfiniteUpperBound), 1.0, 1e-10) << "Z = " << z;
    }
    const WaveState h = WaveState::harmonic_ground(2.5, 1);
    auto line = [&h](double x) {
        const double a = h.amplitude(Vec3{x, 0.0, 0.0});
        return a * a;
    };
    EXPECT_NEAR(2.0 * integrate(line, 0.0, kInfiniteUpperBound), 1.0, 1e-10);
}

TEST(DecomposeAction, HydrogenLinearExponent) {
    const WaveState s = WaveState::hydrogen_1s(1.0);
    const ComplexAction a = decompose_action(s);
    EXPECT_EQ(a.s2(Vec3{0.0, 0.0, 0.0}), 0.0);  // reference point
    EXPECT_NEAR(a.s2(Vec3{1.0, 0.0, 0.0}), 1.0, 1e-12);  // hbar * Z * r
    EXPECT_NEAR(a.s2(Vec3{0.0, 2.5, 0.0}), 2.5, 1e-12);

    const WaveState s2 = WaveState::hydrogen_1s(2.0);
    EXPECT_NEAR(decompose_action(s2).s2(Vec3{1.0, 0.0, 0.0}), 2.0, 1e-12);
}

TEST(DecomposeAction, HarmonicQuadraticExponent) {
    const double omega = 2.0;
    const WaveState s = WaveState::harmonic_ground(omega, 1);
    const ComplexAction a = decompose_action(s);
    const double lam2 = 1.0 / omega;  // hbar/(m omega)
    for (double x : {0.0, 0.3, 1.0, 2.0}) {
        EXPECT_NEAR(a.s2(Vec3{x, 0.0, 0.0}), x * x / (2.0 * lam2), 1e-12) << "x = " << x;
    }
}

TEST(DecomposeAction, PlaneWavePurePhase) {
    const WaveState s = WaveState::plane_wave(1.5);
    const ComplexAction a = decompose_action(s);
    EXPECT_EQ(a.s2(Vec3{3.0, 0.0, 0.0}), 0.0);
    EXPECT_EQ(a.norm_constant, 1.0);
    // S1 = hbar k x - E t with E = k^2/2
    EXPECT_NEAR(a.s1(Vec3{2.0, 0.0, 0.0}, 1.0), 1.5 * 2.0 - 1.125, 1e-14);
}

TEST(DecomposeAction, ReconstructionInvariant) {
    for (const WaveState& s :
         {WaveState::hydrogen_1s(1.0), WaveState::hydrogen_1s(5.0),
          WaveState::harmonic_ground(1.0, 1), WaveState::harmonic_ground(0.3, 3)}) {
        const ComplexAction a = decompose_action(s);
        const double scale = s.decay_length();
        for (int i = 1; i <= 60; ++i) {
            const Vec3 p{0.13 * i * scale, 0.07 * i * scale, 0.02 * i * scale};
            const double rebuilt = a.norm_constant * std::exp(-a.s2(p) / s.units.hbar);
            const double amp = s.amplitude(p);
            ASSERT_NEAR(rebuilt, amp, 1e-12 * amp);
        }
    }
}

TEST(DecomposeAction, ZeroAmplitudeError) {
    const WaveState s = WaveState::hydrogen_1s(1.0);
    const ComplexAction a = decompose_action(s);
    // e^{-r} underflows to zero far out; the contract is an explicit error.
    EXPECT_THROW(a.s2(Vec3{1e4, 0.0, 0.0}), std::domain_error);
}

TEST(VelocityFields, HydrogenOsmoticConstantOutward) {
    for (double z : {1.0, 2.0}) {
        const VelocityField f = velocity_fields(WaveState::hydrogen_1s(z));
        for (const Vec3& p : {Vec3{1.0, 0.0, 0.0}, Vec3{0.2, -0.4, 1.1}, Vec3{0.0, 3.0, 4.0}}) {
            const Vec3 u = f.osmotic(p);
            EXPECT_NEAR(u.norm(), z, 1e-13);
            EXPECT_GT(u.dot(p), 0.0);  // radially outward
            const Vec3 v = f.current(p);
            EXPECT_EQ(v.norm(), 0.0);  // stationary real state
        }
    }
}

TEST(VelocityFields, PlaneWaveAndHarmonic) {
    const VelocityField plane = velocity_fields(WaveState::plane_wave(0.7));
    EXPECT_EQ(plane.current(Vec3{5.0, 0.0, 0.0}).x, 0.7);
    EXPECT_EQ(plane.osmotic(Vec3{5.0, 0.0, 0.0}).norm(), 0.0);

    const double omega = 1.7;
    const VelocityField osc = velocity_fields(WaveState::harmonic_ground(omega, 1));
    for (double x : {-1.0, 0.4, 2.0}) {
        EXPECT_NEAR(osc.osmotic(Vec3{x, 0.0, 0.0}).x, omega * x, 1e-13);
    }
}

TEST(ForwardBackward, ConventionAndMidpointIdentities) {
    // hydrogen at r = a0: v+ = -Z rhat, v- = +Z rhat
    const WaveState s = WaveState::hydrogen_1s(1.0);
    const auto [vp, vm] = forward_backward_velocities(s, Vec3{1.0, 0.0, 0.0});
    EXPECT_NEAR(vp.x, -1.0, 1e-13);
    EXPECT_NEAR(vm.x, 1.0, 1e-13);
    // midpoint identities hold exactly as computed
    EXPECT_EQ(0.5 * (vp.x + vm.x), velocity_fields(s).current(Vec3{1.0, 0.0, 0.0}).x);

    const WaveState h = WaveState::harmonic_ground(2.0, 1);
    const auto [hp, hm] = forward_backward_velocities(h, Vec3{0.5, 0.0, 0.0});
    EXPECT_NEAR(hp.x, -2.0 * 0.5, 1e-13);
    EXPECT_NEAR(hm.x, 2.0 * 0.5, 1e-13);

    const WaveState pw = WaveState::plane_wave(1.1);
    const auto [pp, pm] = forward_backward_velocities(pw, Vec3{0.0, 0.0, 0.0});
    EXPECT_EQ(pp.x, pm.x);
    EXPECT_NEAR(pp.x, 1.1, 1e-15);
}

TEST(HamiltonJacobi, MadelungVanishesOnEigenstates) {
    for (double z : {1.0, 2.0, 5.0}) {
        const WaveState s = WaveState::hydrogen_1s(z);
        const auto grid = log_grid(0.05 * s.decay_length(), 8.0 * s.decay_length(), 50);
        for (double r : grid) {
            ASSERT_NEAR(hamilton_jacobi_residual(s, Vec3{r, 0.0, 0.0}, HjVariant::madelung),
                        0.0, 1e-10)
                << "Z = " << z << ", r = " << r;
        }
    }
    const WaveState h = WaveState::harmonic_ground(1.3, 1);
    for (int i = 0; i < 50; ++i) {
        const double x = (-3.0 + 6.0 * i / 49.0) * h.decay_length();
        ASSERT_NEAR(hamilton_jacobi_residual(h, Vec3{x, 0.0, 0.0}, HjVariant::madelung), 0.0,
                    1e-10);
    }
}

TEST(HamiltonJacobi, PaperVariantResidualAtHalfBohr) {
    const WaveState s = WaveState::hydrogen_1s(1.0);
    // E - [(grad S1)^2/2m + (grad S2)^2/2m + U] = -0.5 - (0.5 - 2) = 1.0
    EXPECT_NEAR(hamilton_jacobi_residual(s, Vec3{0.5, 0.0, 0.0}, HjVariant::augmented), 1.0,
                1e-12);
}

TEST(HamiltonJacobi, ClassicalPlaneWaveExact) {
    const WaveState pw = WaveState::plane_wave(2.0);
    EXPECT_EQ(hamilton_jacobi_residual(pw, Vec3{7.0, 0.0, 0.0}, HjVariant::classical), 0.0);
}

TEST(HamiltonJacobi, HydrogenOriginExcluded) {
    const WaveState s = WaveState::hydrogen_1s(1.0);
    EXPECT_THROW(hamilton_jacobi_residual(s, Vec3{0.0, 0.0, 0.0}, HjVariant::madelung),
                 std::domain_error);
    EXPECT_THROW(s.external_potential(Vec3{0.0, 0.0, 0.0}), std::domain_error);
}

TEST(HamiltonJacobi, PaperResidualWeightedMeanVanishes) {
    for (double z : {1.0, 2.0, 5.0}) {
        const WaveState s = WaveState::hydrogen_1s(z);
        auto integrand = [&s](double r) {
            const Vec3 p{r, 0.0, 0.0};
            const double amp = s.amplitude(p);
            return 4.0 * std::numbers::pi * r * r * amp * amp *
                   hamilton_jacobi_residual(s, p, HjVariant::augmented);
        };
        EXPECT_NEAR(integrate(integrand, 0.0, kInfiniteUpperBound), 0.0, 1e-8) << "Z = " << z;
    }
}

TEST(EnergyBudget, HydrogenSplitAndTotal) {
    const WaveState s = WaveState::hydrogen_1s(1.0);
    const EnergyBudget b = energy_budget(s);
    EXPECT_NEAR(b.kinetic_current, 0.0, 1e-12);
    EXPECT_NEAR(b.kinetic_osmotic, 0.5, 1e-8);
    EXPECT_NEAR(b.potential, -1.0, 1e-8);
    EXPECT_NEAR(b.total, -0.5, 1e-8);
}

TEST(EnergyBudget, HarmonicSplitAndTotal) {
    const WaveState s = WaveState::harmonic_ground(1.0, 1);
    const EnergyBudget b = energy_budget(s);
    EXPECT_NEAR(b.kinetic_osmotic, 0.25, 1e-9);
    EXPECT_NEAR(b.potential, 0.25, 1e-9);
    EXPECT_NEAR(b.total, 0.5, 1e-8);

    const EnergyBudget b3 = energy_budget(WaveState::harmonic_ground(2.0, 3));
    EXPECT_NEAR(b3.total, 3.0, 1e-8);
}

TEST(EnergyBudget, MatchesEigenvalueAcrossParameters) {
    for (int z = 1; z <= 10; ++z) {
        const WaveState s = WaveState::hydrogen_1s(static_cast<double>(z));
        ASSERT_NEAR(energy_budget(s).total, s.energy, 1e-8 * std::abs(s.energy))
            << "Z = " << z;
    }
    for (double omega : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        const WaveState s = WaveState::harmonic_ground(omega, 1);
        ASSERT_NEAR(energy_budget(s).total, s.energy, 1e-8 * s.energy) << "omega = " << omega;
    }
}

TEST(EnergyBudget, PlaneWaveRejected) {
    EXPECT_THROW(energy_budget(WaveState::plane_wave(1.0)), std::invalid_argument);
}

TEST(BornCdfs, ConsistentWithDensities) {
    const WaveState s = WaveState::hydrogen_1s(1.0);
    for (double r : {0.5, 1.0, 3.0}) {
        auto pdf = [&s](double rr) {
            const double a = s.amplitude(Vec3{rr, 0.0, 0.0});
            return 4.0 * std::numbers::pi * rr * rr * a * a;
        };
        EXPECT_NEAR(born_radial_cdf(s, r), integrate(pdf, 0.0, r), 1e-10) << "r = " << r;
    }
    EXPECT_EQ(born_radial_cdf(s, 0.0), 0.0);

    const WaveState h = WaveState::harmonic_ground(1.0, 1);
    EXPECT_EQ(born_coordinate_cdf(h, 0.0), 0.5);
    EXPECT_NEAR(born_coordinate_cdf(h, h.decay_length()), 0.92135039647485748, 1e-13);
}

}  // namespace
}  // namespace stochel
