#include <gtest/gtest.h>

#include <cmath>

#include "stochel/variational.hpp"

namespace stochel {
namespace {

TEST(RadialMomentumDispersion, InverseSquareLaw) {
    EXPECT_EQ(radial_momentum_dispersion(1.0), 0.25);
    EXPECT_EQ(radial_momentum_dispersion(2.0), 0.0625);
    EXPECT_THROW(radial_momentum_dispersion(0.0), std::invalid_argument);
    EXPECT_THROW(radial_momentum_dispersion(-1.0), std::invalid_argument);
}

TEST(RadialMomentumDispersion, SaturatesUncertaintyBound) {
    // product with <(dr)^2> = r^2 gives hbar^2/4 for any r
    for (double r : {0.3, 1.0, 5.0}) {
        EXPECT_NEAR(radial_momentum_dispersion(r) * r * r, 0.25, 1e-15);
    }
}

TEST(GroundAngularDispersionSum, ThreeEqualQuarters) {
    EXPECT_EQ(ground_angular_dispersion_sum(), 0.75);
    const DispersionTriple d = dispersion_assignment(0);
    EXPECT_EQ(d.dx2, 0.25);
    EXPECT_EQ(d.dy2, 0.25);
    EXPECT_EQ(d.dz2, 0.25);
    EXPECT_EQ(d.dx2 + d.dy2 + d.dz2, ground_angular_dispersion_sum());
}

TEST(EnergyFunctional, HandValues) {
    EXPECT_EQ(energy_functional(1.0, 1.0), -0.5);
    EXPECT_EQ(energy_functional(0.5, 2.0), -2.0);
    EXPECT_LT(energy_functional(1e9, 1.0), 0.0);  // approaches zero from below
    EXPECT_GT(energy_functional(1e9, 1.0), -1e-8);
    EXPECT_THROW(energy_functional(0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(energy_functional(1.0, 0.5), std::invalid_argument);
}

TEST(MinimizeEnergy, HydrogenGroundState) {
    const VariationalResult r = minimize_energy(1.0);
    EXPECT_EQ(r.r_opt, 1.0);
    EXPECT_EQ(r.e_opt, -0.5);
    EXPECT_NEAR(r.numeric_r_opt, r.r_opt, 1e-9);
    EXPECT_NEAR(r.numeric_e_opt, r.e_opt, 1e-12);
    EXPECT_EQ(r.p_r_dispersion, 0.25);
    EXPECT_EQ(r.l_dispersion_sum, 0.75);
}

TEST(MinimizeEnergy, HeliumLikeScaling) {
    const VariationalResult r = minimize_energy(2.0);
    EXPECT_EQ(r.r_opt, 0.5);
    EXPECT_EQ(r.e_opt, -2.0);
    EXPECT_NEAR(r.numeric_r_opt, 0.5, 1e-9);
}

TEST(MinimizeEnergy, ScalingLawsExactAndNumericAgreement) {
    for (int z = 1; z <= 10; ++z) {
        const VariationalResult r = minimize_energy(static_cast<double>(z));
        EXPECT_EQ(r.r_opt * z, 1.0) << "Z = " << z;
        EXPECT_EQ(r.e_opt / (z * z), -0.5) << "Z = " << z;
        EXPECT_NEAR(r.numeric_r_opt, r.r_opt, 1e-9) << "Z = " << z;
        EXPECT_NEAR(r.numeric_e_opt, r.e_opt, 1e-12) << "Z = " << z;
    }
    EXPECT_THROW(minimize_energy(0.5), std::invalid_argument);
}

TEST(TotalEnergyGeneral, ReducesToGroundFunctional) {
    for (double r : {0.3, 1.0, 2.5}) {
        for (double z : {1.0, 3.0}) {
            const double via_general = total_energy_general(
                0.0, 0.0, r, radial_momentum_dispersion(r), ground_angular_dispersion_sum(),
                z);
            const double via_functional = energy_functional(r, z);
            EXPECT_NEAR(via_general, via_functional, 1e-15 * std::abs(via_functional));
        }
    }
}

TEST(TotalEnergyGeneral, HandValues) {
    // pure rotational term with the Coulomb term dropped (z = 0)
    EXPECT_EQ(total_energy_general(0.0, 1.0, 1.0, 0.0, 0.0, 0.0), 0.5);
    // only the radial dispersion term against the Coulomb well
    EXPECT_EQ(total_energy_general(0.0, 0.0, 1.0, 0.25, 0.0, 1.0), 0.125 - 1.0);
    EXPECT_THROW(total_energy_general(0.0, 0.0, 0.0, 0.0, 0.0, 1.0), std::invalid_argument);
}

TEST(DispersionAssignment, BranchValues) {
    const DispersionTriple l1 = dispersion_assignment(1);
    EXPECT_EQ(l1.dx2, 0.5);
    EXPECT_EQ(l1.dy2, 0.5);
    EXPECT_EQ(l1.dz2, 0.25);

    const DispersionTriple l3 = dispersion_assignment(3);
    EXPECT_EQ(l3.dx2, 1.5);
    EXPECT_EQ(l3.dy2, 1.5);
    EXPECT_EQ(l3.dz2, 0.25);

    EXPECT_THROW(dispersion_assignment(-1), std::invalid_argument);
}

TEST(LSquareReport, AssemblyIdentity) {
    for (int l = 1; l <= 20; ++l) {
        const AngularMomentumReport r = l_square_report(l);
        EXPECT_EQ(r.l_square_assembled, r.l_square_half_integer) << "l = " << l;
    }
}

TEST(LSquareReport, HandValues) {
    const AngularMomentumReport l1 = l_square_report(1);
    EXPECT_EQ(l1.l_square_assembled, 2.25);
    EXPECT_EQ(l1.l_square_standard, 2.0);

    const AngularMomentumReport l10 = l_square_report(10);
    EXPECT_EQ(l10.l_square_assembled, 110.25);
    EXPECT_EQ(l10.l_square_standard, 110.0);
    EXPECT_NEAR(l10.l_square_assembled / l10.l_square_standard, 1.0022727272727273, 1e-15);
}

TEST(LSquareReport, GroundStateDualValues) {
    const AngularMomentumReport l0 = l_square_report(0);
    EXPECT_EQ(l0.l_square_assembled, 0.75);      // spherical-symmetry branch
    EXPECT_EQ(l0.l_square_half_integer, 0.25);   // half-integer extrapolation
    EXPECT_TRUE(l0.saturates_with_equality);
}

TEST(LSquareReport, InequalityAudit) {
    for (int l = 1; l <= 20; ++l) {
        const AngularMomentumReport r = l_square_report(l);
        EXPECT_TRUE(r.inequalities_satisfied[0]) << "l = " << l;
        EXPECT_TRUE(r.inequalities_satisfied[1]) << "l = " << l;
        EXPECT_TRUE(r.inequalities_satisfied[2]) << "l = " << l;
        // the two bounds involving dz2 are met with equality by construction
        EXPECT_EQ(r.dy2 * r.dz2, 0.25 * r.dx2) << "l = " << l;
    }
    EXPECT_THROW(l_square_report(-2), std::invalid_argument);
}

}  // namespace
}  // namespace stochel
