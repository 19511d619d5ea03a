#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "stochel/optimize.hpp"
#include "stochel/units.hpp"

namespace stochel {

/// Minimal radial-momentum dispersion hbar^2/(4 r^2), the uncertainty bound
/// saturated at the maximal spread <(Delta r)^2> = <r>^2.
inline double radial_momentum_dispersion(double r, const UnitSystem& u = atomic_units()) {
    if (!(r > 0.0)) throw std::invalid_argument("radial_momentum_dispersion: r must be > 0");
    return u.hbar * u.hbar / (4.0 * r * r);
}

/// Ground-state sum of the three equal angular dispersions, 3 hbar^2 / 4.
inline double ground_angular_dispersion_sum(const UnitSystem& u = atomic_units()) {
    return 0.75 * u.hbar * u.hbar;
}

/// Ground-state energy functional hbar^2/(2 m r^2) - Z e^2 / r, the combined
/// radial and angular dispersion terms over the Coulomb well.
inline double energy_functional(double r, double z, const UnitSystem& u = atomic_units()) {
    if (!(r > 0.0)) throw std::invalid_argument("energy_functional: r must be > 0");
    if (!(z >= 1.0)) throw std::invalid_argument("energy_functional: Z must be >= 1");
    return u.hbar * u.hbar / (2.0 * u.mass * r * r) - z * u.charge * u.charge / r;
}

struct VariationalResult {
    double z;
    double r_opt;             // bohr, analytic stationarity: a0 / Z
    double e_opt;             // hartree, -m Z^2 e^4 / (2 hbar^2)
    double p_r_dispersion;    // hbar^2 / (4 r_opt^2)
    double l_dispersion_sum;  // 3 hbar^2 / 4
    double numeric_r_opt;     // golden-section minimizer of the functional
    double numeric_e_opt;
};

/// Variational ground state of the H-like atom. The analytic branch follows
/// the stationarity condition (r_opt = hbar^2/(m Z e^2)); the numeric branch
/// cross-checks it by golden-section minimization to 1e-10.
inline VariationalResult minimize_energy(double z, const UnitSystem& u = atomic_units()) {
    if (!(z >= 1.0)) throw std::invalid_argument("minimize_energy: Z must be >= 1");
    const double e2 = u.charge * u.charge;
    const double r_opt = u.hbar * u.hbar / (u.mass * z * e2);
    const double e_opt = -0.5 * u.mass * z * z * e2 * e2 / (u.hbar * u.hbar);

    const double bohr = u.hbar * u.hbar / (u.mass * e2);
    const auto res = minimize_scalar([&](double r) { return energy_functional(r, z, u); },
                                     1e-3 * bohr / z, 10.0 * bohr, 1e-10 * bohr);

    return VariationalResult{z,
                             r_opt,
                             e_opt,
                             radial_momentum_dispersion(r_opt, u),
                             ground_angular_dispersion_sum(u),
                             res.x_min,
                             res.f_min};
}

/// General total-energy expression with explicit means and dispersions:
/// (1/2m)[<P_r>^2 + <L>^2/r^2] + (1/2m)[<(dP_r)^2> + <(dL)^2>/r^2] - Z e^2/r.
inline double total_energy_general(double p_r_mean, double l_mean, double r, double p_r_disp,
                                   double l_disp, double z,
                                   const UnitSystem& u = atomic_units()) {
    if (!(r > 0.0)) throw std::invalid_argument("total_energy_general: r must be > 0");
    const double inv_2m = 1.0 / (2.0 * u.mass);
    const double means = inv_2m * (p_r_mean * p_r_mean + l_mean * l_mean / (r * r));
    const double dispersions = inv_2m * (p_r_disp + l_disp / (r * r));
    return means + dispersions - z * u.charge * u.charge / r;
}

struct DispersionTriple {
    double dx2;
    double dy2;
    double dz2;
};

/// Cartesian angular-momentum dispersions: (l hbar^2/2, l hbar^2/2, hbar^2/4)
/// for l >= 1; the spherically symmetric (hbar^2/4 each) assignment at l = 0.
inline DispersionTriple dispersion_assignment(int l, const UnitSystem& u = atomic_units()) {
    if (l < 0) throw std::invalid_argument("dispersion_assignment: l must be >= 0");
    const double h2 = u.hbar * u.hbar;
    if (l == 0) return {0.25 * h2, 0.25 * h2, 0.25 * h2};
    return {0.5 * l * h2, 0.5 * l * h2, 0.25 * h2};
}

struct AngularMomentumReport {
    int l;
    double lz_mean;                  // l hbar
    double dx2;
    double dy2;
    double dz2;
    double l_square_assembled;       // <L_z>^2 + dx2 + dy2 + dz2
    double l_square_half_integer;    // hbar^2 (l + 1/2)^2
    double l_square_standard;        // hbar^2 l (l + 1), for comparison
    std::array<bool, 3> inequalities_satisfied;  // xy>=z, yz>=x, zx>=y bounds
    bool saturates_with_equality;    // all three bounds met with equality
};

/// Assembles <L^2> from the mean and the dispersion triple and audits the
/// three pairwise uncertainty bounds dA2*dB2 >= (hbar^2/4) dC2. For l >= 1
/// the assembly reproduces hbar^2 (l+1/2)^2; at l = 0 the assembled value
/// (3 hbar^2/4) and the half-integer extrapolation (hbar^2/4) disagree and
/// both are reported.
inline AngularMomentumReport l_square_report(int l, const UnitSystem& u = atomic_units()) {
    if (l < 0) throw std::invalid_argument("l_square_report: l must be >= 0");
    const double h2 = u.hbar * u.hbar;
    const DispersionTriple d = dispersion_assignment(l, u);
    const double lz = static_cast<double>(l) * u.hbar;

    const double quarter = 0.25 * h2;
    const std::array<bool, 3> ok = {d.dx2 * d.dy2 >= quarter * d.dz2,
                                    d.dy2 * d.dz2 >= quarter * d.dx2,
                                    d.dz2 * d.dx2 >= quarter * d.dy2};
    const bool equal = d.dx2 * d.dy2 == quarter * d.dz2 && d.dy2 * d.dz2 == quarter * d.dx2 &&
                       d.dz2 * d.dx2 == quarter * d.dy2;

    const double half = static_cast<double>(l) + 0.5;
    return AngularMomentumReport{l,
                                 lz,
                                 d.dx2,
                                 d.dy2,
                                 d.dz2,
                                 lz * lz + d.dx2 + d.dy2 + d.dz2,
                                 h2 * half * half,
                                 h2 * static_cast<double>(l) * (static_cast<double>(l) + 1.0),
                                 ok,
                                 equal};
}

}  // namespace stochel
