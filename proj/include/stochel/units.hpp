#pragma once

#include <cmath>
#include <stdexcept>

namespace stochel {

/// Gaussian-convention unit system: alpha = e^2 / (hbar C).
/// Everything downstream works in atomic units (hartree / bohr / atomic time),
/// where hbar = m = e = 1 and C = 1/alpha.
struct UnitSystem {
    double hbar;
    double mass;         // electron mass
    double charge;       // elementary charge e
    double light_speed;  // C
    double alpha;        // fine-structure constant

    UnitSystem(double hbar_in, double mass_in, double charge_in, double light_speed_in)
        : UnitSystem(hbar_in, mass_in, charge_in, light_speed_in,
                     charge_in * charge_in / (hbar_in * light_speed_in)) {}

    UnitSystem(double hbar_in, double mass_in, double charge_in, double light_speed_in,
               double alpha_in)
        : hbar(hbar_in),
          mass(mass_in),
          charge(charge_in),
          light_speed(light_speed_in),
          alpha(alpha_in) {
        if (!(hbar > 0.0) || !(mass > 0.0) || !(charge > 0.0) || !(light_speed > 0.0) ||
            !(alpha > 0.0)) {
            throw std::invalid_argument("UnitSystem: all constants must be strictly positive");
        }
        const double derived = charge * charge / (hbar * light_speed);
        if (std::abs(alpha - derived) > 1e-14 * derived) {
            throw std::invalid_argument("UnitSystem: alpha inconsistent with e^2/(hbar*C)");
        }
    }

    double rest_energy() const { return mass * light_speed * light_speed; }
};

/// CODATA 2018 inverse fine-structure constant, fixed as the reference value.
inline constexpr double kInverseFineStructure = 137.035999084;

inline UnitSystem atomic_units() { return UnitSystem(1.0, 1.0, 1.0, kInverseFineStructure); }

/// Spread length of the oscillating charge: lambda_o = sqrt(3/2) * hbar / (m C).
inline double oscillation_length(const UnitSystem& u) {
    return std::sqrt(1.5) * u.hbar / (u.mass * u.light_speed);
}

}  // namespace stochel
