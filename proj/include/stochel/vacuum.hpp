#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stochel/quadrature.hpp"
#include "stochel/units.hpp"

namespace stochel {

/// Angular-frequency window of the fluctuating-vacuum spectrum (atomic units).
struct SpectralCutoffs {
    double omega_min;
    double omega_max;

    SpectralCutoffs(double omega_min_in, double omega_max_in)
        : omega_min(omega_min_in), omega_max(omega_max_in) {
        if (!(omega_min >= 0.0) || !(omega_max >= omega_min)) {
            throw std::invalid_argument("SpectralCutoffs: need 0 <= omega_min <= omega_max");
        }
    }
};

/// Default window: omega_min = 0 (negligible lower-cutoff contribution) and
/// omega_max = 2 m C^2 / hbar, the angular-frequency reading of the
/// twice-rest-energy cutoff. This choice reproduces the closed form exactly.
inline SpectralCutoffs default_cutoffs(const UnitSystem& u) {
    return SpectralCutoffs(0.0, 2.0 * u.mass * u.light_speed * u.light_speed / u.hbar);
}

/// Averaged kinetic energy drawn from the zero-point field,
/// (e^2/pi) (mC/hbar) (hbar/(mC^2))^2 * integral of omega over the window.
inline double zpf_kinetic_energy(const UnitSystem& u, const SpectralCutoffs& c,
                                 const QuadratureSpec& spec = {}) {
    const double hbar_over_rest = u.hbar / (u.mass * u.light_speed * u.light_speed);
    const double prefactor = (u.charge * u.charge / std::numbers::pi) *
                             (u.mass * u.light_speed / u.hbar) * hbar_over_rest * hbar_over_rest;
    return prefactor * integrate([](double w) { return w; }, c.omega_min, c.omega_max, spec);
}

/// Closed form at the default window: (2/pi) * alpha * m C^2.
inline double zpf_kinetic_energy_closed(const UnitSystem& u) {
    return (2.0 / std::numbers::pi) * u.alpha * u.rest_energy();
}

struct ZpfResult {
    double e_kinetic;             // quadrature value, hartree
    SpectralCutoffs cutoff_used;
    double closed_form;           // hartree
    double rel_deviation;
    double ratio_to_rest_energy;  // e_kinetic / (m C^2)
};

inline ZpfResult zpf_compare(const UnitSystem& u, const SpectralCutoffs& c,
                             const QuadratureSpec& spec = {}) {
    const double quad = zpf_kinetic_energy(u, c, spec);
    const double closed = zpf_kinetic_energy_closed(u);
    const double rel = closed != 0.0 ? std::abs(quad - closed) / std::abs(closed) : 0.0;
    return ZpfResult{quad, c, closed, rel, quad / u.rest_energy()};
}

inline ZpfResult zpf_compare(const UnitSystem& u, const QuadratureSpec& spec = {}) {
    return zpf_compare(u, default_cutoffs(u), spec);
}

}  // namespace stochel
