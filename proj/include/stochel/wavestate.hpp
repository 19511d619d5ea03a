#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "stochel/quadrature.hpp"
#include "stochel/special.hpp"
#include "stochel/units.hpp"

namespace stochel {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

enum class WaveKind { hydrogen_1s, harmonic_ground, plane_wave };

/// Analytic stationary state used as ground truth for the kinematics:
/// hydrogen 1s (3D), oscillator ground state (1D or 3D), or a plane wave
/// along x (non-normalizable, pure phase).
struct WaveState {
    WaveKind kind;
    UnitSystem units;
    double energy;
    int dims;
    bool normalizable;
    double z = 0.0;      // hydrogen nuclear charge
    double omega = 0.0;  // oscillator angular frequency
    double k = 0.0;      // plane-wave number

    static WaveState hydrogen_1s(double z_charge, const UnitSystem& u = atomic_units()) {
        if (!(z_charge > 0.0)) throw std::invalid_argument("hydrogen_1s: Z must be > 0");
        const double e2 = u.charge * u.charge;
        const double energy = -0.5 * u.mass * z_charge * z_charge * e2 * e2 / (u.hbar * u.hbar);
        WaveState s{WaveKind::hydrogen_1s, u, energy, 3, true};
        s.z = z_charge;
        return s;
    }

    static WaveState harmonic_ground(double omega, int dims, const UnitSystem& u = atomic_units()) {
        if (!(omega > 0.0)) throw std::invalid_argument("harmonic_ground: omega must be > 0");
        if (dims != 1 && dims != 3) throw std::invalid_argument("harmonic_ground: dims is 1 or 3");
        WaveState s{WaveKind::harmonic_ground, u, 0.5 * dims * u.hbar * omega, dims, true};
        s.omega = omega;
        return s;
    }

    static WaveState plane_wave(double k, const UnitSystem& u = atomic_units()) {
        const double energy = u.hbar * u.hbar * k * k / (2.0 * u.mass);
        WaveState s{WaveKind::plane_wave, u, energy, 1, false};
        s.k = k;
        return s;
    }

    /// Amplitude decay scale: a0/Z for hydrogen, the oscillator length lambda
    /// = sqrt(hbar/(m omega)) for the harmonic ground state.
    double decay_length() const {
        switch (kind) {
            case WaveKind::hydrogen_1s:
                return units.hbar * units.hbar / (units.mass * units.charge * units.charge * z);
            case WaveKind::harmonic_ground:
                return std::sqrt(units.hbar / (units.mass * omega));
            case WaveKind::plane_wave:
                return 0.0;
        }
        return 0.0;
    }

    double amplitude(const Vec3& p) const {
        switch (kind) {
            case WaveKind::hydrogen_1s: {
                const double a = decay_length();
                return std::pow(a, -1.5) * std::numbers::inv_sqrtpi * std::exp(-p.norm() / a);
            }
            case WaveKind::harmonic_ground: {
                const double lam2 = decay_length() * decay_length();
                const double q2 = dims == 1 ? p.x * p.x : p.dot(p);
                const double norm =
                    std::pow(std::numbers::pi * lam2, -0.25 * static_cast<double>(dims));
                return norm * std::exp(-q2 / (2.0 * lam2));
            }
            case WaveKind::plane_wave:
                return 1.0;
        }
        return 0.0;
    }

    /// Real phase action S1; position-independent (-E t) except for the plane wave.
    double phase_action(const Vec3& p, double t) const {
        double s1 = -energy * t;
        if (kind == WaveKind::plane_wave) s1 += units.hbar * k * p.x;
        return s1;
    }

    /// External potential U of the kind: -Z e^2/r, sum of m w^2 x_i^2/2, or 0.
    double external_potential(const Vec3& p) const {
        switch (kind) {
            case WaveKind::hydrogen_1s: {
                const double r = p.norm();
                if (r == 0.0) throw std::domain_error("external_potential: undefined at r = 0");
                return -z * units.charge * units.charge / r;
            }
            case WaveKind::harmonic_ground: {
                const double q2 = dims == 1 ? p.x * p.x : p.dot(p);
                return 0.5 * units.mass * omega * omega * q2;
            }
            case WaveKind::plane_wave:
                return 0.0;
        }
        return 0.0;
    }
};

/// The pair (S1, S2) of the complex action S = S1 + i S2, with the
/// normalization constant B chosen so S2 vanishes at the reference point
/// (the amplitude maximum; the origin for both bound kinds).
struct ComplexAction {
    WaveState state;
    double norm_constant;

    double s1(const Vec3& p, double t) const { return state.phase_action(p, t); }

    double s2(const Vec3& p) const {
        const double amp = state.amplitude(p);
        if (!(amp > 0.0)) throw std::domain_error("ComplexAction: amplitude vanishes here");
        return -state.units.hbar * std::log(amp / norm_constant);
    }

    Vec3 grad_s1(const Vec3& p) const {
        (void)p;
        if (state.kind == WaveKind::plane_wave) return {state.units.hbar * state.k, 0.0, 0.0};
        return {0.0, 0.0, 0.0};
    }

    Vec3 grad_s2(const Vec3& p) const {
        switch (state.kind) {
            case WaveKind::hydrogen_1s: {
                const double r = p.norm();
                if (r == 0.0) throw std::domain_error("grad_s2: undefined at r = 0");
                return p * (state.units.hbar / (state.decay_length() * r));
            }
            case WaveKind::harmonic_ground: {
                const double lam2 = state.decay_length() * state.decay_length();
                const double c = state.units.hbar / lam2;
                if (state.dims == 1) return {c * p.x, 0.0, 0.0};
                return p * c;
            }
            case WaveKind::plane_wave:
                return {0.0, 0.0, 0.0};
        }
        return {0.0, 0.0, 0.0};
    }

    double laplacian_s2(const Vec3& p) const {
        switch (state.kind) {
            case WaveKind::hydrogen_1s: {
                const double r = p.norm();
                if (r == 0.0) throw std::domain_error("laplacian_s2: undefined at r = 0");
                return 2.0 * state.units.hbar / (state.decay_length() * r);
            }
            case WaveKind::harmonic_ground: {
                const double lam2 = state.decay_length() * state.decay_length();
                return static_cast<double>(state.dims) * state.units.hbar / lam2;
            }
            case WaveKind::plane_wave:
                return 0.0;
        }
        return 0.0;
    }
};

inline ComplexAction decompose_action(const WaveState& state) {
    const double b = state.amplitude(Vec3{0.0, 0.0, 0.0});
    return ComplexAction{state, b};
}

/// Current velocity v = grad S1 / m and osmotic velocity u = grad S2 / m.
/// u points outward for the bound states; the real-valued forward drift of
/// the trembling motion is osmotic_drift = -u (see forward_backward_velocities).
struct VelocityField {
    ComplexAction action;

    Vec3 current(const Vec3& p) const { return action.grad_s1(p) * (1.0 / action.state.units.mass); }
    Vec3 osmotic(const Vec3& p) const { return action.grad_s2(p) * (1.0 / action.state.units.mass); }
    Vec3 osmotic_drift(const Vec3& p) const { return osmotic(p) * -1.0; }
};

inline VelocityField velocity_fields(const WaveState& state) {
    return VelocityField{decompose_action(state)};
}

/// One-sided path velocities: v+ = v + osmotic_drift, v- = v - osmotic_drift,
/// so (v+ + v-)/2 = v and (v+ - v-)/2 = osmotic_drift exactly.
inline std::pair<Vec3, Vec3> forward_backward_velocities(const WaveState& state, const Vec3& p) {
    const VelocityField f = velocity_fields(state);
    const Vec3 v = f.current(p);
    const Vec3 d = f.osmotic_drift(p);
    return {v + d, v - d};
}

enum class HjVariant { classical, augmented, madelung };

/// Energy residual of the stationary Hamilton-Jacobi balance at a point.
/// classical: E - [ (grad S1)^2/2m + U ]
/// augmented: E - [ (grad S1)^2/2m + (grad S2)^2/2m + U ]
///            (the trembling kinetic term added with a plus sign; nonzero
///            pointwise for bound states, zero in the density-weighted mean)
/// madelung:  E - [ (grad S1)^2/2m - (grad S2)^2/2m + (hbar/2m) lap S2 + U ]
///            (the closed quantum-potential identity; vanishes on eigenstates)
inline double hamilton_jacobi_residual(const WaveState& state, const Vec3& p, HjVariant variant) {
    const ComplexAction action = decompose_action(state);
    const double m = state.units.mass;
    const Vec3 g1 = action.grad_s1(p);
    double bracket = g1.dot(g1) / (2.0 * m) + state.external_potential(p);
    if (variant != HjVariant::classical) {
        const Vec3 g2 = action.grad_s2(p);
        const double trembling = g2.dot(g2) / (2.0 * m);
        if (variant == HjVariant::augmented) {
            bracket += trembling;
        } else {
            bracket += -trembling + state.units.hbar / (2.0 * m) * action.laplacian_s2(p);
        }
    }
    return state.energy - bracket;
}

/// Density-weighted energy split of a normalizable state:
/// <m v^2/2> + <m u^2/2> + <U>, each by quadrature against |psi|^2.
struct EnergyBudget {
    double kinetic_current;
    double kinetic_osmotic;
    double potential;
    double total;
};

inline EnergyBudget energy_budget(const WaveState& state, const QuadratureSpec& spec = {}) {
    if (!state.normalizable) {
        throw std::invalid_argument("energy_budget: state is not normalizable");
    }
    const VelocityField field = velocity_fields(state);
    const double m = state.units.mass;

    auto weighted = [&](auto&& local) {
        if (state.kind == WaveKind::hydrogen_1s) {
            auto integrand = [&](double r) {
                const Vec3 p{r, 0.0, 0.0};
                const double amp = state.amplitude(p);
                return 4.0 * std::numbers::pi * r * r * amp * amp * local(p);
            };
            return integrate(integrand, 0.0, kInfiniteUpperBound, spec);
        }
        // Harmonic: 1D marginal integrals; 3D adds axis terms below.
        auto integrand = [&](double x) {
            const Vec3 p{x, 0.0, 0.0};
            const double lam = state.decay_length();
            const double rho = std::exp(-x * x / (lam * lam)) /
                               (lam * std::sqrt(std::numbers::pi));
            return rho * local(p);
        };
        return 2.0 * integrate(integrand, 0.0, kInfiniteUpperBound, spec);
    };

    EnergyBudget out{};
    if (state.kind == WaveKind::hydrogen_1s) {
        out.kinetic_current = weighted([&](const Vec3& p) {
            const Vec3 v = field.current(p);
            return 0.5 * m * v.dot(v);
        });
        out.kinetic_osmotic = weighted([&](const Vec3& p) {
            const Vec3 u = field.osmotic(p);
            return 0.5 * m * u.dot(u);
        });
        out.potential = weighted([&](const Vec3& p) { return state.external_potential(p); });
    } else {
        const double axes = static_cast<double>(state.dims);
        out.kinetic_current = 0.0;
        out.kinetic_osmotic = axes * weighted([&](const Vec3& p) {
            const double u = field.osmotic(Vec3{p.x, 0.0, 0.0}).x;
            return 0.5 * m * u * u;
        });
        out.potential = axes * weighted([&](const Vec3& p) {
            return 0.5 * m * state.omega * state.omega * p.x * p.x;
        });
    }
    out.total = out.kinetic_current + out.kinetic_osmotic + out.potential;
    return out;
}

/// CDF of the Born radial law 4 pi r^2 |psi|^2 for hydrogen 1s:
/// with t = 2 r / (a0/Z), 1 - e^{-t} (1 + t + t^2/2).
inline double born_radial_cdf(const WaveState& state, double r) {
    if (state.kind != WaveKind::hydrogen_1s) {
        throw std::invalid_argument("born_radial_cdf: hydrogen state required");
    }
    if (r <= 0.0) return 0.0;
    const double t = 2.0 * r / state.decay_length();
    return 1.0 - std::exp(-t) * (1.0 + t + 0.5 * t * t);
}

/// CDF of the Born coordinate marginal for the oscillator ground state:
/// Gaussian with variance lambda^2/2, i.e. (1 + erf(x/lambda))/2.
inline double born_coordinate_cdf(const WaveState& state, double x) {
    if (state.kind != WaveKind::harmonic_ground) {
        throw std::invalid_argument("born_coordinate_cdf: harmonic state required");
    }
    return 0.5 * (1.0 + erf(x / state.decay_length()));
}

}  // namespace stochel
