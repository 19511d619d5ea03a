#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "stochel/quadrature.hpp"
#include "stochel/special.hpp"
#include "stochel/units.hpp"

namespace stochel {

/// Spread elementary charge with a Gaussian radial profile of scale lambda_o.
struct GaussianCloud {
    double lambda_o;      // bohr
    double total_charge;  // units of e
    UnitSystem units;

    GaussianCloud(double lambda, double charge, const UnitSystem& u)
        : lambda_o(lambda), total_charge(charge), units(u) {
        if (!(lambda_o > 0.0)) throw std::invalid_argument("GaussianCloud: lambda_o must be > 0");
    }

    static GaussianCloud from_units(const UnitSystem& u) {
        return GaussianCloud(oscillation_length(u), u.charge, u);
    }
};

/// Charge distribution F(rho) = exp(-(rho/lambda)^2) / (pi^{3/2} lambda^3),
/// normalized so the 4 pi rho^2 radial integral is 1. At the default spread
/// length this equals the printed (2/(3 pi))^{3/2} (mC/hbar)^3 prefactor.
inline double charge_density(const GaussianCloud& cloud, double rho) {
    if (!(rho >= 0.0)) throw std::invalid_argument("charge_density: rho must be >= 0");
    const double lam = cloud.lambda_o;
    const double peak = 1.0 / (std::pow(std::numbers::pi, 1.5) * lam * lam * lam);
    const double t = rho / lam;
    return peak * std::exp(-t * t);
}

/// Ground-state amplitude of the isotropic oscillator,
/// (lambda sqrt(pi))^{-3/2} exp(-rho^2 / (2 lambda^2)).
inline double oscillator_ground_amplitude(const GaussianCloud& cloud, double rho) {
    if (!(rho >= 0.0)) {
        throw std::invalid_argument("oscillator_ground_amplitude: rho must be >= 0");
    }
    const double lam = cloud.lambda_o;
    const double norm = std::pow(lam * std::sqrt(std::numbers::pi), -1.5);
    return norm * std::exp(-rho * rho / (2.0 * lam * lam));
}

/// Averaged self-potential (-2e / (sqrt(pi) rho)) * int_0^{rho/lambda} e^{-x^2} dx,
/// evaluated through erf. rho = 0 returns the analytic limit -2e/(sqrt(pi) lambda);
/// the singularity is removable.
inline double self_potential(const GaussianCloud& cloud, double rho) {
    if (!(rho >= 0.0)) throw std::invalid_argument("self_potential: rho must be >= 0");
    const double e = cloud.total_charge;
    if (rho == 0.0) return -2.0 * e * std::numbers::inv_sqrtpi / cloud.lambda_o;
    return -e * erf(rho / cloud.lambda_o) / rho;
}

/// Radial profile sampled on a strictly increasing grid, with piecewise-cubic
/// Hermite evaluation between the nodes.
class RadialProfile {
  public:
    RadialProfile(std::vector<double> radii, std::vector<double> values)
        : radii_(std::move(radii)), values_(std::move(values)) {
        if (radii_.size() != values_.size() || radii_.size() < 2) {
            throw std::invalid_argument("RadialProfile: need matching sequences, length >= 2");
        }
        for (std::size_t i = 1; i < radii_.size(); ++i) {
            if (!(radii_[i] > radii_[i - 1])) {
                throw std::invalid_argument("RadialProfile: radii must be strictly increasing");
            }
        }
        build_slopes();
    }

    const std::vector<double>& radii() const { return radii_; }
    const std::vector<double>& values() const { return values_; }

    double operator()(double r) const {
        if (!(r >= radii_.front() && r <= radii_.back())) {
            throw std::invalid_argument("RadialProfile: evaluation outside the grid");
        }
        const auto it = std::lower_bound(radii_.begin() + 1, radii_.end(), r);
        const auto hi = static_cast<std::size_t>(it - radii_.begin());
        const std::size_t lo = hi - 1;
        const double h = radii_[hi] - radii_[lo];
        const double t = (r - radii_[lo]) / h;
        const double t2 = t * t;
        const double t3 = t2 * t;
        return (2.0 * t3 - 3.0 * t2 + 1.0) * values_[lo] + (t3 - 2.0 * t2 + t) * h * slopes_[lo] +
               (-2.0 * t3 + 3.0 * t2) * values_[hi] + (t3 - t2) * h * slopes_[hi];
    }

  private:
    void build_slopes() {
        const std::size_t n = radii_.size();
        slopes_.resize(n);
        slopes_[0] = (values_[1] - values_[0]) / (radii_[1] - radii_[0]);
        slopes_[n - 1] = (values_[n - 1] - values_[n - 2]) / (radii_[n - 1] - radii_[n - 2]);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            slopes_[i] = (values_[i + 1] - values_[i - 1]) / (radii_[i + 1] - radii_[i - 1]);
        }
    }

    std::vector<double> radii_;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_grid: bad range");
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::exp(step * static_cast<double>(i));
    g.front() = lo;
    g.back() = hi;
    return g;
}

/// Independent route to the self-potential: spherically symmetric Poisson
/// solve for charge density -e F(rho) via the two-integral shell construction,
///   V(r) = -e [ Q_in(r)/r + S_out(r) ],
/// with Q_in the 4 pi s^2 F interior charge and S_out the 4 pi s F shell term.
inline RadialProfile self_potential_via_poisson(const GaussianCloud& cloud,
                                                std::span<const double> grid,
                                                const QuadratureSpec& spec = {}) {
    if (grid.size() < 2) throw std::invalid_argument("self_potential_via_poisson: short grid");
    if (!(grid.front() <= 0.01 * cloud.lambda_o) || !(grid.back() >= 20.0 * cloud.lambda_o)) {
        throw std::invalid_argument(
            "self_potential_via_poisson: grid must span [0.01 lambda_o, 20 lambda_o]");
    }
    auto shell_interior = [&cloud](double s) {
        return 4.0 * std::numbers::pi * s * s * charge_density(cloud, s);
    };
    auto shell_exterior = [&cloud](double s) {
        return 4.0 * std::numbers::pi * s * charge_density(cloud, s);
    };

    std::vector<double> radii(grid.begin(), grid.end());
    std::vector<double> values(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i];
        const double q_in = integrate(shell_interior, 0.0, r, spec);
        const double s_out = integrate(shell_exterior, r, kInfiniteUpperBound, spec);
        values[i] = -cloud.total_charge * (q_in / r + s_out);
    }
    return RadialProfile(std::move(radii), std::move(values));
}

/// Electric self-interaction energy as the printed twofold integral:
/// prefactor (2e/sqrt(pi)) (4 pi e / (pi sqrt(pi) lambda)) with nested
/// quadrature of exp(-u^2) u * int_0^u exp(-x^2) dx.
inline double self_energy(const GaussianCloud& cloud, const QuadratureSpec& spec = {}) {
    QuadratureSpec inner_spec = spec;
    inner_spec.abs_tol = std::min(spec.abs_tol, 1e-13);
    inner_spec.rel_tol = std::min(spec.rel_tol, 1e-13);

    auto outer = [&inner_spec](double u) {
        const double inner =
            integrate([](double x) { return std::exp(-x * x); }, 0.0, u, inner_spec);
        return std::exp(-u * u) * u * inner;
    };
    const double e = cloud.total_charge;
    const double pi = std::numbers::pi;
    const double sqrt_pi = std::sqrt(pi);
    const double prefactor =
        (2.0 * e / sqrt_pi) * (4.0 * pi * e) / (pi * sqrt_pi * cloud.lambda_o);
    return prefactor * integrate(outer, 0.0, kInfiniteUpperBound, spec);
}

/// Closed form of the same energy: sqrt(2/pi) e^2 / lambda_o.
inline double self_energy_closed(const GaussianCloud& cloud) {
    const double e = cloud.total_charge;
    return std::sqrt(2.0 / std::numbers::pi) * e * e / cloud.lambda_o;
}

/// Kinetic energy drawn from the vacuum vs electrostatic self-energy.
/// The two are close but not equal; both the ratio and the relative
/// difference are reported rather than asserting equality.
struct EnergyComparison {
    double e_kinetic;       // hartree, closed zero-point-field value
    double e_potential;     // hartree, closed self-energy value
    double ratio;           // e_potential / e_kinetic = sqrt(pi/3)
    double rel_difference;  // |e_potential - e_kinetic| / e_potential
};

inline EnergyComparison energy_budget_compare(const UnitSystem& u) {
    const double e_k = (2.0 / std::numbers::pi) * u.alpha * u.rest_energy();
    const double e_p = self_energy_closed(GaussianCloud::from_units(u));
    return EnergyComparison{e_k, e_p, e_p / e_k, std::abs(e_p - e_k) / e_p};
}

}  // namespace stochel
