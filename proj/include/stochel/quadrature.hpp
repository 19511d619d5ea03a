#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "stochel/errors.hpp"

namespace stochel {

/// Tolerances for adaptive quadrature. The integral is accepted when the
/// accumulated error estimate is below max(abs_tol, rel_tol * |result|).
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 40;
};

inline constexpr double kInfiniteUpperBound = std::numeric_limits<double>::infinity();

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (positive half; symmetric).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// 7-point Gauss weights matching the odd Kronrod nodes.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    const double f_mid = f(mid);
    double result_kronrod = kKronrodWeights[7] * f_mid;
    double result_gauss = kGaussWeights[3] * f_mid;

    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double pair_sum = f(mid - dx) + f(mid + dx);
        result_kronrod += kKronrodWeights[i] * pair_sum;
        if (i % 2 == 1) result_gauss += kGaussWeights[i / 2] * pair_sum;
    }

    // |K15 - G7| is a conservative error estimate for smooth integrands.
    return {result_kronrod * half, std::abs(result_kronrod - result_gauss) * std::abs(half)};
}

template <class F>
void adapt(F&& f, double a, double b, double tol, int depth, int max_depth, double& total,
           double& total_err) {
    auto [value, err] = gauss_kronrod_15(f, a, b);
    if (err <= tol || depth >= max_depth) {
        total += value;
        total_err += err;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth, total, total_err);
    adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth, total, total_err);
}

template <class F>
double integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec) {
    auto [first_pass, first_err] = gauss_kronrod_15(f, a, b);
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(first_pass));

    double total = 0.0;
    double total_err = 0.0;
    adapt(f, a, b, tol, 0, spec.max_depth, total, total_err);

    if (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        throw ToleranceError("integrate: tolerance not reached before max_depth", total,
                             total_err);
    }
    return total;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. A semi-infinite upper
/// bound is handled by the monotone map x = a + t/(1-t), which the caller's
/// integrand must make integrable (Gaussian-weighted tails here).
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_depth < 1) {
        throw std::invalid_argument("integrate: invalid QuadratureSpec");
    }
    if (std::isinf(b)) {
        auto transformed = [&f, a](double t) {
            const double w = 1.0 - t;
            return f(a + t / w) / (w * w);
        };
        return detail::integrate_finite(transformed, 0.0, 1.0, spec);
    }
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (a == b) return 0.0;
    return detail::integrate_finite(f, a, b, spec);
}

}  // namespace stochel
