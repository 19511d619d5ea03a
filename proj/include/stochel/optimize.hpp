#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace stochel {

struct MinimizeResult {
    double x_min;
    double f_min;
};

/// Golden-section minimization of a unimodal f on [lo, hi].
/// Never evaluates f outside the bracket; on exact ties keeps the left
/// interval so the result is deterministic.
///
/// Pure golden-section comparisons bottom out at the sqrt(eps) noise radius
/// of a quadratic minimum, so a single centered parabolic fit at the
/// cbrt(eps)-optimal spacing polishes the midpoint afterwards. The fit uses
/// points inside the original bracket only and falls back to the midpoint
/// when the local curvature is not resolvable.
template <class F>
MinimizeResult minimize_scalar(F&& f, double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("minimize_scalar: invalid bracket (lo >= hi)");
    if (!(tol > 0.0)) throw std::invalid_argument("minimize_scalar: tol must be positive");

    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo;
    double b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);

    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (a + b);

    const double eps_cbrt = 6.06e-6;  // cbrt(double epsilon)
    double h = eps_cbrt * std::max(std::abs(xm), 1.0);
    h = std::min(h, std::min(hi - xm, xm - lo));
    if (h > 0.0) {
        const double f_minus = f(xm - h);
        const double f_center = f(xm);
        const double f_plus = f(xm + h);
        const double curvature = f_plus - 2.0 * f_center + f_minus;
        if (curvature > 0.0) {
            double vertex = xm - 0.5 * h * (f_plus - f_minus) / curvature;
            vertex = std::max(xm - h, std::min(xm + h, vertex));
            // f comparisons are meaningless below the rounding noise of f
            // itself, so allow an eps-level slack when accepting the vertex.
            const double f_vertex = f(vertex);
            const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                                 (std::abs(f_center) + std::abs(f_vertex));
            if (f_vertex <= f_center + slack) xm = vertex;
        }
    }
    return {xm, f(xm)};
}

}  // namespace stochel
