#pragma once

#include <cmath>
#include <numbers>

namespace stochel {

namespace detail {

// Positive-term confluent series, accurate for moderate arguments:
// erf(x) = 2 x e^{-x^2} / sqrt(pi) * sum_{n>=0} (2x^2)^n / (1*3*...*(2n+1)).
inline double erf_series(double x) {
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return 2.0 * x * std::exp(-x2) * std::numbers::inv_sqrtpi * sum;
}

// Laplace continued fraction for the complement, evaluated with modified
// Lentz: sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...)))).
inline double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 400; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) * std::numbers::inv_sqrtpi / f;
}

}  // namespace detail

/// Error function, |error| < 1e-14 over the real line. Odd by construction:
/// the negative branch is the exact negation of the positive one.
inline double erf(double x) {
    const double ax = std::abs(x);
    double r;
    if (ax <= 2.0) {
        r = detail::erf_series(ax);
    } else if (ax >= 7.0) {
        r = 1.0;  // erfc(7) < 5e-23, below double resolution of 1 - erf
    } else {
        r = 1.0 - detail::erfc_continued_fraction(ax);
    }
    return x < 0.0 ? -r : r;
}

}  // namespace stochel
