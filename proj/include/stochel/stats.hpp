#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

namespace stochel {

/// Kolmogorov-Smirnov statistic D = sup |empirical CDF - cdf| over the
/// samples, which must be sorted ascending. cdf must be monotone on the
/// sample range.
template <class Cdf>
double ks_statistic(std::span<const double> sorted_samples, Cdf&& cdf) {
    if (sorted_samples.empty()) throw std::invalid_argument("ks_statistic: empty sample set");
    const double n = static_cast<double>(sorted_samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_samples.size(); ++i) {
        const double f = cdf(sorted_samples[i]);
        const double above = (static_cast<double>(i) + 1.0) / n - f;
        const double below = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(std::abs(above), std::abs(below)));
    }
    return d;
}

/// Streaming mean/variance accumulator (Welford).
class RunningMoments {
  public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    std::size_t count() const { return count_; }
    double mean() const { return mean_; }
    double variance() const {
        return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
    }
    double std_error_of_mean() const {
        return count_ > 1 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
    }

  private:
    std::size_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace stochel
