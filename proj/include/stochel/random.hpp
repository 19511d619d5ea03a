#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace stochel {

/// Identifies one reproducible random substream. Identical
/// (master_seed, substream_index) always yields the identical sequence;
/// distinct substream indices give statistically independent sequences,
/// which makes path-parallel ensembles bit-reproducible by construction.
struct RandomStream {
    std::uint64_t master_seed = 0;
    std::uint64_t substream_index = 0;
};

namespace detail {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer; the counter-based core of every stream.
inline std::uint64_t mix64(std::uint64_t z) {
    z += kGoldenGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t stream_key(RandomStream s) {
    return mix64(mix64(s.master_seed ^ 0x5851F42D4C957F2DULL) + s.substream_index);
}

// Strictly inside (0,1); never 0, so log() below is always finite.
inline double to_unit_interval(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

/// Stateful view of one substream, yielding uniforms and standard normals.
/// Normals use the polar (Marsaglia) form of the Box-Muller transform, an
/// exact transform of the underlying counter-based uniforms.
class SampleStream {
  public:
    explicit SampleStream(RandomStream id) : key_(detail::stream_key(id)) {}

    double next_uniform() {
        return detail::to_unit_interval(detail::mix64(key_ + counter_++ * detail::kGoldenGamma));
    }

    double next_normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        for (;;) {
            const double v1 = 2.0 * next_uniform() - 1.0;
            const double v2 = 2.0 * next_uniform() - 1.0;
            const double s = v1 * v1 + v2 * v2;
            if (s < 1.0 && s > 0.0) {
                const double scale = std::sqrt(-2.0 * std::log(s) / s);
                spare_ = v2 * scale;
                has_spare_ = true;
                return v1 * scale;
            }
        }
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Deterministic standard-normal sequence for one substream.
inline std::vector<double> gaussian_samples(RandomStream stream, std::size_t n) {
    SampleStream s(stream);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(s.next_normal());
    return out;
}

}  // namespace stochel
