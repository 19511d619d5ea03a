#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "stochel/errors.hpp"
#include "stochel/random.hpp"
#include "stochel/stats.hpp"
#include "stochel/wavestate.hpp"

namespace stochel {

struct SimulationOptions {
    std::size_t record_stride = 1;  // record every stride-th step after burn-in
    double diffusion_scale = 1.0;   // multiplies nu = hbar/(2m); 0 gives drift-only motion
    unsigned workers = 0;           // 0 = hardware concurrency
    std::size_t max_total_steps = 2'000'000'000ULL;
    std::size_t max_records = 6'000'000ULL;  // paths x snapshots memory guard
};

/// Seeded diffusion paths of the trembling motion. Snapshot 0 is the state
/// right after burn-in (the exact Born sample when burn_in_steps = 0);
/// later snapshots follow every record_stride-th Euler-Maruyama step.
struct TrajectoryEnsemble {
    std::size_t n_paths = 0;
    std::size_t n_steps = 0;
    std::size_t burn_in_steps = 0;
    double dt = 0.0;
    std::uint64_t master_seed = 0;
    std::size_t record_stride = 1;
    std::size_t n_records = 0;
    std::vector<Vec3> positions;  // record-major: positions[rec * n_paths + path]

    std::span<const Vec3> record(std::size_t rec) const {
        return {positions.data() + rec * n_paths, n_paths};
    }
    double record_time(std::size_t rec) const {
        return static_cast<double>(burn_in_steps + rec * record_stride) * dt;
    }
};

namespace detail {

// Hot-loop drift constants, resolved once per run.
struct DriftParams {
    WaveKind kind;
    double coef;      // hydrogen: |drift|; harmonic: omega; plane: drift along x
    double r_floor;   // hydrogen only: reflection radius
    int dims;
};

inline DriftParams drift_params(const WaveState& state) {
    DriftParams d{state.kind, 0.0, 0.0, state.dims};
    const UnitSystem& u = state.units;
    switch (state.kind) {
        case WaveKind::hydrogen_1s:
            d.coef = u.hbar / (u.mass * state.decay_length());
            d.r_floor = 1e-4 * u.hbar * u.hbar / (u.mass * u.charge * u.charge);
            break;
        case WaveKind::harmonic_ground:
            d.coef = state.omega;
            break;
        case WaveKind::plane_wave:
            d.coef = u.hbar * state.k / u.mass;
            break;
    }
    return d;
}

// Largest drift-gradient scale of the analytic kinds, for the dt check.
inline double drift_gradient_scale(const WaveState& state) {
    switch (state.kind) {
        case WaveKind::hydrogen_1s:
            // |grad b| ~ coef / r at the typical radius a0/Z
            return state.units.hbar / (state.units.mass * state.decay_length() *
                                       state.decay_length());
        case WaveKind::harmonic_ground:
            return state.omega;
        case WaveKind::plane_wave:
            return 0.0;
    }
    return 0.0;
}

// Inverse CDF of the hydrogen Born radial law by bisection on
// t = 2 r / (a0/Z); deterministic and accurate to ~1e-16 in t.
inline double hydrogen_radius_from_uniform(double u, double decay_length) {
    double lo = 0.0;
    double hi = 60.0;
    for (int i = 0; i < 64; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double cdf = 1.0 - std::exp(-mid) * (1.0 + mid + 0.5 * mid * mid);
        if (cdf < u) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double t = 0.5 * (lo + hi);
    return 0.5 * t * decay_length;
}

inline Vec3 born_initial_position(const WaveState& state, SampleStream& stream) {
    switch (state.kind) {
        case WaveKind::hydrogen_1s: {
            const double r = hydrogen_radius_from_uniform(stream.next_uniform(),
                                                          state.decay_length());
            const double cos_theta = 2.0 * stream.next_uniform() - 1.0;
            const double phi = 2.0 * std::numbers::pi * stream.next_uniform();
            const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
            return {r * sin_theta * std::cos(phi), r * sin_theta * std::sin(phi),
                    r * cos_theta};
        }
        case WaveKind::harmonic_ground: {
            const double sigma = state.decay_length() / std::numbers::sqrt2;
            Vec3 p{sigma * stream.next_normal(), 0.0, 0.0};
            if (state.dims == 3) {
                p.y = sigma * stream.next_normal();
                p.z = sigma * stream.next_normal();
            }
            return p;
        }
        case WaveKind::plane_wave:
            return {0.0, 0.0, 0.0};
    }
    return {0.0, 0.0, 0.0};
}

inline void simulate_paths(const WaveState& state, const DriftParams& drift, double dt,
                           double noise_std, std::uint64_t master_seed,
                           std::size_t burn_in_steps, std::size_t n_steps,
                           std::size_t record_stride, std::size_t path_begin,
                           std::size_t path_end, std::size_t n_paths,
                           std::vector<Vec3>& positions) {
    const std::size_t total_steps = burn_in_steps + n_steps;
    for (std::size_t path = path_begin; path < path_end; ++path) {
        SampleStream stream(RandomStream{master_seed, path});
        Vec3 p = born_initial_position(state, stream);

        std::size_t rec = 0;
        for (std::size_t step = 0; step <= total_steps; ++step) {
            if (step >= burn_in_steps && (step - burn_in_steps) % record_stride == 0) {
                positions[rec * n_paths + path] = p;
                ++rec;
            }
            if (step == total_steps) break;

            switch (drift.kind) {
                case WaveKind::hydrogen_1s: {
                    double r = p.norm();
                    if (r < drift.r_floor) r = drift.r_floor;
                    const double f = -drift.coef * dt / r;
                    p.x += f * p.x + noise_std * stream.next_normal();
                    p.y += f * p.y + noise_std * stream.next_normal();
                    p.z += f * p.z + noise_std * stream.next_normal();
                    const double r_new = p.norm();
                    if (r_new < drift.r_floor) {
                        // reflect off the origin floor
                        if (r_new == 0.0) {
                            p = {0.0, 0.0, drift.r_floor};
                        } else {
                            p = p * ((2.0 * drift.r_floor - r_new) / r_new);
                        }
                    }
                    break;
                }
                case WaveKind::harmonic_ground: {
                    p.x += -drift.coef * p.x * dt + noise_std * stream.next_normal();
                    if (drift.dims == 3) {
                        p.y += -drift.coef * p.y * dt + noise_std * stream.next_normal();
                        p.z += -drift.coef * p.z * dt + noise_std * stream.next_normal();
                    }
                    break;
                }
                case WaveKind::plane_wave: {
                    p.x += drift.coef * dt + noise_std * stream.next_normal();
                    break;
                }
            }
        }
    }
}

}  // namespace detail

/// Euler-Maruyama integration of dX = b(X) dt + sqrt(2 nu) dW with the
/// forward drift b = current + osmotic_drift (= v+) and nu = hbar/(2m).
/// Initial positions are exact Born samples; each path owns the random
/// substream equal to its index, so results are independent of worker count.
inline TrajectoryEnsemble simulate_ensemble(const WaveState& state, std::size_t n_paths,
                                            std::size_t n_steps, double dt,
                                            std::size_t burn_in_steps,
                                            std::uint64_t master_seed,
                                            const SimulationOptions& opts = {}) {
    if (n_paths < 1) throw std::invalid_argument("simulate_ensemble: n_paths must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("simulate_ensemble: dt must be > 0");
    if (opts.record_stride < 1 || n_steps % opts.record_stride != 0) {
        throw std::invalid_argument(
            "simulate_ensemble: record_stride must divide n_steps");
    }
    if (!(opts.diffusion_scale >= 0.0)) {
        throw std::invalid_argument("simulate_ensemble: diffusion_scale must be >= 0");
    }

    if (dt * detail::drift_gradient_scale(state) >= 0.1) {
        throw StepSizeError("simulate_ensemble: dt too large for the drift gradient");
    }
    const std::size_t total_steps = burn_in_steps + n_steps;
    if (total_steps > 0 && n_paths > opts.max_total_steps / total_steps) {
        throw BudgetExceededError("simulate_ensemble: step budget exceeded");
    }

    TrajectoryEnsemble ens;
    ens.n_paths = n_paths;
    ens.n_steps = n_steps;
    ens.burn_in_steps = burn_in_steps;
    ens.dt = dt;
    ens.master_seed = master_seed;
    ens.record_stride = opts.record_stride;
    ens.n_records = n_steps / opts.record_stride + 1;
    if (ens.n_records > opts.max_records / n_paths) {
        throw BudgetExceededError("simulate_ensemble: record budget exceeded");
    }
    ens.positions.resize(ens.n_records * n_paths);

    const double nu = opts.diffusion_scale * state.units.hbar / (2.0 * state.units.mass);
    const double noise_std = std::sqrt(2.0 * nu * dt);
    const detail::DriftParams drift = detail::drift_params(state);

    unsigned workers = opts.workers != 0 ? opts.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, n_paths));

    if (workers == 1) {
        detail::simulate_paths(state, drift, dt, noise_std, master_seed, burn_in_steps,
                               n_steps, opts.record_stride, 0, n_paths, n_paths,
                               ens.positions);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (n_paths + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = static_cast<std::size_t>(w) * chunk;
            const std::size_t end = std::min(n_paths, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([&, begin, end] {
                detail::simulate_paths(state, drift, dt, noise_std, master_seed,
                                       burn_in_steps, n_steps, opts.record_stride, begin,
                                       end, n_paths, ens.positions);
            });
        }
        for (auto& t : pool) t.join();
    }

    for (const Vec3& p : ens.positions) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
            throw StepSizeError("simulate_ensemble: non-finite position recorded");
        }
    }
    return ens;
}

struct SpatialBins {
    double lo;
    double hi;
    std::size_t count;

    SpatialBins(double lo_in, double hi_in, std::size_t count_in)
        : lo(lo_in), hi(hi_in), count(count_in) {
        if (!(lo < hi) || count < 1) throw std::invalid_argument("SpatialBins: bad binning");
    }
    double center(std::size_t i) const {
        const double w = (hi - lo) / static_cast<double>(count);
        return lo + (static_cast<double>(i) + 0.5) * w;
    }
};

/// Binned conditional velocity estimates from recorded paths. Per bin,
/// v_plus ~ E[(X(t+dt)-X(t))/dt | X(t) in bin] and v_minus the backward
/// analogue; current and osmotic follow as the exact half-sum and
/// half-difference of the recorded bin means. Empty bins keep count 0 and
/// NaN values (missing, not zero).
struct EstimatorResult {
    std::vector<double> bin_centers;
    std::vector<std::size_t> counts;
    std::vector<double> v_plus;
    std::vector<double> v_minus;
    std::vector<double> current_est;
    std::vector<double> osmotic_est;
    std::vector<double> se_v_plus;
    std::vector<double> se_v_minus;
    std::vector<double> se_current;
    std::vector<double> se_osmotic;
};

inline EstimatorResult estimate_velocities_from_paths(const TrajectoryEnsemble& ens,
                                                      const SpatialBins& bins) {
    if (ens.record_stride != 1) {
        throw std::invalid_argument("estimate_velocities_from_paths: needs record_stride 1");
    }
    if (ens.n_records < 3) {
        throw std::invalid_argument(
            "estimate_velocities_from_paths: needs >= 3 recorded steps per path");
    }

    std::vector<RunningMoments> fwd(bins.count), bwd(bins.count), cur(bins.count),
        osm(bins.count);
    const double inv_width = static_cast<double>(bins.count) / (bins.hi - bins.lo);

    for (std::size_t rec = 1; rec + 1 < ens.n_records; ++rec) {
        const std::span<const Vec3> prev = ens.record(rec - 1);
        const std::span<const Vec3> here = ens.record(rec);
        const std::span<const Vec3> next = ens.record(rec + 1);
        for (std::size_t p = 0; p < ens.n_paths; ++p) {
            const double x = here[p].x;
            if (x < bins.lo || x >= bins.hi) continue;
            const auto b = static_cast<std::size_t>((x - bins.lo) * inv_width);
            const double f = (next[p].x - x) / ens.dt;
            const double g = (x - prev[p].x) / ens.dt;
            fwd[b].add(f);
            bwd[b].add(g);
            cur[b].add(0.5 * (f + g));
            osm[b].add(0.5 * (f - g));
        }
    }

    EstimatorResult out;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t b = 0; b < bins.count; ++b) {
        out.bin_centers.push_back(bins.center(b));
        out.counts.push_back(fwd[b].count());
        if (fwd[b].count() == 0) {
            for (auto* v : {&out.v_plus, &out.v_minus, &out.current_est, &out.osmotic_est,
                            &out.se_v_plus, &out.se_v_minus, &out.se_current,
                            &out.se_osmotic}) {
                v->push_back(nan);
            }
            continue;
        }
        out.v_plus.push_back(fwd[b].mean());
        out.v_minus.push_back(bwd[b].mean());
        out.current_est.push_back(0.5 * (fwd[b].mean() + bwd[b].mean()));
        out.osmotic_est.push_back(0.5 * (fwd[b].mean() - bwd[b].mean()));
        out.se_v_plus.push_back(fwd[b].std_error_of_mean());
        out.se_v_minus.push_back(bwd[b].std_error_of_mean());
        out.se_current.push_back(cur[b].std_error_of_mean());
        out.se_osmotic.push_back(osm[b].std_error_of_mean());
    }
    return out;
}

/// Sorted radii of one recorded snapshot (hydrogen KS input).
inline std::vector<double> sorted_radii(const TrajectoryEnsemble& ens, std::size_t rec) {
    std::vector<double> r;
    r.reserve(ens.n_paths);
    for (const Vec3& p : ens.record(rec)) r.push_back(p.norm());
    std::sort(r.begin(), r.end());
    return r;
}

/// Sorted x coordinates of one recorded snapshot (harmonic KS input).
inline std::vector<double> sorted_xs(const TrajectoryEnsemble& ens, std::size_t rec) {
    std::vector<double> x;
    x.reserve(ens.n_paths);
    for (const Vec3& p : ens.record(rec)) x.push_back(p.x);
    std::sort(x.begin(), x.end());
    return x;
}

}  // namespace stochel
