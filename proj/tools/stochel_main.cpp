// stochel: experiment runner for the stochastic-electron workbench.
// Every subcommand emits a machine-readable run report (JSON or CSV) with a
// config echo sufficient for exact re-execution, and exits 0 only when all
// its checks pass.

#include <cstdint>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stochel/stochel.hpp"

namespace {

using nlohmann::json;
using namespace stochel;

constexpr const char* kSchemaVersion = "1";
constexpr std::uint64_t kDefaultSeed = 42;

struct CommonOpts {
    std::string format = "json";
    std::string out;
    bool no_timestamp = false;
    std::uint64_t seed = kDefaultSeed;
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 40;
    unsigned workers = 0;

    QuadratureSpec quad() const { return QuadratureSpec{abs_tol, rel_tol, max_depth}; }
};

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string fnv1a_hex(const std::vector<Vec3>& positions) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix_double = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    for (const Vec3& p : positions) {
        mix_double(p.x);
        mix_double(p.y);
        mix_double(p.z);
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json checks_to_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const Check& c : checks) arr.push_back(to_json(c));
    return arr;
}

int emit_report(const CommonOpts& common, const std::string& command, json config_echo,
                json results, const std::vector<Check>& checks, const CsvTable& csv) {
    json report{{"schema_version", kSchemaVersion},
                {"units", "atomic"},
                {"command", command},
                {"config", std::move(config_echo)},
                {"results", std::move(results)},
                {"checks", checks_to_json(checks)}};
    if (!common.no_timestamp) report["timestamp"] = iso_timestamp();

    const std::string payload =
        common.format == "csv" ? csv.str() : dump_sorted_json(report);
    if (common.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(common.out, std::ios::binary);
        if (!f) {
            std::cerr << "stochel: cannot open output file: " << common.out << "\n";
            return 3;
        }
        f << payload;
    }
    return all_passed(checks) ? 0 : 1;
}

// The worker count is deliberately not echoed: results are independent of
// the degree of parallelism, and reports must be byte-identical across it.
json common_config(const CommonOpts& c) {
    return json{{"format", c.format},
                {"seed", c.seed},
                {"abs_tol", c.abs_tol},
                {"rel_tol", c.rel_tol},
                {"max_depth", c.max_depth}};
}

// ---------------------------------------------------------------------------
// zpf
// ---------------------------------------------------------------------------

struct ZpfOpts {
    double omega_min = 0.0;
    double omega_max = -1.0;  // <0: default 2 m C^2 / hbar
};

int run_zpf(const CommonOpts& common, const ZpfOpts& o) {
    const UnitSystem u = atomic_units();
    const SpectralCutoffs defaults = default_cutoffs(u);
    const bool is_default = o.omega_max < 0.0 && o.omega_min == 0.0;
    const SpectralCutoffs cut(o.omega_min, o.omega_max < 0.0 ? defaults.omega_max : o.omega_max);

    const ZpfResult r = zpf_compare(u, cut, common.quad());

    std::vector<Check> checks;
    if (is_default) checks.push_back(Check::bound("zpf_closed_form", r.rel_deviation, kZpfRelTol));

    json config = common_config(common);
    config["omega_min"] = cut.omega_min;
    config["omega_max"] = cut.omega_max;

    json results{{"e_kinetic_hartree", r.e_kinetic},
                 {"closed_form_hartree", r.closed_form},
                 {"rel_deviation", r.rel_deviation},
                 {"ratio_to_rest_energy", r.ratio_to_rest_energy},
                 {"omega_min_atomic", cut.omega_min},
                 {"omega_max_atomic", cut.omega_max}};

    CsvTable csv({"e_kinetic_hartree", "closed_form_hartree", "rel_deviation",
                  "ratio_to_rest_energy", "omega_min_atomic", "omega_max_atomic"});
    csv.add_row({format_double(r.e_kinetic), format_double(r.closed_form),
                 format_double(r.rel_deviation), format_double(r.ratio_to_rest_energy),
                 format_double(cut.omega_min), format_double(cut.omega_max)});

    return emit_report(common, "zpf", std::move(config), std::move(results), checks, csv);
}

// ---------------------------------------------------------------------------
// cloud
// ---------------------------------------------------------------------------

struct CloudOpts {
    std::size_t grid_points = 120;
};

int run_cloud(const CommonOpts& common, const CloudOpts& o) {
    const UnitSystem u = atomic_units();
    const GaussianCloud cloud = GaussianCloud::from_units(u);
    const auto grid = log_grid(0.01 * cloud.lambda_o, 20.0 * cloud.lambda_o, o.grid_points);
    const RadialProfile poisson = self_potential_via_poisson(cloud, grid, common.quad());

    json rho_col = json::array(), density_col = json::array(), amp2_col = json::array(),
         pot_erf_col = json::array(), pot_poisson_col = json::array();
    CsvTable csv({"rho_bohr", "charge_density", "amplitude_squared", "potential_erf",
                  "potential_poisson"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double rho = grid[i];
        const double f = charge_density(cloud, rho);
        const double amp = oscillator_ground_amplitude(cloud, rho);
        const double v_erf = self_potential(cloud, rho);
        const double v_poisson = poisson.values()[i];
        rho_col.push_back(rho);
        density_col.push_back(f);
        amp2_col.push_back(amp * amp);
        pot_erf_col.push_back(v_erf);
        pot_poisson_col.push_back(v_poisson);
        csv.add_row({format_double(rho), format_double(f), format_double(amp * amp),
                     format_double(v_erf), format_double(v_poisson)});
    }

    const double e_self_quad = self_energy(cloud, common.quad());
    const double e_self_closed = self_energy_closed(cloud);
    const EnergyComparison cmp = energy_budget_compare(u);

    std::vector<Check> checks{checks::born_identity(cloud),
                              checks::potential_dual_route(cloud),
                              checks::far_field_coulomb(cloud),
                              checks::self_energy_closed_form(cloud),
                              checks::budget_ratio(u)};

    json config = common_config(common);
    config["grid_points"] = o.grid_points;

    json results{{"lambda_o_bohr", cloud.lambda_o},
                 {"self_energy_quadrature_hartree", e_self_quad},
                 {"self_energy_closed_hartree", e_self_closed},
                 {"zpf_kinetic_hartree", cmp.e_kinetic},
                 {"budget_ratio", cmp.ratio},
                 {"budget_rel_difference", cmp.rel_difference},
                 {"profile", json{{"rho_bohr", rho_col},
                                  {"charge_density", density_col},
                                  {"amplitude_squared", amp2_col},
                                  {"potential_erf", pot_erf_col},
                                  {"potential_poisson", pot_poisson_col}}}};

    return emit_report(common, "cloud", std::move(config), std::move(results), checks, csv);
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOpts {
    std::string state = "hydrogen";
    double z = 1.0;
    double omega = 1.0;
    int dims = 1;
    double k = 1.0;
    std::size_t paths = 1000;
    std::size_t steps = 100;
    double dt = 1e-3;
    std::size_t burn_in = 0;
    std::size_t bins = 25;
    double bin_lo = 0.0;  // bin_lo == bin_hi: automatic range
    double bin_hi = 0.0;
    std::size_t record_stride = 1;
    double diffusion_scale = 1.0;
};

WaveState make_state(const SimulateOpts& o) {
    if (o.state == "hydrogen") return WaveState::hydrogen_1s(o.z);
    if (o.state == "harmonic") return WaveState::harmonic_ground(o.omega, o.dims);
    if (o.state == "plane") return WaveState::plane_wave(o.k);
    throw std::invalid_argument("simulate: unknown --state (hydrogen|harmonic|plane)");
}

int run_simulate(const CommonOpts& common, const SimulateOpts& o) {
    const WaveState state = make_state(o);

    SimulationOptions sim_opts;
    sim_opts.record_stride = o.record_stride;
    sim_opts.diffusion_scale = o.diffusion_scale;
    sim_opts.workers = common.workers;
    const TrajectoryEnsemble ens =
        simulate_ensemble(state, o.paths, o.steps, o.dt, o.burn_in, common.seed, sim_opts);

    json records = json::array();
    for (std::size_t rec = 0; rec < ens.n_records; ++rec) {
        json entry{{"time_atomic", ens.record_time(rec)}};
        RunningMoments mx;
        for (const Vec3& p : ens.record(rec)) mx.add(p.x);
        entry["mean_x_bohr"] = mx.mean();
        entry["variance_x_bohr2"] = mx.variance();
        if (state.kind == WaveKind::hydrogen_1s) {
            const auto radii = sorted_radii(ens, rec);
            RunningMoments mr;
            for (double r : radii) mr.add(r);
            entry["mean_r_bohr"] = mr.mean();
            entry["ks_radial"] =
                ks_statistic(radii, [&](double r) { return born_radial_cdf(state, r); });
        } else if (state.kind == WaveKind::harmonic_ground) {
            const auto xs = sorted_xs(ens, rec);
            entry["ks_coordinate"] =
                ks_statistic(xs, [&](double x) { return born_coordinate_cdf(state, x); });
        }
        records.push_back(std::move(entry));
    }

    // At the physical diffusion coefficient the ensemble must sit on the Born
    // law; at a rescaled one it must leave it (the uniqueness reading).
    std::vector<Check> checks;
    if (state.kind == WaveKind::hydrogen_1s) {
        checks.push_back(o.diffusion_scale == 1.0
                             ? checks::hydrogen_ks(ens, state)
                             : checks::hydrogen_ks_violation(ens, state));
    } else if (state.kind == WaveKind::harmonic_ground) {
        checks.push_back(o.diffusion_scale == 1.0
                             ? checks::ou_variance(ens, state)
                             : checks::ou_variance_violation(ens, state));
    } else if (o.diffusion_scale == 0.0 && ens.n_records >= 2) {
        // Drift-only plane wave must advance at exactly hbar k / m.
        const double t_span = static_cast<double>(ens.n_steps) * ens.dt;
        double worst = 0.0;
        const auto first = ens.record(0);
        const auto last = ens.record(ens.n_records - 1);
        for (std::size_t p = 0; p < ens.n_paths; ++p) {
            const double v = (last[p].x - first[p].x) / t_span;
            worst = std::max(worst, std::abs(v - state.units.hbar * state.k / state.units.mass));
        }
        checks.push_back(Check::bound("plane_drift", worst, 1e-12));
    }

    json estimator_json;
    bool have_estimator = false;
    CsvTable csv({"bin_center_bohr", "count", "v_plus", "v_minus", "current", "osmotic",
                  "se_v_plus", "se_v_minus", "se_current", "se_osmotic"});
    if (o.record_stride == 1 && ens.n_records >= 3 && o.bins >= 1) {
        double lo = o.bin_lo, hi = o.bin_hi;
        if (lo == hi) {
            const double scale = state.kind == WaveKind::plane_wave
                                     ? std::max(1.0, std::abs(state.k) *
                                                         static_cast<double>(o.steps) * o.dt)
                                     : state.decay_length();
            lo = -2.5 * scale;
            hi = 2.5 * scale;
        }
        const SpatialBins bins(lo, hi, o.bins);
        const EstimatorResult est = estimate_velocities_from_paths(ens, bins);
        if (state.kind == WaveKind::harmonic_ground) {
            checks.push_back(checks::estimator_recovery(est, state));
        }
        json cols{{"bin_center_bohr", est.bin_centers}, {"count", est.counts},
                  {"v_plus", est.v_plus},               {"v_minus", est.v_minus},
                  {"current", est.current_est},         {"osmotic", est.osmotic_est},
                  {"se_v_plus", est.se_v_plus},         {"se_v_minus", est.se_v_minus},
                  {"se_current", est.se_current},       {"se_osmotic", est.se_osmotic}};
        estimator_json = std::move(cols);
        have_estimator = true;
        for (std::size_t b = 0; b < est.bin_centers.size(); ++b) {
            if (est.counts[b] == 0) {
                csv.add_row({format_double(est.bin_centers[b]), "0", "", "", "", "", "", "",
                             "", ""});
                continue;
            }
            csv.add_row({format_double(est.bin_centers[b]), std::to_string(est.counts[b]),
                         format_double(est.v_plus[b]), format_double(est.v_minus[b]),
                         format_double(est.current_est[b]), format_double(est.osmotic_est[b]),
                         format_double(est.se_v_plus[b]), format_double(est.se_v_minus[b]),
                         format_double(est.se_current[b]), format_double(est.se_osmotic[b])});
        }
    } else if (common.format == "csv") {
        std::cerr << "stochel simulate: binned estimator CSV needs --record-stride 1 and "
                     "--steps >= 2\n";
        return 2;
    }

    json config = common_config(common);
    config["state"] = o.state;
    config["Z"] = o.z;
    config["omega"] = o.omega;
    config["dims"] = o.dims;
    config["k"] = o.k;
    config["paths"] = o.paths;
    config["steps"] = o.steps;
    config["dt"] = o.dt;
    config["burn_in"] = o.burn_in;
    config["bins"] = o.bins;
    config["bin_lo"] = o.bin_lo;
    config["bin_hi"] = o.bin_hi;
    config["record_stride"] = o.record_stride;
    config["diffusion_scale"] = o.diffusion_scale;

    json results{{"state_energy_hartree", state.energy},
                 {"decay_length_bohr", state.decay_length()},
                 {"n_records", ens.n_records},
                 {"records", std::move(records)},
                 {"positions_fnv1a", fnv1a_hex(ens.positions)}};
    if (have_estimator) results["estimator"] = std::move(estimator_json);

    return emit_report(common, "simulate", std::move(config), std::move(results), checks, csv);
}

// ---------------------------------------------------------------------------
// variational
// ---------------------------------------------------------------------------

struct VariationalOpts {
    double z = 1.0;
    double z_max = 0.0;  // 0: single Z
};

int run_variational(const CommonOpts& common, const VariationalOpts& o) {
    const UnitSystem u = atomic_units();
    std::vector<double> zs;
    if (o.z_max > 0.0) {
        for (double z = o.z; z <= o.z_max + 1e-12; z += 1.0) zs.push_back(z);
    } else {
        zs.push_back(o.z);
    }

    CsvTable csv({"z", "r_opt_bohr", "e_opt_hartree", "p_r_dispersion", "l_dispersion_sum",
                  "numeric_r_opt_bohr", "numeric_e_opt_hartree"});
    json rows = json::array();
    double worst_numeric = 0.0;
    for (double z : zs) {
        const VariationalResult r = minimize_energy(z, u);
        worst_numeric = std::max(worst_numeric, std::abs(r.numeric_r_opt - r.r_opt));
        rows.push_back(json{{"z", r.z},
                            {"r_opt_bohr", r.r_opt},
                            {"e_opt_hartree", r.e_opt},
                            {"p_r_dispersion", r.p_r_dispersion},
                            {"l_dispersion_sum", r.l_dispersion_sum},
                            {"numeric_r_opt_bohr", r.numeric_r_opt},
                            {"numeric_e_opt_hartree", r.numeric_e_opt}});
        csv.add_row({format_double(r.z), format_double(r.r_opt), format_double(r.e_opt),
                     format_double(r.p_r_dispersion), format_double(r.l_dispersion_sum),
                     format_double(r.numeric_r_opt), format_double(r.numeric_e_opt)});
    }

    std::vector<Check> checks{
        Check::bound("variational_numeric_agreement", worst_numeric, kVariationalRadiusTol),
        checks::variational_z1(u), checks::variational_scaling(u)};

    json config = common_config(common);
    config["Z"] = o.z;
    config["Z_max"] = o.z_max;

    json results{{"table", std::move(rows)}};
    if (zs.size() == 1) {
        const VariationalResult r = minimize_energy(zs[0], u);
        results["r_opt_bohr"] = r.r_opt;
        results["e_opt_hartree"] = r.e_opt;
    }

    return emit_report(common, "variational", std::move(config), std::move(results), checks,
                       csv);
}

// ---------------------------------------------------------------------------
// angular
// ---------------------------------------------------------------------------

struct AngularOpts {
    int l = 0;
    int l_max = -1;  // <0: single l
};

int run_angular(const CommonOpts& common, const AngularOpts& o) {
    const UnitSystem u = atomic_units();
    std::vector<int> ls;
    if (o.l_max >= 0) {
        for (int l = o.l; l <= o.l_max; ++l) ls.push_back(l);
    } else {
        ls.push_back(o.l);
    }

    CsvTable csv({"l", "lz_mean", "dx2", "dy2", "dz2", "l_square_assembled",
                  "l_square_half_integer", "l_square_standard", "ineq_xy_z", "ineq_yz_x",
                  "ineq_zx_y"});
    json rows = json::array();
    for (int l : ls) {
        const AngularMomentumReport r = l_square_report(l, u);
        rows.push_back(json{{"l", r.l},
                            {"lz_mean", r.lz_mean},
                            {"dx2", r.dx2},
                            {"dy2", r.dy2},
                            {"dz2", r.dz2},
                            {"l_square_assembled", r.l_square_assembled},
                            {"l_square_half_integer", r.l_square_half_integer},
                            {"l_square_standard", r.l_square_standard},
                            {"inequalities_satisfied",
                             json::array({r.inequalities_satisfied[0],
                                          r.inequalities_satisfied[1],
                                          r.inequalities_satisfied[2]})}});
        csv.add_row({std::to_string(r.l), format_double(r.lz_mean), format_double(r.dx2),
                     format_double(r.dy2), format_double(r.dz2),
                     format_double(r.l_square_assembled),
                     format_double(r.l_square_half_integer),
                     format_double(r.l_square_standard),
                     r.inequalities_satisfied[0] ? "true" : "false",
                     r.inequalities_satisfied[1] ? "true" : "false",
                     r.inequalities_satisfied[2] ? "true" : "false"});
    }

    std::vector<Check> checks{checks::l_square_table(u), checks::angular_inequality_audit(u)};

    json config = common_config(common);
    config["l"] = o.l;
    config["l_max"] = o.l_max;

    json results{{"table", std::move(rows)}};

    return emit_report(common, "angular", std::move(config), std::move(results), checks, csv);
}

// ---------------------------------------------------------------------------
// report: the consolidated desk-scale suite
// ---------------------------------------------------------------------------

struct ReportOpts {
    std::size_t paths = 0;  // 0: per-check full-power defaults
};

int run_report(const CommonOpts& common, const ReportOpts& o) {
    const UnitSystem u = atomic_units();
    const GaussianCloud cloud = GaussianCloud::from_units(u);

    std::vector<Check> checks{checks::zpf_closed_form(u),
                              checks::born_identity(cloud),
                              checks::potential_dual_route(cloud),
                              checks::far_field_coulomb(cloud),
                              checks::self_energy_closed_form(cloud),
                              checks::budget_ratio(u),
                              checks::madelung_residual(u),
                              checks::augmented_residual_weighted_mean(u),
                              checks::energy_budget_balance(u),
                              checks::variational_z1(u),
                              checks::variational_scaling(u),
                              checks::l_square_table(u),
                              checks::angular_inequality_audit(u)};

    // Statistical checks; below their sample thresholds they self-report as
    // skipped rather than failing.
    {
        const WaveState h = WaveState::harmonic_ground(1.0, 1, u);
        SimulationOptions so;
        so.record_stride = 100;
        so.workers = common.workers;
        const std::size_t paths = o.paths != 0 ? o.paths : 250000;
        const TrajectoryEnsemble ens = simulate_ensemble(h, paths, 400, 1e-3, 0, common.seed, so);
        checks.push_back(checks::ou_variance(ens, h));
    }
    {
        const WaveState hyd = WaveState::hydrogen_1s(1.0, u);
        SimulationOptions so;
        so.workers = common.workers;
        const std::size_t paths = o.paths != 0 ? o.paths : 20000;
        const TrajectoryEnsemble ens =
            simulate_ensemble(hyd, paths, 10, 1e-3, 50000, common.seed, so);
        checks.push_back(checks::hydrogen_ks(ens, hyd));
    }
    {
        const WaveState h = WaveState::harmonic_ground(1.0, 1, u);
        SimulationOptions so;
        so.workers = common.workers;
        const std::size_t paths = o.paths != 0 ? o.paths : 2000;
        const TrajectoryEnsemble ens = simulate_ensemble(h, paths, 1000, 5e-3, 0, common.seed, so);
        const SpatialBins bins(-2.5 * h.decay_length(), 2.5 * h.decay_length(), 25);
        checks.push_back(checks::estimator_recovery(estimate_velocities_from_paths(ens, bins), h));
    }

    CsvTable csv({"name", "status", "measured", "threshold", "note"});
    for (const Check& c : checks) {
        csv.add_row({c.name, to_string(c.status), format_double(c.measured),
                     format_double(c.threshold), c.note});
    }

    json config = common_config(common);
    config["paths"] = o.paths;

    std::size_t n_pass = 0, n_fail = 0, n_skip = 0;
    for (const Check& c : checks) {
        if (c.status == CheckStatus::pass) ++n_pass;
        if (c.status == CheckStatus::fail) ++n_fail;
        if (c.status == CheckStatus::skipped) ++n_skip;
    }
    json results{{"n_pass", n_pass}, {"n_fail", n_fail}, {"n_skipped", n_skip}};

    return emit_report(common, "report", std::move(config), std::move(results), checks, csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stochastic-electron workbench"};
    app.require_subcommand(1);

    CommonOpts common;
    // Shared flags are registered per subcommand so `stochel sub --flag` works.
    auto add_common = [&common](CLI::App* sub) {
        sub->add_option("--format", common.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", common.out, "Output path (default: stdout)");
        sub->add_flag("--no-timestamp", common.no_timestamp,
                      "Suppress the timestamp field for byte-stable output");
        sub->add_option("--seed", common.seed, "Master seed")->envname("STOCHEL_SEED");
        sub->add_option("--abs-tol", common.abs_tol, "Quadrature absolute tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--rel-tol", common.rel_tol, "Quadrature relative tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-depth", common.max_depth, "Quadrature max depth")
            ->check(CLI::Range(1, 60));
        sub->add_option("--workers", common.workers, "Worker threads (0 = auto)");
    };

    ZpfOpts zpf_opts;
    CLI::App* zpf_cmd = app.add_subcommand("zpf", "Zero-point-field kinetic energy");
    add_common(zpf_cmd);
    zpf_cmd->add_option("--omega-min", zpf_opts.omega_min, "Lower spectral cutoff (atomic)")
        ->check(CLI::NonNegativeNumber);
    zpf_cmd->add_option("--omega-max", zpf_opts.omega_max,
                        "Upper spectral cutoff (atomic; default 2 m C^2 / hbar)");

    CloudOpts cloud_opts;
    CLI::App* cloud_cmd = app.add_subcommand("cloud", "Gaussian charge-cloud tables");
    add_common(cloud_cmd);
    cloud_cmd->add_option("--grid-points", cloud_opts.grid_points, "Radial grid size")
        ->check(CLI::Range(std::size_t{16}, std::size_t{4096}));

    SimulateOpts sim_opts;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "Trembling-motion diffusion ensemble");
    add_common(sim_cmd);
    sim_cmd->add_option("--state", sim_opts.state, "hydrogen | harmonic | plane")
        ->check(CLI::IsMember({"hydrogen", "harmonic", "plane"}));
    sim_cmd->add_option("--Z", sim_opts.z, "Hydrogen nuclear charge")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--omega", sim_opts.omega, "Oscillator angular frequency")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--dims", sim_opts.dims, "Oscillator dimensions (1 or 3)")
        ->check(CLI::IsMember({1, 3}));
    sim_cmd->add_option("--k", sim_opts.k, "Plane-wave number");
    sim_cmd->add_option("--paths", sim_opts.paths, "Number of paths")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--steps", sim_opts.steps, "Recorded integration steps");
    sim_cmd->add_option("--dt", sim_opts.dt, "Time step (atomic)")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--burn-in", sim_opts.burn_in, "Burn-in steps before recording");
    sim_cmd->add_option("--bins", sim_opts.bins, "Estimator bin count");
    sim_cmd->add_option("--bin-lo", sim_opts.bin_lo, "Estimator bin range lower edge");
    sim_cmd->add_option("--bin-hi", sim_opts.bin_hi, "Estimator bin range upper edge");
    sim_cmd->add_option("--record-stride", sim_opts.record_stride,
                        "Record every N-th step")
        ->check(CLI::PositiveNumber);
    sim_cmd->add_option("--diffusion-scale", sim_opts.diffusion_scale,
                        "Multiplier on nu = hbar/2m (1 = physical)")
        ->check(CLI::NonNegativeNumber);

    VariationalOpts var_opts;
    CLI::App* var_cmd = app.add_subcommand("variational", "H-like variational ground state");
    add_common(var_cmd);
    var_cmd->add_option("--Z", var_opts.z, "Nuclear charge")->check(CLI::PositiveNumber);
    var_cmd->add_option("--Z-max", var_opts.z_max, "Table mode: run Z..Z-max in unit steps");

    AngularOpts ang_opts;
    CLI::App* ang_cmd = app.add_subcommand("angular", "Angular-momentum dispersion tables");
    add_common(ang_cmd);
    ang_cmd->add_option("--l", ang_opts.l, "Angular momentum quantum number")
        ->check(CLI::NonNegativeNumber);
    ang_cmd->add_option("--l-max", ang_opts.l_max, "Table mode: run l..l-max");

    ReportOpts rep_opts;
    CLI::App* rep_cmd = app.add_subcommand("report", "Consolidated pass/fail suite");
    add_common(rep_cmd);
    rep_cmd->add_option("--paths", rep_opts.paths,
                        "Path count for the statistical checks (0 = full power)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << "stochel: " << e.what() << "\n";
        return 2;
    }

    try {
        if (zpf_cmd->parsed()) return run_zpf(common, zpf_opts);
        if (cloud_cmd->parsed()) return run_cloud(common, cloud_opts);
        if (sim_cmd->parsed()) return run_simulate(common, sim_opts);
        if (var_cmd->parsed()) return run_variational(common, var_opts);
        if (ang_cmd->parsed()) return run_angular(common, ang_opts);
        if (rep_cmd->parsed()) return run_report(common, rep_opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "stochel: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "stochel: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
