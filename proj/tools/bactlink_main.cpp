#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bactlink/capacity.hpp"
#include "bactlink/config.hpp"
#include "bactlink/csv.hpp"
#include "bactlink/modulation.hpp"
#include "bactlink/montecarlo.hpp"
#include "bactlink/receiver.hpp"
#include "bactlink/timing.hpp"
#include "bactlink/units.hpp"
#include "bactlink/validate.hpp"

namespace {

using bactlink::format_double;
using bactlink::format_int;

std::string join_semicolon(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ';';
        out += format_double(values[i]);
    }
    return out;
}

void run_capacity(const bactlink::ExperimentConfig& cfg, std::ostream& os,
                  bool timestamp) {
    bactlink::CsvWriter w(
        os, "capacity.v1",
        {"a_max_nM", "p_max", "capacity_bits", "iterations", "gap_bits"},
        timestamp);
    const double s0 = bactlink::sigma0_sq(cfg.node, cfg.channel);
    const auto points = bactlink::capacity_vs_amax(
        cfg.capacity.sweep_nM, cfg.node, s0, cfg.capacity.k_in,
        cfg.capacity.k_out, cfg.capacity.tol_bits, cfg.capacity.max_iter);
    for (const bactlink::CapacityPoint& pt : points)
        w.row({format_double(pt.a_max_nM), format_double(pt.p_max),
               format_double(pt.capacity_bits), format_int(pt.iterations),
               format_double(pt.gap_bits)});
}

void run_timing(const bactlink::ExperimentConfig& cfg, std::ostream& os,
                bool timestamp) {
    bactlink::CsvWriter w(os, "timing.v1",
                          {"r_um", "n", "capacity_bits", "t_rise_s",
                           "t_reception_min", "t_fall_s", "t_total_hr",
                           "bits_per_hour"},
                          timestamp);
    const bactlink::DelayThresholds thr{cfg.timing.rise_threshold,
                                        cfg.timing.fall_threshold};
    // Capacity only depends on (n, sigma0); reuse across the distance grid.
    std::map<std::pair<int, double>, double> capacity_cache;
    for (double r_um : cfg.timing.r_um) {
        bactlink::ChannelParams ch = cfg.channel;
        ch.distance = bactlink::um_to_cm(r_um);
        const bactlink::DelayBreakdown d = bactlink::link_delays(
            cfg.timing.reception_nM, cfg.node.kinetics, ch, thr);
        for (int n : cfg.timing.n_values) {
            bactlink::NodeParams node = cfg.node;
            node.bacteria = n;
            const double s0 = bactlink::sigma0_sq(node, ch);
            const auto key = std::make_pair(n, s0);
            auto it = capacity_cache.find(key);
            if (it == capacity_cache.end()) {
                const auto pts = bactlink::capacity_vs_amax(
                    {cfg.capacity.a_max_nM}, node, s0, cfg.capacity.k_in,
                    cfg.capacity.k_out, cfg.capacity.tol_bits,
                    cfg.capacity.max_iter);
                it = capacity_cache.emplace(key, pts.front().capacity_bits)
                         .first;
            }
            const double capacity_bits = it->second;
            const double total_hr = bactlink::seconds_to_hours(d.t_total_s);
            w.row({format_double(r_um), format_int(n),
                   format_double(capacity_bits), format_double(d.t_rise_s),
                   format_double(d.t_reception_min),
                   format_double(d.t_fall_s), format_double(total_hr),
                   format_double(
                       bactlink::bits_per_hour(capacity_bits, d.t_total_s))});
        }
    }
}

void run_modulation(const bactlink::ExperimentConfig& cfg, std::ostream& os,
                    bool timestamp) {
    bactlink::CsvWriter w(os, "modulation.v1",
                          {"m", "a_max_nM", "p_max", "rate_bits", "log2m",
                           "total_error", "per_symbol_error"},
                          timestamp);
    const double s0 = bactlink::sigma0_sq(cfg.node, cfg.channel);
    for (int m : cfg.modulation.m_values) {
        bactlink::MarySpec spec;
        spec.m = m;
        spec.one_sided_endpoints = cfg.modulation.one_sided_endpoints;
        const auto results = bactlink::error_vs_amax(
            spec, cfg.modulation.sweep_nM, cfg.node, s0, cfg.modulation.k_out,
            cfg.modulation.tol_bits, cfg.modulation.max_iter);
        for (const bactlink::MaryResult& res : results)
            w.row({format_int(res.m), format_double(res.a_max_nM),
                   format_double(res.p_max), format_double(res.rate_bits),
                   format_double(res.log2_m), format_double(res.total_error),
                   join_semicolon(res.symbol_errors)});
    }
}

void dump_samples(const bactlink::ExperimentConfig& cfg,
                  const std::string& path, bool timestamp) {
    const double stimulus = bactlink::required_stimulus(
        cfg.montecarlo.target_nM, cfg.node, cfg.channel);
    const bactlink::SimResult sim = bactlink::simulate_link(
        stimulus, cfg.node, cfg.channel, cfg.montecarlo.sim);
    std::ofstream f(path);
    if (!f) throw bactlink::ConfigError("cannot open dump file '" + path + "'");
    bactlink::CsvWriter w(f, "samples.v1", {"trial", "x", "a_r_nM", "y"},
                          timestamp);
    for (std::size_t t = 0; t < sim.y.size(); ++t)
        w.row({format_int(static_cast<std::int64_t>(t)),
               format_double(sim.x[t]), format_double(sim.a_r[t]),
               format_double(sim.y[t])});
}

int run_validate_cmd(const bactlink::ExperimentConfig& cfg, std::ostream& os) {
    for (const std::string& warn : cfg.warnings)
        os << "WARNING: " << warn << "\n";
    const bactlink::ValidationReport rep = bactlink::run_validate(
        cfg.montecarlo.target_nM, cfg.node, cfg.channel, cfg.montecarlo.sim);
    os << rep.text;
    return rep.all_passed ? 0 : 1;
}

void run_kinetics(const bactlink::ExperimentConfig& cfg, std::ostream& os,
                  bool timestamp, double t_max_min, double dt_min,
                  double concentration_nM) {
    if (!(dt_min > 0.0)) throw bactlink::ConfigError("--dt must be > 0");
    if (!(t_max_min >= 0.0)) throw bactlink::ConfigError("--t-max must be >= 0");
    bactlink::CsvWriter w(os, "kinetics.v1", {"t_min", "binding_p", "s1", "s2"},
                          timestamp);
    const bactlink::KineticParams& k = cfg.node.kinetics;
    const double p_star =
        bactlink::steady_binding_probability(concentration_nM, k);
    for (int i = 0;; ++i) {
        const double t = i * dt_min;
        if (t > t_max_min * (1.0 + 1e-12)) break;
        const double p = bactlink::binding_transient(concentration_nM, k, 0.0, t);
        const bactlink::ExpressionState es =
            bactlink::expression_transient(p_star, k, t);
        w.row({format_double(t), format_double(p), format_double(es.s1),
               format_double(es.s2)});
    }
}

void run_channel(const bactlink::ExperimentConfig& cfg, std::ostream& os,
                 bool timestamp, double t_max_s, double dt_s, double t_on_s) {
    if (!(dt_s > 0.0)) throw bactlink::ConfigError("--dt must be > 0");
    if (!(t_max_s >= 0.0)) throw bactlink::ConfigError("--t-max must be >= 0");
    if (!(t_on_s > 0.0)) throw bactlink::ConfigError("--t-on must be > 0");
    bactlink::CsvWriter w(os, "channel.v1", {"t_s", "rise_frac", "pulse_frac"},
                          timestamp);
    bactlink::ChannelParams pulsed = cfg.channel;
    pulsed.pulse_s = t_on_s;
    const double unit_beta = 4.0 * std::numbers::pi * cfg.channel.diffusion *
                             cfg.channel.distance;  // normalizes steady to 1
    for (int i = 0;; ++i) {
        const double t = i * dt_s;
        if (t > t_max_s * (1.0 + 1e-12)) break;
        const double rise =
            bactlink::rise_ratio(cfg.channel.distance, t > 0.0 ? t : 0.0,
                                 cfg.channel);
        const double pulse = bactlink::step_response(cfg.channel.distance, t,
                                                     unit_beta, pulsed);
        w.row({format_double(t), format_double(rise), format_double(pulse)});
    }
}

template <typename Fn>
int with_output(const std::string& path, Fn fn) {
    if (path.empty()) return fn(std::cout);
    std::ofstream f(path);
    if (!f)
        throw bactlink::ConfigError("cannot open output file '" + path + "'");
    return fn(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diffusion-based bacterial link: capacity, timing, "
                 "modulation, and validation experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    std::uint64_t seed_override = 0;
    int threads_override = 0;
    bool no_timestamp = false;
    app.add_option("--config", config_path, "configuration file (key = value sections)");
    app.add_option("--out", out_path, "output path (default: stdout)");
    CLI::Option* seed_opt =
        app.add_option("--seed", seed_override, "override montecarlo.seed");
    CLI::Option* threads_opt = app.add_option(
        "--threads", threads_override, "override montecarlo.threads");
    app.add_flag("--no-timestamp", no_timestamp,
                 "omit the timestamp comment line from CSV output");

    CLI::App* cmd_capacity =
        app.add_subcommand("capacity", "capacity vs peak concentration (CSV)");
    CLI::App* cmd_timing = app.add_subcommand(
        "timing", "delay breakdown and throughput over the r x n grid (CSV)");
    CLI::App* cmd_modulation = app.add_subcommand(
        "modulation", "m-ary rate and error vs peak concentration (CSV)");
    CLI::App* cmd_validate = app.add_subcommand(
        "validate", "compare closed-form moments against simulation (report)");
    CLI::App* cmd_kinetics =
        app.add_subcommand("kinetics", "binding/expression transients (CSV)");
    CLI::App* cmd_channel =
        app.add_subcommand("channel", "diffusion step response (CSV)");

    double timing_rise = -1.0, timing_fall = -1.0;
    CLI::Option* rise_opt = cmd_timing->add_option(
        "--rise-threshold", timing_rise, "override timing.rise_threshold");
    CLI::Option* fall_opt = cmd_timing->add_option(
        "--fall-threshold", timing_fall, "override timing.fall_threshold");

    std::int64_t validate_trials = 0;
    CLI::Option* trials_opt = cmd_validate->add_option(
        "--trials", validate_trials,
        "override montecarlo.trials (failed checks below 10000 trials "
        "report UNDERPOWERED, not FAIL)");
    std::string dump_path;
    cmd_validate->add_option("--dump", dump_path,
                             "also write raw per-trial samples (CSV)");

    double kin_tmax = 240.0, kin_dt = 1.0, kin_conc = -1.0;
    cmd_kinetics->add_option("--t-max", kin_tmax, "grid end, minutes");
    cmd_kinetics->add_option("--dt", kin_dt, "grid step, minutes");
    CLI::Option* conc_opt = cmd_kinetics->add_option(
        "--concentration", kin_conc, "driving concentration, nM");

    double ch_tmax = 600.0, ch_dt = 5.0, ch_ton = 300.0;
    cmd_channel->add_option("--t-max", ch_tmax, "grid end, seconds");
    cmd_channel->add_option("--dt", ch_dt, "grid step, seconds");
    cmd_channel->add_option("--t-on", ch_ton, "emission pulse length, seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // malformed invocation is a config error
    }

    try {
        bactlink::ExperimentConfig cfg = config_path.empty()
                                             ? bactlink::default_config()
                                             : bactlink::load_config(config_path);
        if (*seed_opt) cfg.montecarlo.sim.seed = seed_override;
        if (*threads_opt) {
            if (threads_override < 1)
                throw bactlink::ConfigError("--threads must be >= 1");
            cfg.montecarlo.sim.threads = threads_override;
        }
        if (*rise_opt) cfg.timing.rise_threshold = timing_rise;
        if (*fall_opt) cfg.timing.fall_threshold = timing_fall;
        if (*rise_opt || *fall_opt) cfg.finalize();  // re-check ranges
        if (*trials_opt) {
            if (validate_trials < 1)
                throw bactlink::ConfigError("--trials must be >= 1");
            cfg.montecarlo.sim.trials = validate_trials;
        }
        if (!*conc_opt) kin_conc = cfg.timing.reception_nM;

        const bool timestamp = !no_timestamp;
        if (app.got_subcommand(cmd_capacity))
            return with_output(out_path, [&](std::ostream& os) {
                run_capacity(cfg, os, timestamp);
                return 0;
            });
        if (app.got_subcommand(cmd_timing))
            return with_output(out_path, [&](std::ostream& os) {
                run_timing(cfg, os, timestamp);
                return 0;
            });
        if (app.got_subcommand(cmd_modulation))
            return with_output(out_path, [&](std::ostream& os) {
                run_modulation(cfg, os, timestamp);
                return 0;
            });
        if (app.got_subcommand(cmd_validate)) {
            const int rc = with_output(out_path, [&](std::ostream& os) {
                return run_validate_cmd(cfg, os);
            });
            if (!dump_path.empty()) dump_samples(cfg, dump_path, timestamp);
            return rc;
        }
        if (app.got_subcommand(cmd_kinetics)) {
            if (!(kin_conc >= 0.0))
                throw bactlink::ConfigError("--concentration must be >= 0");
            return with_output(out_path, [&](std::ostream& os) {
                run_kinetics(cfg, os, timestamp, kin_tmax, kin_dt, kin_conc);
                return 0;
            });
        }
        if (app.got_subcommand(cmd_channel))
            return with_output(out_path, [&](std::ostream& os) {
                run_channel(cfg, os, timestamp, ch_tmax, ch_dt, ch_ton);
                return 0;
            });
        return 2;  // unreachable: require_subcommand(1)
    } catch (const bactlink::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
