#include "bactlink/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "bactlink/kinetics.hpp"
#include "bactlink/rng.hpp"

namespace bactlink {

namespace {

// One random stream per noise stage so that toggling a stage, or changing
// the thread partition, never shifts the draws of another stage.
constexpr std::uint64_t kStreamTxRates = 0;
constexpr std::uint64_t kStreamDistance = 1;
constexpr std::uint64_t kStreamRxRates = 2;
constexpr std::uint64_t kStreamTxReceptors = 3;
constexpr std::uint64_t kStreamRxReceptors = 4;

struct Counters {
    std::int64_t clamps = 0;
    std::int64_t redraws = 0;
};

double exact_binding(double conc, double gamma_j, double kappa_j,
                     Counters& ctr) {
    if (gamma_j < 0.0) {
        gamma_j = 0.0;
        ++ctr.clamps;
    }
    if (kappa_j < 0.0) {
        kappa_j = 0.0;
        ++ctr.clamps;
    }
    const double bound = conc * gamma_j;
    const double total = bound + kappa_j;
    if (total <= 0.0) {
        ++ctr.clamps;
        return 0.0;
    }
    return bound / total;
}

double linear_binding(double p_op, double rel_dev, bool clamp_needed,
                      Counters& ctr) {
    double p = p_op + p_op * (1.0 - p_op) * rel_dev;
    if (p < 0.0 || p > 1.0) {
        ++ctr.clamps;
        if (clamp_needed) p = std::clamp(p, 0.0, 1.0);
    }
    return p;
}

}  // namespace

SimResult simulate_link(double stimulus_nM, const NodeParams& node,
                        const ChannelParams& ch, const SimConfig& cfg) {
    node.validate();
    ch.validate();
    if (!(stimulus_nM >= 0.0))
        throw std::domain_error("stimulus must be >= 0");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int threads = std::clamp(cfg.threads, 1, 256);

    const int n = node.bacteria;
    const int receptors = node.kinetics.receptors;
    const double gamma = node.kinetics.gamma;
    const double kappa = node.kinetics.kappa;
    const double sd_gamma = std::sqrt(node.sigma_gamma_sq);
    const double sd_kappa = std::sqrt(node.sigma_kappa_sq);
    const double sd_r = std::sqrt(ch.sigma_r_sq);
    const double r0 = ch.distance;
    const bool lin = cfg.model == NoiseModel::linearized;
    const bool clamp_needed = cfg.truncate || cfg.sample_receptors;

    SimResult res;
    res.stimulus_nM = stimulus_nM;
    res.p_s_star = steady_binding_probability(stimulus_nM, node.kinetics);
    const double a_sat = saturation_concentration(node, ch);
    res.a0_nM = a_sat * res.p_s_star;
    res.p0 = steady_binding_probability(res.a0_nM, node.kinetics);
    res.x.resize(static_cast<std::size_t>(cfg.trials));
    res.a_r.resize(static_cast<std::size_t>(cfg.trials));
    res.y.resize(static_cast<std::size_t>(cfg.trials));

    const auto run_trial = [&](std::int64_t t, Counters& ctr) {
        double x_total = 0.0;
        double rel_sum = 0.0;  // node-average component deviation
        {
            GaussianSource g(make_stream(cfg.seed, kStreamTxRates,
                                         static_cast<std::uint64_t>(t)));
            SplitMix64 b = make_stream(cfg.seed, kStreamTxReceptors,
                                       static_cast<std::uint64_t>(t));
            for (int j = 0; j < n; ++j) {
                double eg = 0.0, ek = 0.0;
                if (cfg.stages.transmitter_noise) {
                    eg = g.next() * sd_gamma;
                    ek = g.next() * sd_kappa;
                }
                const double rel = eg / gamma - ek / kappa;
                rel_sum += rel;
                const double pj =
                    lin ? linear_binding(res.p_s_star, rel, clamp_needed, ctr)
                        : exact_binding(stimulus_nM, gamma + eg, kappa + ek,
                                        ctr);
                x_total += cfg.sample_receptors
                               ? static_cast<double>(binomial(b, receptors, pj))
                               : receptors * pj;
            }
        }

        double r = r0;
        if (cfg.stages.distance_noise && sd_r > 0.0) {
            GaussianSource g(make_stream(cfg.seed, kStreamDistance,
                                         static_cast<std::uint64_t>(t)));
            r = r0 + g.next() * sd_r;
            while (r <= 0.0) {
                ++ctr.redraws;
                r = r0 + g.next() * sd_r;
            }
        }

        double eps_t = 0.0;
        double eps_r_rel = (r - r0) / r0;
        double a_r;
        if (lin) {
            if (cfg.stages.transmitter_noise)
                eps_t = (1.0 - res.p_s_star) * rel_sum / n;
            a_r = res.a0_nM * (1.0 + eps_t - eps_r_rel);
        } else {
            a_r = a_sat * (x_total / (static_cast<double>(n) * receptors)) *
                  (r0 / r);
        }

        double y_total = 0.0;
        {
            GaussianSource g(make_stream(cfg.seed, kStreamRxRates,
                                         static_cast<std::uint64_t>(t)));
            SplitMix64 b = make_stream(cfg.seed, kStreamRxReceptors,
                                       static_cast<std::uint64_t>(t));
            for (int j = 0; j < n; ++j) {
                double eg = 0.0, ek = 0.0;
                if (cfg.stages.receiver_noise) {
                    eg = g.next() * sd_gamma;
                    ek = g.next() * sd_kappa;
                }
                double pj;
                if (lin) {
                    const double rel =
                        eg / gamma - ek / kappa - eps_r_rel + eps_t;
                    pj = linear_binding(res.p0, rel, clamp_needed, ctr);
                } else {
                    pj = exact_binding(a_r, gamma + eg, kappa + ek, ctr);
                }
                y_total += cfg.sample_receptors
                               ? static_cast<double>(binomial(b, receptors, pj))
                               : receptors * pj;
            }
        }

        const auto idx = static_cast<std::size_t>(t);
        res.x[idx] = x_total;
        res.a_r[idx] = a_r;
        res.y[idx] = y_total;
    };

    if (threads == 1) {
        Counters ctr;
        for (std::int64_t t = 0; t < cfg.trials; ++t) run_trial(t, ctr);
        res.clamp_events = ctr.clamps;
        res.distance_redraws = ctr.redraws;
    } else {
        std::vector<Counters> counters(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const std::int64_t chunk = (cfg.trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const std::int64_t lo = w * chunk;
            const std::int64_t hi = std::min<std::int64_t>(lo + chunk, cfg.trials);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi, w] {
                for (std::int64_t t = lo; t < hi; ++t)
                    run_trial(t, counters[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& th : pool) th.join();
        for (const Counters& c : counters) {
            res.clamp_events += c.clamps;
            res.distance_redraws += c.redraws;
        }
    }
    return res;
}

namespace {

// Kahan-compensated accumulator: totals do not depend on how trials were
// partitioned, and stay accurate for long runs.
struct CompensatedSum {
    double total = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

}  // namespace

Moments empirical_moments(const std::vector<double>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("need at least two samples");
    CompensatedSum sum;
    for (double v : samples) sum.add(v);
    const double mean = sum.total / static_cast<double>(samples.size());
    CompensatedSum ss;
    for (double v : samples) ss.add((v - mean) * (v - mean));
    return {mean, ss.total / static_cast<double>(samples.size() - 1)};
}

double empirical_symbol_error(const std::vector<double>& normalized_outputs,
                              const std::vector<double>& levels,
                              int true_index) {
    if (levels.size() < 2)
        throw std::invalid_argument("need at least two levels");
    if (!std::is_sorted(levels.begin(), levels.end()))
        throw std::invalid_argument("levels must be sorted ascending");
    if (true_index < 0 || true_index >= static_cast<int>(levels.size()))
        throw std::invalid_argument("true_index out of range");
    if (normalized_outputs.empty())
        throw std::invalid_argument("no samples");

    std::vector<double> midpoints(levels.size() - 1);
    for (std::size_t i = 0; i + 1 < levels.size(); ++i)
        midpoints[i] = 0.5 * (levels[i] + levels[i + 1]);

    std::int64_t wrong = 0;
    for (double v : normalized_outputs) {
        const auto it =
            std::upper_bound(midpoints.begin(), midpoints.end(), v);
        const int decoded = static_cast<int>(it - midpoints.begin());
        wrong += decoded != true_index ? 1 : 0;
    }
    return static_cast<double>(wrong) /
           static_cast<double>(normalized_outputs.size());
}

}  // namespace bactlink
