#include "bactlink/receiver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bactlink {

EntrapmentSensitivity receiver_entrapment(double concentration_nM,
                                          const NodeParams& node) {
    node.validate();
    const double p0 = steady_binding_probability(concentration_nM, node.kinetics);
    const double pq = p0 * (1.0 - p0);
    EntrapmentSensitivity s;
    s.p0 = p0;
    s.c_gamma = pq;         // faster binding -> more entrapment
    s.c_kappa = -pq;        // faster release -> less
    s.c_distance = -pq;     // longer path dilutes the signal
    s.c_transmitter = pq;   // stronger emission raises it
    return s;
}

double sigma0_sq(const NodeParams& node, const ChannelParams& ch) {
    node.validate();
    ch.validate();
    return node.relative_noise_sq() + ch.relative_distance_noise_sq();
}

double p0_to_concentration(double p0, const KineticParams& k) {
    k.validate();
    if (!(p0 >= 0.0) || p0 >= 1.0)
        throw std::domain_error("p0 must lie in [0, 1)");
    return k.kappa * p0 / (k.gamma * (1.0 - p0));
}

ReceiverMoments receiver_moments(double p0, const NodeParams& node,
                                 const ChannelParams& ch,
                                 bool include_transmitter_noise) {
    node.validate();
    ch.validate();
    if (!(p0 >= 0.0 && p0 <= 1.0))
        throw std::domain_error("p0 must lie in [0, 1]");

    const double n = static_cast<double>(node.bacteria);
    const double N = static_cast<double>(node.kinetics.receptors);
    const double rho = node.relative_noise_sq();
    const double dist = ch.relative_distance_noise_sq();
    const double pq = p0 * (1.0 - p0);
    const double unit = pq * pq;  // scales every relative variance below

    double sigma_t = 0.0;
    if (include_transmitter_noise) {
        const double a0 = p0_to_concentration(p0, node.kinetics);
        const double a_sat = saturation_concentration(node, ch);
        if (a0 >= a_sat)
            throw std::domain_error(
                "operating point unreachable: required concentration exceeds "
                "channel saturation");
        const double ps = a0 / a_sat;  // transmitter binding level feeding p0
        sigma_t = (1.0 - ps) * (1.0 - ps) * node.relative_noise_sq() / n;
    }

    ReceiverMoments m;
    m.p0 = p0;
    m.sigma0_sq = rho + dist + sigma_t;
    m.mean = n * N * p0;
    m.variance_reception = n * N * N * unit * rho;
    m.variance_distance = n * N * N * unit * dist;
    m.variance_transmitter = n * N * N * unit * sigma_t;
    m.variance = m.variance_reception + m.variance_distance + m.variance_transmitter;

    // Exact second moment of Y = sum_j Binomial(N, p_j): the per-receptor
    // floor survives, per-bacterium noise picks up N^2 - N instead of N^2,
    // and node-shared noise (distance, transmitter) is amplified to n^2.
    const double v_indep = unit * rho;
    const double v_shared = unit * (dist + sigma_t);
    m.exact_variance = n * N * (pq - v_indep - v_shared) +
                       n * N * N * v_indep + n * n * N * N * v_shared;
    return m;
}

double snr_ratio(double p0, const NodeParams& node, double sigma0_sq) {
    node.validate();
    if (!(p0 >= 0.0 && p0 <= 1.0))
        throw std::domain_error("p0 must lie in [0, 1]");
    if (sigma0_sq < 0.0) throw std::domain_error("sigma0_sq must be >= 0");
    const double spread = (1.0 - p0) * std::sqrt(sigma0_sq);
    if (spread == 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(static_cast<double>(node.bacteria)) / spread;
}

}  // namespace bactlink
