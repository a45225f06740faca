#include "bactlink/transmitter.hpp"

#include <stdexcept>

namespace bactlink {

double NodeParams::relative_noise_sq() const {
    return sigma_gamma_sq / (kinetics.gamma * kinetics.gamma) +
           sigma_kappa_sq / (kinetics.kappa * kinetics.kappa);
}

void NodeParams::validate() const {
    kinetics.validate();
    if (bacteria < 1) throw std::domain_error("node: bacteria count must be >= 1");
    if (sigma_gamma_sq < 0.0 || sigma_kappa_sq < 0.0)
        throw std::domain_error("node: noise variances must be non-negative");
}

OutputMoments transmitter_moments(double p_star, const NodeParams& node) {
    if (p_star < 0.0 || p_star > 1.0)
        throw std::domain_error("transmitter_moments: p_star outside [0, 1]");
    if (node.bacteria < 1 || node.kinetics.receptors < 1)
        throw std::domain_error(
            "transmitter_moments: bacteria and receptor counts must be >= 1");
    const double n = node.bacteria;
    const double N = node.kinetics.receptors;
    const double rho = node.relative_noise_sq();
    const double pq = p_star * (1.0 - p_star);

    OutputMoments m;
    m.mean = n * N * p_star;
    m.variance = n * N * N * pq * pq * rho;
    m.exact_variance = n * N * pq + n * (N * N - N) * pq * pq * rho;
    return m;
}

RateStats output_rate_stats(double p_star, const NodeParams& node) {
    const OutputMoments m = transmitter_moments(p_star, node);
    const double a = node.kinetics.alpha;
    return {a * m.mean, a * a * m.variance};
}

}  // namespace bactlink
