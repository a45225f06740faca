#pragma once

#include "bactlink/kinetics.hpp"

namespace bactlink {

/// A population node: n identical bacteria, each with N receptors, whose
/// binding constants fluctuate bacterium-to-bacterium with the given
/// variances (zero-mean Normal perturbations of gamma and kappa).
struct NodeParams {
    int bacteria = 100;  // n
    double sigma_gamma_sq = 0.05 * 0.0004 * 0.0004;
    double sigma_kappa_sq = 0.05 * 0.1 * 0.1;
    KineticParams kinetics;

    /// sigma_gamma^2/gamma^2 + sigma_kappa^2/kappa^2
    double relative_noise_sq() const;

    /// True when the first-order (small-noise) analysis is trustworthy.
    bool small_noise_regime() const { return relative_noise_sq() <= 0.5; }

    void validate() const;
};

/// Moments of the total number of activated receptors across the node.
/// `variance` keeps only the parameter-noise term that dominates for large N
/// (n N^2 p^2 (1-p)^2 rho); `exact_variance` also carries the per-receptor
/// Bernoulli term and the N^2 - N correction.
struct OutputMoments {
    double mean = 0.0;
    double variance = 0.0;
    double exact_variance = 0.0;
};

/// Moments of X = sum of activated receptors when every bacterium sits at
/// steady-state binding probability p_star. p_star outside [0, 1] is a
/// domain error.
OutputMoments transmitter_moments(double p_star, const NodeParams& node);

struct RateStats {
    double mean_rate = 0.0;
    double var_rate = 0.0;
};

/// Molecule emission rate beta = alpha X: scales the output moments by alpha
/// and alpha^2 (large-N variance).
RateStats output_rate_stats(double p_star, const NodeParams& node);

}  // namespace bactlink
