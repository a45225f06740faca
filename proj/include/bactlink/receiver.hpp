#pragma once

#include "bactlink/channel.hpp"
#include "bactlink/transmitter.hpp"

namespace bactlink {

/// First-order sensitivity of the entrapment probability to each noise
/// source: p_r ~= p0 + c_gamma eps_gamma/gamma + c_kappa eps_kappa/kappa
///              + c_distance eps_r/r0 + c_transmitter eps_t.
/// All coefficients have magnitude p0 (1 - p0); the signs differ.
struct EntrapmentSensitivity {
    double p0 = 0.0;
    double c_gamma = 0.0;        // +p0(1-p0)
    double c_kappa = 0.0;        // -p0(1-p0)
    double c_distance = 0.0;     // -p0(1-p0)
    double c_transmitter = 0.0;  // +p0(1-p0)
};

EntrapmentSensitivity receiver_entrapment(double concentration_nM,
                                          const NodeParams& node);

/// Moments of the receiver output Y (total activated receptors across the
/// node) at operating point p0, under the first-order noise model with
/// combined relative variance sigma0^2 = rho_gamma_kappa + sigma_r^2/r0^2:
///   mean      = n N p0
///   variance  = n N^2 p0^2 (1-p0)^2 sigma0^2        (large-N, first-order)
/// The decomposition fields split that variance by noise source (law of
/// total variance), and exact_variance adds what the first-order formula
/// drops: the per-receptor Bernoulli floor, the N^2 - N correction, and the
/// n^2 scaling of noise that is shared across the node (distance error,
/// transmitter fluctuations) rather than drawn per bacterium.
struct ReceiverMoments {
    double p0 = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double sigma0_sq = 0.0;
    double variance_reception = 0.0;    // gamma/kappa part (per bacterium)
    double variance_distance = 0.0;     // distance part
    double variance_transmitter = 0.0;  // transmitter part (0 unless included)
    double exact_variance = 0.0;
};

ReceiverMoments receiver_moments(double p0, const NodeParams& node,
                                 const ChannelParams& ch,
                                 bool include_transmitter_noise = false);

/// sigma0^2 implied by the node/channel parameters.
double sigma0_sq(const NodeParams& node, const ChannelParams& ch);

/// Concentration that puts the receiver at operating point p0 (inverse of
/// the steady binding curve): kappa p0 / (gamma (1 - p0)). p0 = 1 is a
/// domain error (unreachable at finite concentration).
double p0_to_concentration(double p0, const KineticParams& k);

/// Signal-to-noise ratio E(Y)/sqrt(Var(Y)) = sqrt(n) / ((1-p0) sigma0).
/// Returns +infinity when p0 = 1 or sigma0 = 0.
double snr_ratio(double p0, const NodeParams& node, double sigma0_sq);

}  // namespace bactlink
