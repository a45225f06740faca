#pragma once

#include "bactlink/transmitter.hpp"

#include <limits>

namespace bactlink {

/// Diffusion channel between the node centres. Distances in cm, time in
/// seconds. t0 is the emission pulse length; infinity means a sustained
/// (never switched off) source.
struct ChannelParams {
    double diffusion = 1e-5;  // D, cm^2/s
    double distance = 50e-4;  // r0, cm
    double sigma_r_sq = 0.0;  // variance of the distance error, cm^2
    double pulse_s = std::numeric_limits<double>::infinity();  // t0

    void validate() const;

    /// Relative distance uncertainty sigma_r^2 / r0^2.
    double relative_distance_noise_sq() const {
        return sigma_r_sq / (distance * distance);
    }
};

/// Free-space Green's function (4 pi D t)^{-3/2} exp(-r^2 / 4 D t).
/// Requires t > 0, r >= 0.
double green_impulse(double r_cm, double t_s, const ChannelParams& ch);

/// Concentration at distance r and time t for a source emitting at constant
/// rate beta during [0, t0] and silent afterwards:
///   (beta / 4 pi D r) * [erfc(r/sqrt(4Dt)) - erfc(r/sqrt(4D(t-t0)))]
/// with the second term present only for t >= t0. Requires r > 0, t >= 0.
double step_response(double r_cm, double t_s, double beta, const ChannelParams& ch);

/// Long-time limit of a sustained source: beta / (4 pi D r).
double steady_concentration(double beta, double r_cm, const ChannelParams& ch);

/// Saturation concentration: the steady level reached when every transmitter
/// receptor is active, alpha n N / (4 pi D r0).
double saturation_concentration(const NodeParams& node, const ChannelParams& ch);

/// First/second-order statistics of the concentration seen at the receiver
/// when the transmitter is driven by stimulus A_s (nM).
struct ReceiverConcentrationStats {
    double mean = 0.0;            // A0, nM
    double sigma_t_sq = 0.0;      // relative transmitter-noise variance, (1-p*)^2 rho / n
    double sigma_r_rel_sq = 0.0;  // relative distance-noise variance
    double p_s_star = 0.0;        // transmitter operating point
};

ReceiverConcentrationStats receiver_concentration_stats(double stimulus_nM,
                                                        const NodeParams& node,
                                                        const ChannelParams& ch);

/// Stimulus A_s needed at the transmitter for the receiver to sit at steady
/// concentration A0: kappa A0 / (gamma (A_sat - A0)). Throws std::domain_error
/// once A0 reaches the saturation level (unreachable operating point).
double required_stimulus(double target_nM, const NodeParams& node,
                         const ChannelParams& ch);

}  // namespace bactlink
