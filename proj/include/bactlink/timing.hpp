#pragma once

#include "bactlink/channel.hpp"
#include "bactlink/kinetics.hpp"

namespace bactlink {

/// Fraction of the steady-state concentration present at distance r_cm a
/// time t_s after a continuous emission starts: erfc(r / sqrt(4 D t)).
double rise_ratio(double r_cm, double t_s, const ChannelParams& ch);

/// Time for the diffusion front to reach `threshold` of the steady level:
/// (r^2 / 4D) / inverse_erfc(threshold)^2.
double rise_time(double r_cm, const ChannelParams& ch, double threshold = 0.9);

/// Time after emission stops (having been on for t_on_s) until the residual
/// concentration decays below `threshold` of the steady level. Returns 0
/// when the level never reached the threshold while on.
double fall_time(double r_cm, double t_on_s, const ChannelParams& ch,
                 double threshold = 0.1);

/// Settling time of the reception cascade at a given ambient concentration:
/// three times the summed stage time constants, in minutes.
double reception_delay(double concentration_nM, const KineticParams& k);

struct DelayThresholds {
    double rise = 0.9;  // fraction of steady level counted as "arrived"
    double fall = 0.1;  // residual fraction counted as "cleared"
};

struct DelayBreakdown {
    double t_rise_s = 0.0;
    double t_reception_min = 0.0;
    double t_fall_s = 0.0;
    double t0_s = 0.0;  // emission-on interval: rise + reception
    double t_total_s = 0.0;
    DelayThresholds thresholds;
};

/// End-to-end symbol time at the channel's own distance: diffusion rise,
/// cascade settling at reception_nM, then clearance after shutoff.
DelayBreakdown link_delays(double reception_nM, const KineticParams& k,
                           const ChannelParams& ch, DelayThresholds thr = {});

/// Throughput from a per-symbol information content and symbol duration.
double bits_per_hour(double bits_per_symbol, double total_delay_s);

}  // namespace bactlink
