#include "bactlink/timing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bactlink/core.hpp"
#include "bactlink/units.hpp"

namespace bactlink {

namespace {

double fraction_of_steady(double r_cm, double t_s, double diffusion) {
    if (t_s <= 0.0) return 0.0;
    if (std::isinf(t_s)) return 1.0;
    return erfc(r_cm / std::sqrt(4.0 * diffusion * t_s));
}

void check_threshold(double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::domain_error("threshold must lie in (0, 1)");
}

}  // namespace

double rise_ratio(double r_cm, double t_s, const ChannelParams& ch) {
    ch.validate();
    if (!(r_cm > 0.0)) throw std::domain_error("distance must be > 0");
    return fraction_of_steady(r_cm, t_s, ch.diffusion);
}

double rise_time(double r_cm, const ChannelParams& ch, double threshold) {
    ch.validate();
    if (!(r_cm > 0.0)) throw std::domain_error("distance must be > 0");
    check_threshold(threshold);
    const double z = inverse_erfc(threshold);
    return r_cm * r_cm / (4.0 * ch.diffusion * z * z);
}

double fall_time(double r_cm, double t_on_s, const ChannelParams& ch,
                 double threshold) {
    ch.validate();
    if (!(r_cm > 0.0)) throw std::domain_error("distance must be > 0");
    if (!(t_on_s > 0.0)) throw std::domain_error("on-time must be > 0");
    check_threshold(threshold);

    // Residual level tau seconds after shutoff. Starts at the level reached
    // while on, decays to zero once the emitted cloud has passed.
    const auto level = [&](double tau) {
        return fraction_of_steady(r_cm, t_on_s + tau, ch.diffusion) -
               fraction_of_steady(r_cm, tau, ch.diffusion);
    };

    if (fraction_of_steady(r_cm, t_on_s, ch.diffusion) <= threshold)
        return 0.0;

    double hi = r_cm * r_cm / (4.0 * ch.diffusion);
    for (int i = 0; i < 1024 && level(hi) >= threshold; ++i) hi *= 2.0;
    if (level(hi) >= threshold)
        throw std::runtime_error("fall time: residual level does not decay");
    return bisect(level, 0.0, hi, threshold);
}

double reception_delay(double concentration_nM, const KineticParams& k) {
    k.validate();
    if (!(concentration_nM > 0.0))
        throw std::domain_error("concentration must be > 0");
    return 3.0 * (binding_time_constant(concentration_nM, k) + 1.0 / k.b1 +
                  1.0 / k.b2);
}

DelayBreakdown link_delays(double reception_nM, const KineticParams& k,
                           const ChannelParams& ch, DelayThresholds thr) {
    check_threshold(thr.rise);
    check_threshold(thr.fall);
    DelayBreakdown d;
    d.thresholds = thr;
    d.t_rise_s = rise_time(ch.distance, ch, thr.rise);
    d.t_reception_min = reception_delay(reception_nM, k);
    d.t0_s = d.t_rise_s + minutes_to_seconds(d.t_reception_min);
    d.t_fall_s = fall_time(ch.distance, d.t0_s, ch, thr.fall);
    d.t_total_s = d.t0_s + d.t_fall_s;
    return d;
}

double bits_per_hour(double bits_per_symbol, double total_delay_s) {
    if (!(bits_per_symbol >= 0.0))
        throw std::domain_error("bits_per_symbol must be >= 0");
    if (!(total_delay_s > 0.0))
        throw std::domain_error("total_delay_s must be > 0");
    return bits_per_symbol / seconds_to_hours(total_delay_s);
}

}  // namespace bactlink
