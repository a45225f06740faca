#include "bactlink/channel.hpp"

#include "bactlink/core.hpp"
#include "bactlink/kinetics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bactlink {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;

// erfc(r / sqrt(4 D t)) with the t <= 0 edge resolved to 0 (no mass arrives
// in zero time); t = +inf gives erfc(0) = 1.
double arrival_fraction(double r, double D, double t) {
    if (t <= 0.0) return 0.0;
    if (std::isinf(t)) return 1.0;
    return erfc(r / std::sqrt(4.0 * D * t));
}
}  // namespace

void ChannelParams::validate() const {
    if (!(diffusion > 0.0))
        throw std::domain_error("channel: diffusion coefficient must be positive");
    if (!(distance > 0.0))
        throw std::domain_error("channel: node distance must be positive");
    if (sigma_r_sq < 0.0)
        throw std::domain_error("channel: sigma_r_sq must be non-negative");
    if (!(pulse_s > 0.0))
        throw std::domain_error("channel: pulse length must be positive");
}

double green_impulse(double r_cm, double t_s, const ChannelParams& ch) {
    if (!(t_s > 0.0)) throw std::domain_error("green_impulse: requires t > 0");
    if (r_cm < 0.0) throw std::domain_error("green_impulse: negative distance");
    const double s = kFourPi * ch.diffusion * t_s;
    return std::pow(s, -1.5) * std::exp(-r_cm * r_cm / (4.0 * ch.diffusion * t_s));
}

double step_response(double r_cm, double t_s, double beta, const ChannelParams& ch) {
    if (!(r_cm > 0.0)) throw std::domain_error("step_response: requires r > 0");
    if (t_s < 0.0) throw std::domain_error("step_response: negative time");
    if (beta < 0.0) throw std::domain_error("step_response: negative emission rate");
    const double D = ch.diffusion;
    double frac = arrival_fraction(r_cm, D, t_s);
    if (t_s >= ch.pulse_s) frac -= arrival_fraction(r_cm, D, t_s - ch.pulse_s);
    return beta / (kFourPi * D * r_cm) * frac;
}

double steady_concentration(double beta, double r_cm, const ChannelParams& ch) {
    if (!(r_cm > 0.0)) throw std::domain_error("steady_concentration: requires r > 0");
    if (beta < 0.0) throw std::domain_error("steady_concentration: negative emission rate");
    return beta / (kFourPi * ch.diffusion * r_cm);
}

double saturation_concentration(const NodeParams& node, const ChannelParams& ch) {
    const double n = node.bacteria;
    const double N = node.kinetics.receptors;
    return node.kinetics.alpha * n * N / (kFourPi * ch.diffusion * ch.distance);
}

ReceiverConcentrationStats receiver_concentration_stats(double stimulus_nM,
                                                        const NodeParams& node,
                                                        const ChannelParams& ch) {
    if (stimulus_nM < 0.0)
        throw std::domain_error("receiver_concentration_stats: negative stimulus");
    ReceiverConcentrationStats st;
    st.p_s_star = steady_binding_probability(stimulus_nM, node.kinetics);
    st.mean = saturation_concentration(node, ch) * st.p_s_star;
    const double q = 1.0 - st.p_s_star;
    st.sigma_t_sq = q * q * node.relative_noise_sq() / node.bacteria;
    st.sigma_r_rel_sq = ch.relative_distance_noise_sq();
    return st;
}

double required_stimulus(double target_nM, const NodeParams& node,
                         const ChannelParams& ch) {
    if (target_nM < 0.0)
        throw std::domain_error("required_stimulus: negative target concentration");
    const double a_sat = saturation_concentration(node, ch);
    if (target_nM >= a_sat)
        throw std::domain_error(
            "required_stimulus: target concentration at or above the saturation "
            "level of this link");
    const auto& k = node.kinetics;
    return k.kappa * target_nM / (k.gamma * (a_sat - target_nM));
}

}  // namespace bactlink
