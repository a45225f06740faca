#include "bactlink/kinetics.hpp"

#include <cmath>
#include <stdexcept>

namespace bactlink {

void KineticParams::validate() const {
    if (!(gamma > 0.0) || !(kappa > 0.0))
        throw std::domain_error("kinetics: gamma and kappa must be positive");
    if (!(b1 > 0.0) || !(b2 > 0.0) || !(a1 >= 0.0) || !(a0 >= 0.0) || !(b0 >= 0.0))
        throw std::domain_error("kinetics: cascade constants out of range");
    if (receptors < 1)
        throw std::domain_error("kinetics: receptors per bacterium must be >= 1");
    if (!(alpha > 0.0))
        throw std::domain_error("kinetics: alpha must be positive");
}

double steady_binding_probability(double concentration, const KineticParams& k) {
    if (concentration < 0.0)
        throw std::domain_error("steady_binding_probability: negative concentration");
    const double ag = concentration * k.gamma;
    return ag / (ag + k.kappa);
}

double binding_time_constant(double concentration, const KineticParams& k) {
    if (concentration < 0.0)
        throw std::domain_error("binding_time_constant: negative concentration");
    return 1.0 / (concentration * k.gamma + k.kappa);
}

double binding_transient(double concentration, const KineticParams& k,
                         double p_init, double t_min) {
    if (t_min < 0.0) throw std::domain_error("binding_transient: negative time");
    if (p_init < 0.0 || p_init > 1.0)
        throw std::domain_error("binding_transient: p_init outside [0, 1]");
    const double p_star = steady_binding_probability(concentration, k);
    const double rate = concentration * k.gamma + k.kappa;
    // expm1 form is exact at t = 0 and avoids cancellation for small t
    return p_init + (p_init - p_star) * std::expm1(-rate * t_min);
}

ExpressionState expression_transient(double p, const KineticParams& k, double t_min) {
    if (t_min < 0.0) throw std::domain_error("expression_transient: negative time");
    if (p < 0.0 || p > 1.0)
        throw std::domain_error("expression_transient: p outside [0, 1]");
    const double u = k.b0 * p + k.a0;

    ExpressionState st;
    st.s1 = (u / k.b1) * -std::expm1(-k.b1 * t_min);

    // S2(t) = a1 u / b1 * [ (1 - e^{-b2 t})/b2 - (e^{-b1 t} - e^{-b2 t})/(b2 - b1) ]
    // The difference quotient is e^{-b1 t} * (1 - e^{-(b2-b1) t})/(b2 - b1),
    // which tends to t e^{-b1 t} as b2 -> b1 (confluent case).
    const double d = k.b2 - k.b1;
    double quotient;
    if (d == 0.0) {
        quotient = t_min * std::exp(-k.b1 * t_min);
    } else {
        quotient = std::exp(-k.b1 * t_min) * (-std::expm1(-d * t_min)) / d;
    }
    st.s2 = (k.a1 * u / k.b1) * (-std::expm1(-k.b2 * t_min) / k.b2 - quotient);
    return st;
}

double gfp_steady(double p, const KineticParams& k) {
    if (p < 0.0 || p > 1.0)
        throw std::domain_error("gfp_steady: p outside [0, 1]");
    return k.a1 * (k.b0 * p + k.a0) / (k.b1 * k.b2);
}

}  // namespace bactlink
