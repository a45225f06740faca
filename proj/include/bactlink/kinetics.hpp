#pragma once

namespace bactlink {

/// Per-bacterium reaction constants. Time unit: minutes; concentrations: nM.
///
/// gamma and kappa are the ligand binding/unbinding rates of the receptor
/// (p' = -kappa p + A gamma (1 - p)); a0/a1/b0/b1/b2 are the two-stage
/// expression cascade constants; alpha is the molecule output gain per
/// activated receptor used by the diffusion link (configurable scalar;
/// defaults to the cascade slope identity alpha*N = a1*b0/(b1*b2)).
struct KineticParams {
    double gamma = 0.0004;   // per nM per minute
    double kappa = 0.1;      // per minute
    double a0 = 1.0;
    double a1 = 1.0;
    double b0 = 1.0;
    double b1 = 1.0 / 60.0;  // per minute (~1 h stage)
    double b2 = 0.1;         // per minute (~10 min stage)
    int receptors = 50;      // N, receptors per bacterium
    double alpha = cascade_gain_default();

    static constexpr double cascade_gain_default() {
        // a1*b0 / (N*b1*b2) with the defaults above
        return 1.0 / (50.0 * (1.0 / 60.0) * 0.1);
    }

    /// a1*b0/(b1*b2): steady-state output per unit binding probability.
    double cascade_gain() const { return a1 * b0 / (b1 * b2); }

    /// Throws std::domain_error on non-positive rates or receptors < 1.
    void validate() const;
};

/// Steady-state binding probability p* = A*gamma / (A*gamma + kappa).
/// A is the ligand concentration in nM; A < 0 is a domain error.
double steady_binding_probability(double concentration, const KineticParams& k);

/// Relaxation time constant of the binding ODE at concentration A:
/// 1 / (A*gamma + kappa), in minutes.
double binding_time_constant(double concentration, const KineticParams& k);

/// Transient solution of p' = -kappa p + A gamma (1 - p) from p(0) = p_init:
/// p(t) = p* + (p_init - p*) exp(-(A gamma + kappa) t), t in minutes.
double binding_transient(double concentration, const KineticParams& k,
                         double p_init, double t_min);

struct ExpressionState {
    double s1 = 0.0;
    double s2 = 0.0;
};

/// Closed-form transient of the expression cascade driven by a constant
/// binding probability p (input u = b0*p + a0, zero initial conditions):
///   S1' = u - b1 S1,  S2' = a1 S1 - b2 S2.
/// Handles b1 == b2 via the confluent form; near-degenerate rates are
/// evaluated through expm1 so there is no cancellation blow-up.
ExpressionState expression_transient(double p, const KineticParams& k, double t_min);

/// Steady-state output S2* = a1 (b0 p + a0) / (b1 b2).
double gfp_steady(double p, const KineticParams& k);

}  // namespace bactlink
