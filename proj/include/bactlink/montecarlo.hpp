#pragma once

#include <cstdint>
#include <vector>

#include "bactlink/channel.hpp"
#include "bactlink/transmitter.hpp"

namespace bactlink {

/// Which physical noise sources the simulation draws. Switching one off
/// does not perturb the draws of the others (per-stage random streams).
struct StageToggles {
    bool transmitter_noise = true;
    bool distance_noise = true;
    bool receiver_noise = true;
};

/// exact: propagate each trial through the nonlinear chain -- per-bacterium
///   rate perturbations, saturating binding, concentration from the actually
///   emitted amount at the actually drawn distance.
/// linearized: first-order propagation around the operating point; this is
///   the regime the closed-form moments describe.
enum class NoiseModel { exact, linearized };

struct SimConfig {
    std::int64_t trials = 100000;
    std::uint64_t seed = 42;
    NoiseModel model = NoiseModel::linearized;
    StageToggles stages;
    /// Clamp out-of-range activation levels (counted in clamp_events).
    /// Turning this off keeps the raw linear excursions and makes the
    /// sampled moments match the closed forms exactly; it only takes effect
    /// when receptors are not sampled.
    bool truncate = true;
    /// Draw per-bacterium receptor counts binomially instead of using the
    /// deterministic expectation N p.
    bool sample_receptors = true;
    int threads = 1;
};

struct SimResult {
    std::vector<double> x;    // transmitter output (activated receptors)
    std::vector<double> a_r;  // concentration seen by the receiver, nM
    std::vector<double> y;    // receiver output (activated receptors)
    std::int64_t clamp_events = 0;     // rate/level clamps across all draws
    std::int64_t distance_redraws = 0; // rejected non-positive distances
    double stimulus_nM = 0.0;
    double p_s_star = 0.0;  // transmitter operating point
    double a0_nM = 0.0;     // mean received concentration
    double p0 = 0.0;        // receiver operating point
};

/// Simulate the full transmitter -> diffusion -> receiver chain at a fixed
/// stimulus, one entry per trial. Deterministic for a given seed regardless
/// of thread count.
SimResult simulate_link(double stimulus_nM, const NodeParams& node,
                        const ChannelParams& ch, const SimConfig& cfg);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;  // unbiased sample variance
};

Moments empirical_moments(const std::vector<double>& samples);

/// Fraction of samples that nearest-level decoding assigns to the wrong
/// symbol. Samples are normalized outputs (activation levels); levels must
/// be sorted ascending.
double empirical_symbol_error(const std::vector<double>& normalized_outputs,
                              const std::vector<double>& levels,
                              int true_index);

}  // namespace bactlink
