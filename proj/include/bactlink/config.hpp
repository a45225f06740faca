#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bactlink/channel.hpp"
#include "bactlink/montecarlo.hpp"

namespace bactlink {

/// Malformed file, unknown key, unparsable value, or a parameter that fails
/// physical validation. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct CapacityConfig {
    double a_max_nM = 400.0;  // peak-concentration constraint
    std::vector<double> sweep_nM = {80.0, 160.0, 240.0, 320.0, 400.0};
    int k_in = 201;
    int k_out = 2001;
    double tol_bits = 1e-6;
    int max_iter = 2000;
};

struct TimingConfig {
    double reception_nM = 100.0;
    double rise_threshold = 0.9;
    double fall_threshold = 0.1;
    std::vector<double> r_um = {10.0, 50.0, 100.0};
    std::vector<int> n_values = {50, 100, 200};
};

struct ModulationConfig {
    std::vector<int> m_values = {2, 4, 8, 16, 32};
    std::vector<double> sweep_nM = {80.0, 160.0, 240.0, 320.0, 400.0};
    bool one_sided_endpoints = false;
    int k_out = 2001;
    double tol_bits = 1e-6;
    int max_iter = 2000;
};

struct MonteCarloSettings {
    double target_nM = 400.0;  // received concentration to operate at
    SimConfig sim;
};

/// Full experiment parameter set: physical parameters plus per-command sweep
/// grids and tolerances, loadable from a sectioned key = value file.
struct ExperimentConfig {
    NodeParams node;
    ChannelParams channel;
    /// With alpha_auto the emission gain is calibrated so the channel
    /// saturates at alpha_headroom times the peak-concentration constraint;
    /// otherwise [kinetics] alpha is used as given.
    bool alpha_auto = true;
    double alpha_headroom = 1.05;
    CapacityConfig capacity;
    TimingConfig timing;
    ModulationConfig modulation;
    MonteCarloSettings montecarlo;
    std::vector<std::string> warnings;

    /// Resolve alpha, validate every physical parameter (ConfigError on
    /// violation), and collect regime warnings.
    void finalize();
};

/// Defaults (already finalized): the reference working point N=50, n=100,
/// sigma0^2 = 0.1, D = 1e-5 cm^2/s, r0 = 50 um, A_max = 400 nM.
ExperimentConfig default_config();

/// Parse from a stream; `origin` names the source in error messages.
/// Unknown sections or keys are hard errors.
ExperimentConfig parse_config(std::istream& in, const std::string& origin);

ExperimentConfig load_config(const std::string& path);

}  // namespace bactlink
