#pragma once

#include <vector>

#include "bactlink/transmitter.hpp"

namespace bactlink {

/// Discretized link channel: K_in equispaced activation levels on
/// [0, p_max] against K_out output bins spanning the Gaussian spread of the
/// normalized receiver output. Rows are Gaussian bin masses with the tail
/// mass folded into the first/last bin; a zero-spread level degenerates to a
/// single-bin delta row.
struct DiscreteChannel {
    std::vector<double> input_levels;             // size K_in
    std::vector<double> output_edges;             // size K_out + 1
    std::vector<double> transition;               // row-major K_in x K_out
    std::vector<int> support_begin, support_end;  // nonzero span per row

    int num_inputs() const { return static_cast<int>(input_levels.size()); }
    int num_outputs() const {
        return static_cast<int>(output_edges.size()) - 1;
    }
    double w(int i, int j) const {
        return transition[static_cast<std::size_t>(i) * num_outputs() + j];
    }
};

/// Per-level output spread of the normalized receiver output Y/(nN):
/// p (1 - p) sigma0 / sqrt(n).
double output_spread(double p, const NodeParams& node, double sigma0_sq);

/// Build the discretized channel for peak level p_max in (0, 1).
DiscreteChannel build_discrete_channel(double p_max, int k_in, int k_out,
                                       const NodeParams& node,
                                       double sigma0_sq);

struct CapacityResult {
    double capacity_bits = 0.0;  // final lower bound (tight at convergence)
    double gap_bits = 0.0;       // upper - lower bound at the last iteration
    int iterations = 0;
    bool converged = false;
    std::vector<double> input_levels;
    std::vector<double> input_distribution;
    std::vector<double> lower_bound_history;  // bits, one entry per iteration
};

/// Blahut-Arimoto capacity of a discrete channel. Iterates until the
/// duality gap drops below tol_bits or max_iter is reached; capacity_bits is
/// always the lower bound, so an unconverged result is still a valid
/// achievable rate with gap_bits of slack.
CapacityResult blahut_arimoto(const DiscreteChannel& ch,
                              double tol_bits = 1e-6, int max_iter = 2000);

/// Mutual information in bits for a fixed input distribution.
double mutual_information_bits(const DiscreteChannel& ch,
                               const std::vector<double>& input_dist);

struct CapacityPoint {
    double a_max_nM = 0.0;
    double p_max = 0.0;
    double capacity_bits = 0.0;
    double gap_bits = 0.0;
    int iterations = 0;
    bool converged = true;
};

/// Capacity sweep over peak concentration budgets. a_max = 0 carries no
/// information and short-circuits to zero bits.
std::vector<CapacityPoint> capacity_vs_amax(const std::vector<double>& a_max_nM,
                                            const NodeParams& node,
                                            double sigma0_sq, int k_in = 201,
                                            int k_out = 2001,
                                            double tol_bits = 1e-6,
                                            int max_iter = 2000);

}  // namespace bactlink
