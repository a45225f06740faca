#pragma once

#include <vector>

#include "bactlink/capacity.hpp"

namespace bactlink {

/// m-ary amplitude keying over the activation range [0, p_max], with
/// equispaced levels and nearest-level decoding. With one_sided_endpoints
/// the outer symbols only err toward their single neighbor; by default every
/// symbol is charged the two-sided tail.
struct MarySpec {
    int m = 4;
    double a_max_nM = 400.0;
    bool one_sided_endpoints = false;
};

/// Per-symbol decoding error probability. A zero-spread level never errs.
std::vector<double> symbol_error_probs(const MarySpec& spec,
                                       const NodeParams& node,
                                       double sigma0_sq);

/// Error probability averaged over a symbol usage distribution.
double total_error(const std::vector<double>& symbol_errors,
                   const std::vector<double>& weights);

struct MaryResult {
    int m = 0;
    double a_max_nM = 0.0;
    double p_max = 0.0;
    std::vector<double> levels;
    std::vector<double> symbol_errors;
    std::vector<double> weights;  // capacity-achieving symbol usage
    double total_error = 0.0;
    double rate_bits = 0.0;  // mutual information of the m-level channel
    double log2_m = 0.0;     // uncoded reference rate
    double gap_bits = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Full m-ary working point: error probabilities plus the achievable rate of
/// the m-level channel (its capacity, weighting symbols accordingly).
MaryResult mary_performance(const MarySpec& spec, const NodeParams& node,
                            double sigma0_sq, int k_out = 2001,
                            double tol_bits = 1e-6, int max_iter = 2000);

/// Sweep the peak concentration budget at fixed m.
std::vector<MaryResult> error_vs_amax(const MarySpec& spec,
                                      const std::vector<double>& a_max_nM,
                                      const NodeParams& node, double sigma0_sq,
                                      int k_out = 2001, double tol_bits = 1e-6,
                                      int max_iter = 2000);

}  // namespace bactlink
