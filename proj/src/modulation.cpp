#include "bactlink/modulation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bactlink/core.hpp"

namespace bactlink {

namespace {

void check_spec(const MarySpec& spec) {
    if (spec.m < 2) throw std::invalid_argument("m must be >= 2");
    if (!(spec.a_max_nM > 0.0))
        throw std::domain_error("a_max must be > 0");
}

}  // namespace

std::vector<double> symbol_error_probs(const MarySpec& spec,
                                       const NodeParams& node,
                                       double sigma0_sq) {
    node.validate();
    check_spec(spec);
    if (sigma0_sq < 0.0) throw std::domain_error("sigma0_sq must be >= 0");

    const double p_max =
        steady_binding_probability(spec.a_max_nM, node.kinetics);
    const double half = p_max / (2.0 * (spec.m - 1));  // decision half-width
    std::vector<double> pe(spec.m, 0.0);
    for (int i = 0; i < spec.m; ++i) {
        const double p = p_max * i / (spec.m - 1);
        const double s = output_spread(p, node, sigma0_sq);
        if (s == 0.0) continue;
        double e = erfc(half / (s * std::numbers::sqrt2));
        if (spec.one_sided_endpoints && (i == 0 || i == spec.m - 1)) e *= 0.5;
        pe[i] = e;
    }
    return pe;
}

double total_error(const std::vector<double>& symbol_errors,
                   const std::vector<double>& weights) {
    if (symbol_errors.size() != weights.size())
        throw std::invalid_argument("error/weight vectors differ in size");
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0))
            throw std::invalid_argument("weights must be >= 0");
        acc += weights[i] * symbol_errors[i];
    }
    return acc;
}

MaryResult mary_performance(const MarySpec& spec, const NodeParams& node,
                            double sigma0_sq, int k_out, double tol_bits,
                            int max_iter) {
    check_spec(spec);
    MaryResult out;
    out.m = spec.m;
    out.a_max_nM = spec.a_max_nM;
    out.p_max = steady_binding_probability(spec.a_max_nM, node.kinetics);
    out.symbol_errors = symbol_error_probs(spec, node, sigma0_sq);
    out.log2_m = std::log2(static_cast<double>(spec.m));

    const DiscreteChannel ch =
        build_discrete_channel(out.p_max, spec.m, k_out, node, sigma0_sq);
    const CapacityResult r = blahut_arimoto(ch, tol_bits, max_iter);
    out.levels = ch.input_levels;
    out.weights = r.input_distribution;
    out.total_error = total_error(out.symbol_errors, out.weights);
    // The achieved rate of an m-symbol alphabet can exceed log2(m) only by
    // accumulated rounding; cap it so the dominance property holds exactly.
    out.rate_bits = std::min(r.capacity_bits, out.log2_m);
    out.gap_bits = r.gap_bits;
    out.iterations = r.iterations;
    out.converged = r.converged;
    return out;
}

std::vector<MaryResult> error_vs_amax(const MarySpec& spec,
                                      const std::vector<double>& a_max_nM,
                                      const NodeParams& node, double sigma0_sq,
                                      int k_out, double tol_bits,
                                      int max_iter) {
    std::vector<MaryResult> out;
    out.reserve(a_max_nM.size());
    MarySpec point = spec;
    for (double a : a_max_nM) {
        point.a_max_nM = a;
        out.push_back(
            mary_performance(point, node, sigma0_sq, k_out, tol_bits, max_iter));
    }
    return out;
}

}  // namespace bactlink
