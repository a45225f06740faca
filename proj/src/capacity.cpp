#include "bactlink/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "bactlink/core.hpp"

namespace bactlink {

double output_spread(double p, const NodeParams& node, double sigma0_sq) {
    node.validate();
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("p must lie in [0, 1]");
    if (sigma0_sq < 0.0) throw std::domain_error("sigma0_sq must be >= 0");
    return p * (1.0 - p) *
           std::sqrt(sigma0_sq / static_cast<double>(node.bacteria));
}

DiscreteChannel build_discrete_channel(double p_max, int k_in, int k_out,
                                       const NodeParams& node,
                                       double sigma0_sq) {
    node.validate();
    if (!(p_max > 0.0 && p_max <= 1.0))
        throw std::domain_error("p_max must lie in (0, 1]");
    if (k_in < 2) throw std::invalid_argument("k_in must be >= 2");
    if (k_out < 2) throw std::invalid_argument("k_out must be >= 2");
    if (sigma0_sq < 0.0) throw std::domain_error("sigma0_sq must be >= 0");

    DiscreteChannel ch;
    ch.input_levels.resize(k_in);
    std::vector<double> spread(k_in);
    double s_max = 0.0;
    for (int i = 0; i < k_in; ++i) {
        ch.input_levels[i] = p_max * i / (k_in - 1);
        spread[i] = output_spread(ch.input_levels[i], node, sigma0_sq);
        s_max = std::max(s_max, spread[i]);
    }

    const double lo = -4.0 * s_max;
    const double hi = 1.0 + 4.0 * s_max;
    ch.output_edges.resize(k_out + 1);
    for (int j = 0; j <= k_out; ++j)
        ch.output_edges[j] = lo + (hi - lo) * j / k_out;

    ch.transition.assign(static_cast<std::size_t>(k_in) * k_out, 0.0);
    ch.support_begin.assign(k_in, 0);
    ch.support_end.assign(k_in, 0);
    std::vector<double> cdf(k_out + 1);
    for (int i = 0; i < k_in; ++i) {
        // Interior-edge CDF with the tails folded into the edge bins.
        cdf[0] = 0.0;
        cdf[k_out] = 1.0;
        for (int j = 1; j < k_out; ++j)
            cdf[j] =
                gaussian_cdf(ch.output_edges[j], ch.input_levels[i], spread[i]);
        double* row = &ch.transition[static_cast<std::size_t>(i) * k_out];
        double sum = 0.0;
        for (int j = 0; j < k_out; ++j) {
            row[j] = std::max(0.0, cdf[j + 1] - cdf[j]);
            sum += row[j];
        }
        for (int j = 0; j < k_out; ++j) row[j] /= sum;
        int b = 0;
        while (b < k_out && row[b] == 0.0) ++b;
        int e = k_out;
        while (e > b && row[e - 1] == 0.0) --e;
        ch.support_begin[i] = b;
        ch.support_end[i] = e;
    }
    return ch;
}

namespace {

// KL(W_i || q) in nats for every row, given log q over the output bins.
// row_gain holds sum_j w log w, precomputed once per channel.
void row_divergences(const DiscreteChannel& ch,
                     const std::vector<double>& row_gain,
                     const std::vector<double>& logq, std::vector<double>& d) {
    const int k = ch.num_inputs();
    const int m = ch.num_outputs();
    for (int i = 0; i < k; ++i) {
        const double* row = &ch.transition[static_cast<std::size_t>(i) * m];
        double cross = 0.0;
        for (int j = ch.support_begin[i]; j < ch.support_end[i]; ++j)
            cross += row[j] * logq[j];
        d[i] = row_gain[i] - cross;
    }
}

// Neumaier-compensated dot product. The reported bound must not drift by
// accumulation error: a noiseless channel has to come out at log2(K)
// bit-for-bit, and the duality gap is compared against tolerances near the
// rounding floor.
double compensated_dot(const std::vector<double>& a,
                       const std::vector<double>& b) {
    double total = 0.0;
    double carry = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double v = a[i] * b[i];
        const double t = total + v;
        carry += std::abs(total) >= std::abs(v) ? (total - t) + v
                                                : (v - t) + total;
        total = t;
    }
    return total + carry;
}

}  // namespace

CapacityResult blahut_arimoto(const DiscreteChannel& ch, double tol_bits,
                              int max_iter) {
    const int k = ch.num_inputs();
    const int m = ch.num_outputs();
    if (k < 1 || m < 1) throw std::invalid_argument("channel is empty");
    if (ch.transition.size() != static_cast<std::size_t>(k) * m)
        throw std::invalid_argument("transition matrix has wrong shape");
    if (!(tol_bits > 0.0)) throw std::invalid_argument("tol_bits must be > 0");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    std::vector<double> row_gain(k, 0.0);
    for (int i = 0; i < k; ++i) {
        const double* row = &ch.transition[static_cast<std::size_t>(i) * m];
        double acc = 0.0;
        for (int j = ch.support_begin[i]; j < ch.support_end[i]; ++j)
            if (row[j] > 0.0) acc += row[j] * std::log(row[j]);
        row_gain[i] = acc;
    }

    const double ln2 = std::log(2.0);
    std::vector<double> logp(k, -std::log(static_cast<double>(k)));
    std::vector<double> p(k, 1.0 / k);
    std::vector<double> q(m), logq(m), d(k);
    CapacityResult res;
    res.input_levels = ch.input_levels;

    for (int it = 1; it <= max_iter; ++it) {
        std::fill(q.begin(), q.end(), 0.0);
        for (int i = 0; i < k; ++i) {
            if (p[i] == 0.0) continue;
            const double* row = &ch.transition[static_cast<std::size_t>(i) * m];
            for (int j = ch.support_begin[i]; j < ch.support_end[i]; ++j)
                q[j] += p[i] * row[j];
        }
        // Bins with q = 0 receive no mass from any live row; keep them inert.
        for (int j = 0; j < m; ++j) logq[j] = q[j] > 0.0 ? std::log(q[j]) : 0.0;
        row_divergences(ch, row_gain, logq, d);

        const double lower = compensated_dot(p, d);
        double upper = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < k; ++i) upper = std::max(upper, d[i]);
        res.iterations = it;
        res.capacity_bits = lower / ln2;
        res.gap_bits = (upper - lower) / ln2;
        res.lower_bound_history.push_back(res.capacity_bits);
        if (res.gap_bits <= tol_bits) {
            res.converged = true;
            break;
        }
        if (it == max_iter) break;

        // p_i <- p_i exp(d_i) / Z, carried in log space.
        double peak = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < k; ++i) {
            logp[i] += d[i];
            peak = std::max(peak, logp[i]);
        }
        double z = 0.0;
        for (int i = 0; i < k; ++i) z += std::exp(logp[i] - peak);
        const double log_z = peak + std::log(z);
        for (int i = 0; i < k; ++i) {
            logp[i] -= log_z;
            p[i] = std::exp(logp[i]);
        }
    }
    res.input_distribution = p;
    return res;
}

double mutual_information_bits(const DiscreteChannel& ch,
                               const std::vector<double>& input_dist) {
    const int k = ch.num_inputs();
    const int m = ch.num_outputs();
    if (static_cast<int>(input_dist.size()) != k)
        throw std::invalid_argument("input distribution has wrong size");
    double sum = 0.0;
    for (double v : input_dist) {
        if (!(v >= 0.0))
            throw std::invalid_argument("input distribution must be >= 0");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("input distribution must sum to 1");

    std::vector<double> row_gain(k, 0.0);
    std::vector<double> q(m, 0.0), logq(m, 0.0), d(k, 0.0);
    for (int i = 0; i < k; ++i) {
        const double* row = &ch.transition[static_cast<std::size_t>(i) * m];
        double acc = 0.0;
        for (int j = ch.support_begin[i]; j < ch.support_end[i]; ++j) {
            if (row[j] > 0.0) acc += row[j] * std::log(row[j]);
            if (input_dist[i] > 0.0) q[j] += input_dist[i] * row[j];
        }
        row_gain[i] = acc;
    }
    for (int j = 0; j < m; ++j) logq[j] = q[j] > 0.0 ? std::log(q[j]) : 0.0;
    row_divergences(ch, row_gain, logq, d);
    return compensated_dot(input_dist, d) / std::log(2.0);
}

std::vector<CapacityPoint> capacity_vs_amax(const std::vector<double>& a_max_nM,
                                            const NodeParams& node,
                                            double sigma0_sq, int k_in,
                                            int k_out, double tol_bits,
                                            int max_iter) {
    node.validate();
    std::vector<CapacityPoint> out;
    out.reserve(a_max_nM.size());
    for (double a : a_max_nM) {
        if (!(a >= 0.0)) throw std::domain_error("a_max must be >= 0");
        CapacityPoint pt;
        pt.a_max_nM = a;
        if (a == 0.0) {  // a single admissible level carries nothing
            out.push_back(pt);
            continue;
        }
        pt.p_max = steady_binding_probability(a, node.kinetics);
        const DiscreteChannel dch =
            build_discrete_channel(pt.p_max, k_in, k_out, node, sigma0_sq);
        const CapacityResult r = blahut_arimoto(dch, tol_bits, max_iter);
        pt.capacity_bits = r.capacity_bits;
        pt.gap_bits = r.gap_bits;
        pt.iterations = r.iterations;
        pt.converged = r.converged;
        out.push_back(pt);
    }
    return out;
}

}  // namespace bactlink
