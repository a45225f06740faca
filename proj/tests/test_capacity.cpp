#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "bactlink/capacity.hpp"
#include "bactlink/config.hpp"

using bactlink::DiscreteChannel;

namespace {

// Minimal hand-built channel: K symbols, K bins, explicit transition rows.
DiscreteChannel make_manual(int k, const std::vector<double>& rows) {
    DiscreteChannel ch;
    ch.input_levels.resize(k);
    ch.output_edges.resize(k + 1);
    for (int i = 0; i < k; ++i) ch.input_levels[i] = static_cast<double>(i);
    for (int j = 0; j <= k; ++j) ch.output_edges[j] = static_cast<double>(j);
    ch.transition = rows;
    ch.support_begin.assign(k, 0);
    ch.support_end.assign(k, k);
    return ch;
}

}  // namespace

TEST_CASE("output spread vanishes at the rails and peaks at one half") {
    const auto cfg = bactlink::default_config();
    const double s0 = 0.1;
    CHECK(bactlink::output_spread(0.0, cfg.node, s0) == 0.0);
    CHECK(bactlink::output_spread(1.0, cfg.node, s0) == 0.0);
    const double n = cfg.node.bacteria;
    for (double p : {0.1, 0.25, 0.5, 0.9}) {
        CHECK(bactlink::output_spread(p, cfg.node, s0) ==
              doctest::Approx(p * (1.0 - p) * std::sqrt(s0 / n))
                  .epsilon(1e-13));
    }
    CHECK(bactlink::output_spread(0.5, cfg.node, s0) >
          bactlink::output_spread(0.49, cfg.node, s0));
    CHECK_THROWS_AS(bactlink::output_spread(-0.1, cfg.node, s0),
                    std::domain_error);
    CHECK_THROWS_AS(bactlink::output_spread(0.5, cfg.node, -1.0),
                    std::domain_error);
}

TEST_CASE("discretized channel rows are proper distributions on exact supports") {
    const auto cfg = bactlink::default_config();
    const int k_in = 21;
    const int k_out = 201;
    const double p_max = 0.6;
    const DiscreteChannel ch =
        bactlink::build_discrete_channel(p_max, k_in, k_out, cfg.node, 0.1);
    REQUIRE(ch.num_inputs() == k_in);
    REQUIRE(ch.num_outputs() == k_out);

    double s_max = 0.0;
    for (int i = 0; i < k_in; ++i) {
        CHECK(ch.input_levels[i] ==
              doctest::Approx(p_max * i / (k_in - 1)).epsilon(1e-14));
        s_max = std::max(
            s_max, bactlink::output_spread(ch.input_levels[i], cfg.node, 0.1));
    }
    CHECK(ch.input_levels.front() == 0.0);
    CHECK(ch.input_levels.back() == doctest::Approx(p_max).epsilon(1e-15));
    CHECK(ch.output_edges.front() ==
          doctest::Approx(-4.0 * s_max).epsilon(1e-13));
    CHECK(ch.output_edges.back() ==
          doctest::Approx(1.0 + 4.0 * s_max).epsilon(1e-13));

    for (int i = 0; i < k_in; ++i) {
        double sum = 0.0;
        for (int j = 0; j < k_out; ++j) {
            const double w = ch.w(i, j);
            CHECK(w >= 0.0);
            if (j < ch.support_begin[i] || j >= ch.support_end[i])
                CHECK(w == 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ch.support_begin[i] < ch.support_end[i]);
        CHECK(ch.w(i, ch.support_begin[i]) > 0.0);
        CHECK(ch.w(i, ch.support_end[i] - 1) > 0.0);
    }
}

TEST_CASE("zero-spread levels collapse to single-bin delta rows") {
    const auto cfg = bactlink::default_config();
    // p_max = 1 puts the top level at p = 1, which has zero spread, and the
    // bottom level at p = 0 likewise.
    const DiscreteChannel ch =
        bactlink::build_discrete_channel(1.0, 5, 101, cfg.node, 0.1);
    for (int i : {0, 4}) {
        CHECK(ch.support_end[i] - ch.support_begin[i] == 1);
        CHECK(ch.w(i, ch.support_begin[i]) == 1.0);
    }
    // The delta bins sit at the level values themselves.
    const int j0 = ch.support_begin[0];
    CHECK(ch.output_edges[j0] <= 0.0);
    CHECK(ch.output_edges[j0 + 1] > 0.0);
    const int j4 = ch.support_begin[4];
    CHECK(ch.output_edges[j4] <= 1.0);
    CHECK(ch.output_edges[j4 + 1] > 1.0);
}

TEST_CASE("discretization rejects out-of-range shape parameters") {
    const auto cfg = bactlink::default_config();
    CHECK_THROWS_AS(bactlink::build_discrete_channel(0.0, 5, 11, cfg.node, 0.1),
                    std::domain_error);
    CHECK_THROWS_AS(bactlink::build_discrete_channel(1.2, 5, 11, cfg.node, 0.1),
                    std::domain_error);
    CHECK_THROWS_AS(bactlink::build_discrete_channel(0.5, 1, 11, cfg.node, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(bactlink::build_discrete_channel(0.5, 5, 1, cfg.node, 0.1),
                    std::invalid_argument);
}

TEST_CASE("binary symmetric channel capacity matches the entropy formula") {
    const double f = 0.11;
    const DiscreteChannel ch =
        make_manual(2, {1.0 - f, f, f, 1.0 - f});
    const auto r = bactlink::blahut_arimoto(ch, 1e-6, 2000);
    const double want =
        1.0 + f * std::log2(f) + (1.0 - f) * std::log2(1.0 - f);
    CHECK(r.capacity_bits == doctest::Approx(want).epsilon(1e-12));
    CHECK(r.converged);
    // Symmetry makes the uniform start optimal: one iteration, zero gap.
    CHECK(r.iterations == 1);
    CHECK(r.gap_bits == 0.0);
    CHECK(r.input_distribution[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("noiseless channels hit log2(K) bit-for-bit") {
    for (int k : {2, 4, 8, 16, 32}) {
        std::vector<double> rows(static_cast<std::size_t>(k) * k, 0.0);
        for (int i = 0; i < k; ++i)
            rows[static_cast<std::size_t>(i) * k + i] = 1.0;
        const auto r = bactlink::blahut_arimoto(make_manual(k, rows));
        CHECK(r.capacity_bits == std::log2(static_cast<double>(k)));
        CHECK(r.gap_bits == 0.0);
        CHECK(r.converged);
        for (double w : r.input_distribution)
            CHECK(w == doctest::Approx(1.0 / k).epsilon(1e-12));
    }
}

TEST_CASE("lower bound history climbs monotonically") {
    const auto cfg = bactlink::default_config();
    const DiscreteChannel ch =
        bactlink::build_discrete_channel(0.6, 41, 401, cfg.node, 0.1);
    const auto r = bactlink::blahut_arimoto(ch, 1e-9, 300);
    REQUIRE(r.lower_bound_history.size() ==
            static_cast<std::size_t>(r.iterations));
    for (std::size_t t = 1; t < r.lower_bound_history.size(); ++t)
        CHECK(r.lower_bound_history[t] >=
              r.lower_bound_history[t - 1] - 1e-12);
    CHECK(r.capacity_bits == r.lower_bound_history.back());
    CHECK(r.gap_bits >= 0.0);
}

TEST_CASE("optimizer input distribution is reproduced by the rate functional") {
    const double f = 0.11;
    const DiscreteChannel ch = make_manual(2, {1.0 - f, f, f, 1.0 - f});
    const auto r = bactlink::blahut_arimoto(ch);
    const double mi = bactlink::mutual_information_bits(ch, {0.5, 0.5});
    CHECK(mi == doctest::Approx(r.capacity_bits).epsilon(1e-14));
    // A skewed distribution achieves strictly less.
    CHECK(bactlink::mutual_information_bits(ch, {0.9, 0.1}) < mi);
    CHECK_THROWS_AS(bactlink::mutual_information_bits(ch, {1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bactlink::mutual_information_bits(ch, {1.5, -0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(bactlink::mutual_information_bits(ch, {0.3, 0.3}),
                    std::invalid_argument);
}

TEST_CASE("solver rejects malformed inputs") {
    const DiscreteChannel ch = make_manual(2, {1.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_AS(bactlink::blahut_arimoto(ch, 0.0, 100),
                    std::invalid_argument);
    CHECK_THROWS_AS(bactlink::blahut_arimoto(ch, 1e-6, 0),
                    std::invalid_argument);
    DiscreteChannel bad = ch;
    bad.transition.pop_back();
    CHECK_THROWS_AS(bactlink::blahut_arimoto(bad), std::invalid_argument);
}

TEST_CASE("capacity grows with the admissible peak concentration") {
    const auto cfg = bactlink::default_config();
    const std::vector<double> sweep = {0.0, 80.0, 160.0, 240.0, 320.0, 400.0};
    const auto pts =
        bactlink::capacity_vs_amax(sweep, cfg.node, 0.1, 41, 401, 1e-6, 2000);
    REQUIRE(pts.size() == sweep.size());
    CHECK(pts[0].capacity_bits == 0.0);
    CHECK(pts[0].p_max == 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i].a_max_nM == sweep[i]);
        CHECK(pts[i].p_max ==
              doctest::Approx(sweep[i] * 0.0004 / (sweep[i] * 0.0004 + 0.1))
                  .epsilon(1e-13));
        CHECK(pts[i].capacity_bits > pts[i - 1].capacity_bits);
    }
    CHECK_THROWS_AS(
        bactlink::capacity_vs_amax({-1.0}, cfg.node, 0.1, 41, 401, 1e-6, 100),
        std::domain_error);
}

TEST_CASE("capacity is stable under output-grid refinement") {
    const auto cfg = bactlink::default_config();
    const DiscreteChannel coarse =
        bactlink::build_discrete_channel(0.6152, 41, 401, cfg.node, 0.1);
    const DiscreteChannel fine =
        bactlink::build_discrete_channel(0.6152, 41, 801, cfg.node, 0.1);
    const double c0 = bactlink::blahut_arimoto(coarse).capacity_bits;
    const double c1 = bactlink::blahut_arimoto(fine).capacity_bits;
    CHECK(std::abs(c1 - c0) < 0.01);
}
