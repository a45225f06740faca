#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bactlink/config.hpp"
#include "bactlink/receiver.hpp"

using bactlink::ChannelParams;
using bactlink::NodeParams;
using bactlink::ReceiverMoments;

TEST_CASE("combined relative noise is the sum of the node and path terms") {
    const auto cfg = bactlink::default_config();
    CHECK(bactlink::sigma0_sq(cfg.node, cfg.channel) ==
          doctest::Approx(0.1).epsilon(1e-12));
    ChannelParams wobbly = cfg.channel;
    wobbly.sigma_r_sq = 0.05 * wobbly.distance * wobbly.distance;
    CHECK(bactlink::sigma0_sq(cfg.node, wobbly) ==
          doctest::Approx(0.15).epsilon(1e-12));
}

TEST_CASE("operating concentration inverts the binding curve") {
    const auto cfg = bactlink::default_config();
    const auto& k = cfg.node.kinetics;
    for (double p0 : {0.0, 0.1, 0.5, 0.615, 0.99}) {
        const double a = bactlink::p0_to_concentration(p0, k);
        CHECK(bactlink::steady_binding_probability(a, k) ==
              doctest::Approx(p0).epsilon(1e-13));
    }
    CHECK(bactlink::p0_to_concentration(0.0, k) == 0.0);
    CHECK_THROWS_AS(bactlink::p0_to_concentration(1.0, k), std::domain_error);
    CHECK_THROWS_AS(bactlink::p0_to_concentration(-0.1, k), std::domain_error);
}

TEST_CASE("receiver moments decompose by noise source") {
    const auto cfg = bactlink::default_config();
    ChannelParams ch = cfg.channel;
    ch.sigma_r_sq = 0.03 * ch.distance * ch.distance;
    const double n = cfg.node.bacteria;
    const double N = cfg.node.kinetics.receptors;
    const double rho = cfg.node.relative_noise_sq();
    for (double p0 : {0.1, 0.5, 0.615}) {
        const ReceiverMoments m =
            bactlink::receiver_moments(p0, cfg.node, ch, false);
        const double pq = p0 * (1.0 - p0);
        CHECK(m.mean == doctest::Approx(n * N * p0).epsilon(1e-13));
        CHECK(m.sigma0_sq == doctest::Approx(rho + 0.03).epsilon(1e-12));
        CHECK(m.variance ==
              doctest::Approx(n * N * N * pq * pq * m.sigma0_sq)
                  .epsilon(1e-12));
        CHECK(m.variance_reception + m.variance_distance +
                  m.variance_transmitter ==
              doctest::Approx(m.variance).epsilon(1e-12));
        CHECK(m.variance_transmitter == 0.0);
        CHECK(m.variance_reception ==
              doctest::Approx(n * N * N * pq * pq * rho).epsilon(1e-12));
    }
}

TEST_CASE("exact variance keeps the per-receptor floor and shared-noise scaling") {
    const auto cfg = bactlink::default_config();
    ChannelParams ch = cfg.channel;
    ch.sigma_r_sq = 0.02 * ch.distance * ch.distance;
    const double n = cfg.node.bacteria;
    const double N = cfg.node.kinetics.receptors;
    const double rho = cfg.node.relative_noise_sq();
    for (double p0 : {0.05, 0.3, 0.6}) {
        const ReceiverMoments m =
            bactlink::receiver_moments(p0, cfg.node, ch, false);
        const double pq = p0 * (1.0 - p0);
        const double v_indep = pq * pq * rho;
        const double v_shared = pq * pq * 0.02;
        const double want = n * N * (pq - v_indep - v_shared) +
                            n * N * N * v_indep + n * n * N * N * v_shared;
        CHECK(m.exact_variance == doctest::Approx(want).epsilon(1e-12));
        CHECK(m.exact_variance > m.variance);  // floor + n^2 amplification
    }
    // without shared noise the exact form reduces to the transmitter identity
    const ReceiverMoments solo =
        bactlink::receiver_moments(0.3, cfg.node, cfg.channel, false);
    const auto tx = bactlink::transmitter_moments(0.3, cfg.node);
    CHECK(solo.exact_variance ==
          doctest::Approx(tx.exact_variance).epsilon(1e-12));
}

TEST_CASE("transmitter noise adds a small shared term when included") {
    const auto cfg = bactlink::default_config();
    const double p0 = 0.615;
    const ReceiverMoments base =
        bactlink::receiver_moments(p0, cfg.node, cfg.channel, false);
    const ReceiverMoments full =
        bactlink::receiver_moments(p0, cfg.node, cfg.channel, true);
    CHECK(full.variance_transmitter > 0.0);
    CHECK(full.sigma0_sq > base.sigma0_sq);
    CHECK(full.variance > base.variance);
    // the filtering claim: the added term is small at the reference point
    CHECK((full.sigma0_sq - base.sigma0_sq) / base.sigma0_sq < 0.05);
    // unreachable operating point: required concentration beyond saturation
    CHECK_THROWS_AS(
        bactlink::receiver_moments(0.99, cfg.node, cfg.channel, true),
        std::domain_error);
}

TEST_CASE("snr identity against the moment ratio") {
    const auto cfg = bactlink::default_config();
    const double s0 = bactlink::sigma0_sq(cfg.node, cfg.channel);
    for (double p0 : {0.05, 0.1, 0.3, 0.5, 0.615, 0.9}) {
        const ReceiverMoments m =
            bactlink::receiver_moments(p0, cfg.node, cfg.channel, false);
        const double want = m.mean / std::sqrt(m.variance);
        CHECK(bactlink::snr_ratio(p0, cfg.node, s0) ==
              doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(std::isinf(bactlink::snr_ratio(1.0, cfg.node, s0)));
    CHECK(std::isinf(bactlink::snr_ratio(0.5, cfg.node, 0.0)));
    CHECK_THROWS_AS(bactlink::snr_ratio(1.5, cfg.node, s0), std::domain_error);
}

TEST_CASE("snr grows with the square root of the population") {
    const auto cfg = bactlink::default_config();
    const double s0 = bactlink::sigma0_sq(cfg.node, cfg.channel);
    NodeParams big = cfg.node;
    big.bacteria = 400;  // 4x bacteria -> 2x snr
    CHECK(bactlink::snr_ratio(0.5, big, s0) ==
          doctest::Approx(2.0 * bactlink::snr_ratio(0.5, cfg.node, s0))
              .epsilon(1e-13));
}

TEST_CASE("entrapment sensitivities carry the right signs and magnitude") {
    const auto cfg = bactlink::default_config();
    const auto s = bactlink::receiver_entrapment(100.0, cfg.node);
    const double pq = s.p0 * (1.0 - s.p0);
    CHECK(s.p0 == doctest::Approx(0.04 / 0.14).epsilon(1e-13));
    CHECK(s.c_gamma == doctest::Approx(pq).epsilon(1e-13));
    CHECK(s.c_kappa == doctest::Approx(-pq).epsilon(1e-13));
    CHECK(s.c_distance == doctest::Approx(-pq).epsilon(1e-13));
    CHECK(s.c_transmitter == doctest::Approx(pq).epsilon(1e-13));
}
