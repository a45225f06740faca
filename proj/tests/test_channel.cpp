#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "bactlink/channel.hpp"
#include "bactlink/config.hpp"
#include "bactlink/receiver.hpp"
#include "bactlink/units.hpp"

using bactlink::ChannelParams;
using bactlink::NodeParams;

namespace {

// Composite Simpson oracle for the closed-form channel responses.
double composite_simpson(const std::function<double(double)>& f, double a,
                         double b, int panels) {
    const double h = (b - a) / (2 * panels);
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < 2 * panels; i += 2) odd += f(a + i * h);
    for (int i = 2; i < 2 * panels; i += 2) even += f(a + i * h);
    return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

// Integral over (0, b] of a function with a flat (underflowing) start and
// power-law decay: dyadic windows so every scale is resolved uniformly.
double integrate_from_zero(const std::function<double(double)>& f, double b) {
    double acc = 0.0;
    double hi = b;
    for (int k = 0; k < 120 && hi > 0.0; ++k) {
        const double lo = hi / 2.0;
        acc += composite_simpson(f, lo, hi, 64);
        hi = lo;
    }
    return acc;
}

}  // namespace

TEST_CASE("impulse response has the point-source form") {
    ChannelParams ch;
    const double r = bactlink::um_to_cm(50.0);
    const double t = 100.0;
    const double want = std::pow(4.0 * std::numbers::pi * ch.diffusion * t,
                                 -1.5) *
                        std::exp(-r * r / (4.0 * ch.diffusion * t));
    CHECK(bactlink::green_impulse(r, t, ch) ==
          doctest::Approx(want).epsilon(1e-14));
    CHECK_THROWS_AS(bactlink::green_impulse(r, 0.0, ch), std::domain_error);
}

TEST_CASE("impulse response conserves mass over space") {
    ChannelParams ch;
    for (double t : {10.0, 100.0, 1000.0}) {
        const double sd = std::sqrt(2.0 * ch.diffusion * t);
        const auto shell = [&](double r) {
            return 4.0 * std::numbers::pi * r * r *
                   bactlink::green_impulse(r, t, ch);
        };
        const double mass = composite_simpson(shell, 0.0, 14.0 * sd, 4000);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("sustained-source response equals the Green's function quadrature") {
    ChannelParams ch;  // pulse_s = infinity
    const double beta = 2.5e5;  // molecules per second
    const double r = bactlink::um_to_cm(50.0);
    for (double t : {5.0, 30.0, 120.0, 600.0, 3000.0}) {
        const auto g = [&](double u) {
            return u <= 0.0 ? 0.0 : bactlink::green_impulse(r, u, ch);
        };
        const double want = beta * integrate_from_zero(g, t);
        CHECK(bactlink::step_response(r, t, beta, ch) ==
              doctest::Approx(want).epsilon(1e-7));
    }
    CHECK(bactlink::step_response(r, 0.0, beta, ch) == 0.0);
}

TEST_CASE("finite pulse subtracts the shifted tail") {
    ChannelParams ch;
    ch.pulse_s = 300.0;
    ChannelParams sustained;
    const double beta = 1e5;
    const double r = bactlink::um_to_cm(50.0);
    // while the source is on, the pulse looks sustained
    for (double t : {10.0, 150.0, 299.0}) {
        CHECK(bactlink::step_response(r, t, beta, ch) ==
              doctest::Approx(bactlink::step_response(r, t, beta, sustained))
                  .epsilon(1e-13));
    }
    // after shutoff it is the difference of two rise curves
    for (double t : {301.0, 400.0, 1000.0}) {
        const double want =
            bactlink::step_response(r, t, beta, sustained) -
            bactlink::step_response(r, t - 300.0, beta, sustained);
        CHECK(bactlink::step_response(r, t, beta, ch) ==
              doctest::Approx(want).epsilon(1e-10));
        // quadrature cross-check over the emission window only
        const auto g = [&](double u) {
            return u <= 0.0 ? 0.0 : bactlink::green_impulse(r, u, ch);
        };
        const double direct =
            beta * composite_simpson(g, t - 300.0, t, 4000);
        CHECK(bactlink::step_response(r, t, beta, ch) ==
              doctest::Approx(direct).epsilon(1e-7));
    }
    // residual decays away relative to the on-state level
    const double steady = bactlink::steady_concentration(beta, r, sustained);
    CHECK(bactlink::step_response(r, 5e7, beta, ch) / steady < 1e-6);
}

TEST_CASE("steady concentration is the long-time limit") {
    ChannelParams ch;
    const double beta = 3e4;
    const double r = bactlink::um_to_cm(50.0);
    const double steady = bactlink::steady_concentration(beta, r, ch);
    CHECK(steady ==
          doctest::Approx(beta / (4.0 * std::numbers::pi * ch.diffusion * r))
              .epsilon(1e-14));
    CHECK(bactlink::step_response(r, 1e13, beta, ch) ==
          doctest::Approx(steady).epsilon(1e-6));
}

TEST_CASE("saturation level and required stimulus at the reference point") {
    const auto cfg = bactlink::default_config();
    const double a_sat =
        bactlink::saturation_concentration(cfg.node, cfg.channel);
    CHECK(a_sat == doctest::Approx(420.0).epsilon(1e-12));
    CHECK(bactlink::required_stimulus(400.0, cfg.node, cfg.channel) ==
          doctest::Approx(5000.0).epsilon(1e-12));
    CHECK(bactlink::required_stimulus(0.0, cfg.node, cfg.channel) == 0.0);
    CHECK_THROWS_AS(bactlink::required_stimulus(420.0, cfg.node, cfg.channel),
                    std::domain_error);
    CHECK_THROWS_AS(bactlink::required_stimulus(500.0, cfg.node, cfg.channel),
                    std::domain_error);
}

TEST_CASE("stimulus and received concentration round-trip") {
    const auto cfg = bactlink::default_config();
    for (double target : {10.0, 100.0, 250.0, 400.0, 419.0}) {
        const double stim =
            bactlink::required_stimulus(target, cfg.node, cfg.channel);
        const auto stats =
            bactlink::receiver_concentration_stats(stim, cfg.node, cfg.channel);
        CHECK(stats.mean == doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("received-concentration statistics carry the noise budget") {
    const auto cfg = bactlink::default_config();
    const double stim = 5000.0;
    const auto stats =
        bactlink::receiver_concentration_stats(stim, cfg.node, cfg.channel);
    const double ps = 2.0 / 2.1;  // 5000*0.0004 / (5000*0.0004 + 0.1)
    CHECK(stats.p_s_star == doctest::Approx(ps).epsilon(1e-13));
    const double rho = cfg.node.relative_noise_sq();
    CHECK(stats.sigma_t_sq ==
          doctest::Approx((1.0 - ps) * (1.0 - ps) * rho / cfg.node.bacteria)
              .epsilon(1e-12));
    CHECK(stats.sigma_r_rel_sq == 0.0);

    bactlink::ChannelParams wobbly = cfg.channel;
    wobbly.sigma_r_sq = 0.02 * wobbly.distance * wobbly.distance;
    const auto s2 =
        bactlink::receiver_concentration_stats(stim, cfg.node, wobbly);
    CHECK(s2.sigma_r_rel_sq == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("channel parameter validation") {
    ChannelParams ch;
    CHECK_NOTHROW(ch.validate());
    ChannelParams bad = ch;
    bad.diffusion = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = ch;
    bad.distance = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = ch;
    bad.sigma_r_sq = -1e-9;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}
