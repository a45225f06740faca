#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "bactlink/core.hpp"

namespace {

// Maclaurin series of erf, independent of any library implementation.
// Converges fast for |x| <= 2; evaluated in long double so the alternating
// cancellation does not eat the comparison budget.
long double erf_series(long double x) {
    const long double two_over_sqrt_pi =
        1.1283791670955125738961589031215451716881L;
    long double term = x;
    long double sum = x;
    for (int k = 1; k < 80; ++k) {
        term *= -x * x / k;
        sum += term / (2 * k + 1);
    }
    return two_over_sqrt_pi * sum;
}

}  // namespace

TEST_CASE("erf matches a Maclaurin-series oracle on [-2, 2]") {
    for (double x = -2.0; x <= 2.0; x += 0.05) {
        const double want = static_cast<double>(erf_series(x));
        CHECK(bactlink::erf(x) == doctest::Approx(want).epsilon(1e-13));
    }
    CHECK(bactlink::erf(0.0) == 0.0);
    CHECK(bactlink::erf(1.0) == doctest::Approx(0.8427007929497148).epsilon(1e-14));
}

TEST_CASE("erf and erfc agree with the standard library across the range") {
    for (double x = -6.0; x <= 6.0; x += 0.1) {
        CHECK(bactlink::erf(x) == doctest::Approx(std::erf(x)).epsilon(5e-14));
    }
    for (double x = 0.0; x <= 26.0; x += 0.25) {
        const double want = std::erfc(x);
        if (want > 0.0) {
            CHECK(bactlink::erfc(x) == doctest::Approx(want).epsilon(5e-13));
            CHECK(bactlink::erfc(-x) ==
                  doctest::Approx(std::erfc(-x)).epsilon(5e-13));
        }
    }
    CHECK(bactlink::erfc(27.0) == 0.0);  // underflow, not garbage
    CHECK(bactlink::erfc(0.0) == 1.0);
}

TEST_CASE("erf is odd and erfc complements it") {
    for (double x = 0.0; x <= 5.0; x += 0.17) {
        CHECK(bactlink::erf(-x) == doctest::Approx(-bactlink::erf(x)));
        CHECK(bactlink::erf(x) + bactlink::erfc(x) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("inverse_erfc round-trips and hits reference points") {
    for (double q : {1e-8, 1e-4, 0.01, 0.1, 0.5, 0.9, 1.0, 1.5, 1.9, 1.999}) {
        const double x = bactlink::inverse_erfc(q);
        CHECK(bactlink::erfc(x) == doctest::Approx(q).epsilon(1e-9));
    }
    CHECK(bactlink::inverse_erfc(1.0) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(bactlink::inverse_erfc(0.9) ==
          doctest::Approx(0.08885599049425769).epsilon(1e-9));
    CHECK(bactlink::inverse_erfc(0.5) ==
          doctest::Approx(0.4769362762044699).epsilon(1e-9));
    // strictly decreasing
    double prev = bactlink::inverse_erfc(0.01);
    for (double q = 0.1; q < 2.0; q += 0.1) {
        const double x = bactlink::inverse_erfc(q);
        CHECK(x < prev);
        prev = x;
    }
    CHECK_THROWS_AS(bactlink::inverse_erfc(0.0), std::domain_error);
    CHECK_THROWS_AS(bactlink::inverse_erfc(2.0), std::domain_error);
    CHECK_THROWS_AS(bactlink::inverse_erfc(-1.0), std::domain_error);
}

TEST_CASE("gaussian_cdf reduces to erfc and handles the degenerate spread") {
    for (double z : {-3.0, -1.0, 0.0, 0.5, 2.5}) {
        const double want = 0.5 * std::erfc(-z / std::sqrt(2.0));
        CHECK(bactlink::gaussian_cdf(z, 0.0, 1.0) ==
              doctest::Approx(want).epsilon(1e-13));
        CHECK(bactlink::gaussian_cdf(2.0 + 3.0 * z, 2.0, 3.0) ==
              doctest::Approx(want).epsilon(1e-13));
    }
    CHECK(bactlink::gaussian_cdf(0.99, 1.0, 0.0) == 0.0);
    CHECK(bactlink::gaussian_cdf(1.0, 1.0, 0.0) == 1.0);
    CHECK(bactlink::gaussian_cdf(1.01, 1.0, 0.0) == 1.0);
    CHECK_THROWS_AS(bactlink::gaussian_cdf(0.0, 0.0, -1.0), std::domain_error);
}

TEST_CASE("bisect finds bracketed roots to the requested residual") {
    const auto f = [](double x) { return std::cos(x); };
    const double root = bactlink::bisect(f, 0.0, 3.14159265358979, 0.0);
    CHECK(std::abs(std::cos(root)) <= 1e-10);
    CHECK(root == doctest::Approx(1.5707963267948966).epsilon(1e-9));

    // non-zero target
    const auto g = [](double x) { return x * x; };
    const double r2 = bactlink::bisect(g, 0.0, 10.0, 9.0);
    CHECK(r2 == doctest::Approx(3.0).epsilon(1e-9));

    // decreasing function bracket
    const auto h = [](double x) { return 1.0 - x; };
    CHECK(bactlink::bisect(h, 0.0, 2.0, 0.25) ==
          doctest::Approx(0.75).epsilon(1e-9));

    CHECK_THROWS_AS(bactlink::bisect(g, 1.0, 2.0, 100.0),
                    std::invalid_argument);
}
