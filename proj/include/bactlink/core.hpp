#pragma once

#include <functional>

namespace bactlink {

/// Convergence control for iterative numeric routines.
///
/// abs is the residual bound the routine must reach, rel is the relative
/// interval/step bound where applicable, max_iter caps the iteration count.
struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-12;
    int max_iter = 200;
};

/// Error function, rational Chebyshev approximation (three-interval scheme),
/// accurate to better than 1e-13 relative over the full double range.
double erf(double x);

/// Complementary error function 1 - erf(x), computed directly in the tail so
/// large arguments do not suffer cancellation. erfc(27) underflows to 0.
double erfc(double x);

/// Inverse of erfc on (0, 2): returns x with erfc(x) == q, by bracketed
/// bisection. Residual |erfc(x) - q| <= 1e-10 (typically ~1e-16 relative).
/// Throws std::domain_error outside (0, 2).
double inverse_erfc(double q);

/// Normal CDF with explicit mean and standard deviation. std == 0 degenerates
/// to the unit step: 0 for x < mean, 1 for x >= mean. std < 0 is a domain
/// error.
double gaussian_cdf(double x, double mean, double std_dev);

/// Bracketed bisection: returns x in [lo, hi] with |f(x) - target| <= tol.abs.
/// Requires f(lo) - target and f(hi) - target to have opposite signs (else
/// std::invalid_argument). Throws std::runtime_error if the residual bound is
/// not met within tol.max_iter iterations.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double target, Tolerance tol = {});

}  // namespace bactlink
