#include "bactlink/core.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bactlink {

namespace {

// Rational Chebyshev fits for erf/erfc (W. J. Cody, Math. Comp. 23, 1969,
// coefficients as distributed with netlib SPECFUN). Three intervals:
// |x| <= 0.46875 evaluates erf directly, the other two evaluate erfc so the
// tail never goes through 1 - erf cancellation.
constexpr double kA[5] = {3.16112374387056560e0, 1.13864154151050156e2,
                          3.77485237685302021e2, 3.20937758913846947e3,
                          1.85777706184603153e-1};
constexpr double kB[4] = {2.36012909523441209e1, 2.44024637934444173e2,
                          1.28261652607737228e3, 2.84423683343917062e3};
constexpr double kC[9] = {5.64188496988670089e-1, 8.88314979438837594e0,
                          6.61191906371416295e1,  2.98635138197400131e2,
                          8.81952221241769090e2,  1.71204761263407058e3,
                          2.05107837782607147e3,  1.23033935479799725e3,
                          2.15311535474403846e-8};
constexpr double kD[8] = {1.57449261107098347e1, 1.17693950891312499e2,
                          5.37181101862009858e2, 1.62138957456669019e3,
                          3.29079923573345963e3, 4.36261909014324716e3,
                          3.43936767414372164e3, 1.23033935480374942e3};
constexpr double kP[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                          1.25781726111229246e-1, 1.60837851487422766e-2,
                          6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr double kQ[5] = {2.56852019228982242e0, 1.87295284992346047e0,
                          5.27905102951428412e-1, 6.05183413124413191e-2,
                          2.33520497626869185e-3};

constexpr double kInvSqrtPi = 5.6418958354775628695e-1;
constexpr double kErfThresh = 0.46875;
constexpr double kXSmall = 1.11e-16;
constexpr double kXBig = 26.543;  // erfc underflows beyond this

double erf_small(double x) {
    // |x| <= 0.46875
    const double ysq = std::abs(x) > kXSmall ? x * x : 0.0;
    double num = kA[4] * ysq;
    double den = ysq;
    for (int i = 0; i < 3; ++i) {
        num = (num + kA[i]) * ysq;
        den = (den + kB[i]) * ysq;
    }
    return x * (num + kA[3]) / (den + kB[3]);
}

double erfc_mid(double y) {
    // 0.46875 < y <= 4
    double num = kC[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
        num = (num + kC[i]) * y;
        den = (den + kD[i]) * y;
    }
    const double r = (num + kC[7]) / (den + kD[7]);
    // exp(-y^2) split as exp(-ysq^2)*exp(-del) to limit rounding in y*y
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del) * r;
}

double erfc_large(double y) {
    // y > 4
    if (y >= kXBig) return 0.0;
    const double ysq = 1.0 / (y * y);
    double num = kP[5] * ysq;
    double den = ysq;
    for (int i = 0; i < 4; ++i) {
        num = (num + kP[i]) * ysq;
        den = (den + kQ[i]) * ysq;
    }
    double r = ysq * (num + kP[4]) / (den + kQ[4]);
    r = (kInvSqrtPi - r) / y;
    const double yt = std::trunc(y * 16.0) / 16.0;
    const double del = (y - yt) * (y + yt);
    return std::exp(-yt * yt) * std::exp(-del) * r;
}

}  // namespace

double erf(double x) {
    if (std::isnan(x)) return x;
    const double y = std::abs(x);
    if (y <= kErfThresh) return erf_small(x);
    const double c = y <= 4.0 ? erfc_mid(y) : erfc_large(y);
    const double r = (0.5 - c) + 0.5;
    return x < 0.0 ? -r : r;
}

double erfc(double x) {
    if (std::isnan(x)) return x;
    const double y = std::abs(x);
    double r;
    if (y <= kErfThresh) {
        r = 1.0 - erf_small(y);
    } else if (y <= 4.0) {
        r = erfc_mid(y);
    } else {
        r = erfc_large(y);
    }
    return x < 0.0 ? 2.0 - r : r;
}

double inverse_erfc(double q) {
    if (!(q > 0.0) || !(q < 2.0))
        throw std::domain_error("inverse_erfc: argument must lie in (0, 2)");
    if (q == 1.0) return 0.0;
    if (q > 1.0) return -inverse_erfc(2.0 - q);

    // erfc is strictly decreasing; expand the upper bracket until it straddles.
    double lo = 0.0;
    double hi = 1.0;
    while (erfc(hi) > q) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double v = erfc(mid);
        if (v > q)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-17 * (1.0 + mid)) break;
    }
    return 0.5 * (lo + hi);
}

double gaussian_cdf(double x, double mean, double std_dev) {
    if (std_dev < 0.0)
        throw std::domain_error("gaussian_cdf: negative standard deviation");
    if (std_dev == 0.0) return x < mean ? 0.0 : 1.0;
    const double z = (x - mean) / std_dev;
    return 0.5 * erfc(-z / std::sqrt(2.0));
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double target, Tolerance tol) {
    if (!(tol.abs > 0.0) || tol.max_iter < 1)
        throw std::domain_error("bisect: tolerance must be positive");
    if (lo > hi) std::swap(lo, hi);
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisect: target not bracketed by [lo, hi]");

    double mid = lo;
    for (int i = 0; i < tol.max_iter; ++i) {
        mid = 0.5 * (lo + hi);
        const double fm = f(mid) - target;
        if (std::abs(fm) <= tol.abs) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    throw std::runtime_error("bisect: residual bound not reached within max_iter");
}

}  // namespace bactlink
