#include "quantfam/special.hpp"

#include <cmath>
#include <cstdlib>

#include "quantfam/errors.hpp"

namespace quantfam {

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_logpdf(double x) { return -0.5 * x * x - std::log(kSqrt2Pi); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

namespace {

// Acklam's rational approximation for the inverse normal CDF.
double norm_quantile_approx(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;

    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - plow) {
        double q = p - 0.5;
        double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double norm_quantile(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw InvalidParameter("u", u, "0 < u < 1");
    }
    if (u == 0.5) return 0.0;
    double x = norm_quantile_approx(u);
    // One Halley step against the erfc-based CDF.
    double e = norm_cdf(x) - u;
    double v = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= v / (1.0 + 0.5 * x * v);
    return x;
}

double logistic_cdf(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    double ex = std::exp(x);
    return ex / (1.0 + ex);
}

double logistic_pdf(double x) {
    double e = std::exp(-std::fabs(x));
    double denom = 1.0 + e;
    return e / (denom * denom);
}

double logistic_logpdf(double x) {
    double ax = std::fabs(x);
    return -ax - 2.0 * std::log1p(std::exp(-ax));
}

double logistic_quantile(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw InvalidParameter("u", u, "0 < u < 1");
    }
    return std::log(u) - std::log1p(-u);
}

double shifted_legendre(int k, double u) {
    switch (k) {
        case 0: return 1.0;
        case 1: return 2.0 * u - 1.0;
        case 2: return (6.0 * u - 6.0) * u + 1.0;
        case 3: return ((20.0 * u - 30.0) * u + 12.0) * u - 1.0;
        default:
            throw InvalidParameter("k", static_cast<double>(k), "0 <= k <= 3");
    }
}

namespace {

constexpr int kSeriesTerms = 10000;

// psi(z) for large z via the asymptotic expansion; accurate to well below
// 1e-14 for z >= 10.
double digamma_asymptotic(double z) {
    double inv = 1.0 / z;
    double inv2 = inv * inv;
    return std::log(z) - 0.5 * inv -
           inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
}

double digamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) throw PoleInput(x);
    double acc = 0.0;
    // Reflection for negative arguments keeps the recurrence short.
    if (x < 0.0) {
        // psi(x) = psi(1-x) - pi*cot(pi*x)
        return digamma(1.0 - x) - kPi / std::tan(kPi * x);
    }
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    return acc + digamma_asymptotic(x);
}

}  // namespace

double harmonic_number(double x) {
    double nearest = std::round(x);
    if (x < 0.0 && std::fabs(x - nearest) < 1e-12) throw PoleInput(x);

    const int n = kSeriesTerms;
    double sum = 0.0;
    for (int k = n; k >= 1; --k) {  // ascending magnitude for accuracy
        sum += 1.0 / (static_cast<double>(k) * (x + k));
    }
    // Tail: sum_{k>n} x/(k(x+k)) = sum_{k>n} [1/k - 1/(x+k)]
    //     = psi(n+1+x) - psi(n+1), by the asymptotic expansion (n+1 large).
    double tail = digamma_asymptotic(n + 1.0 + x) - digamma_asymptotic(n + 1.0);
    return x * sum + tail;
}

double polygamma(int m, double x) {
    if (m < 0) throw InvalidParameter("m", m, "m >= 0");
    if (x <= 0.0) throw PoleInput(x);
    if (m == 0) return digamma(x);

    const int n = kSeriesTerms;
    double sum = 0.0;
    for (int k = n - 1; k >= 0; --k) {
        sum += std::pow(x + k, -(m + 1));
    }
    // Euler-Maclaurin tail beyond k = n.
    double z = x + n;
    double tail = std::pow(z, -m) / m + 0.5 * std::pow(z, -(m + 1)) +
                  (m + 1) / 12.0 * std::pow(z, -(m + 2)) -
                  (m + 1) * (m + 2) * (m + 3) / 720.0 * std::pow(z, -(m + 4));
    double total = sum + tail;
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    double sign = (m % 2 == 0) ? -1.0 : 1.0;
    return sign * fact * total;
}

double log_cosh(double x) {
    double ax = std::fabs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

double log_abs_expm1(double x) {
    if (x > 36.0) return x + std::log1p(-std::exp(-x));
    if (x < -36.0) return 0.0;  // |expm1(x)| -> 1
    return std::log(std::fabs(std::expm1(x)));
}

}  // namespace quantfam
