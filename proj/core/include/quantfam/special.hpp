#ifndef QUANTFAM_SPECIAL_HPP_
#define QUANTFAM_SPECIAL_HPP_

// Scalar special functions: standard normal and logistic kernels,
// shifted Legendre polynomials, harmonic numbers and polygamma.

namespace quantfam {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal CDF, Phi(x) = erfc(-x/sqrt(2))/2.
double norm_cdf(double x);

/// log of the standard normal density.
double norm_logpdf(double x);

/// Standard normal quantile. Rational approximation refined by one Halley
/// step; absolute accuracy around 1e-15 over (0,1).
double norm_quantile(double u);

/// Standard logistic density, CDF and quantile.
double logistic_pdf(double x);
double logistic_cdf(double x);
double logistic_logpdf(double x);
double logistic_quantile(double u);

/// Shifted Legendre polynomial P*_k(u) on [0,1], k in {0,1,2,3}.
/// P*_0 = 1, P*_1 = 2u-1, P*_2 = 6u^2-6u+1, P*_3 = 20u^3-30u^2+12u-1.
double shifted_legendre(int k, double u);

/// Harmonic number H[x] = x * sum_{k>=1} 1/(k(x+k)), extended by analytic
/// continuation to x > -1 and beyond, excluding negative integers.
/// Direct series over the first 1e4 terms plus an asymptotic tail
/// correction; absolute tolerance ~1e-12.
double harmonic_number(double x);

/// Polygamma P[m,x]. P[0,x] is digamma; for m >= 1,
/// P[m,x] = (-1)^{m+1} m! sum_{k>=0} 1/(x+k)^{m+1}. Requires x > 0.
double polygamma(int m, double x);

/// log(cosh(x)) without overflow.
double log_cosh(double x);

/// log(|expm1(x)|) without overflow for large |x|.
double log_abs_expm1(double x);

}  // namespace quantfam

#endif  // QUANTFAM_SPECIAL_HPP_
