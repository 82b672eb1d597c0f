#ifndef QUANTFAM_DISTRIBUTION_HPP_
#define QUANTFAM_DISTRIBUTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quantfam/family.hpp"

// Distribution machinery on top of a FamilySpec: quantile, CDF, PDF,
// sampling, moments, mode/median, quantile-based shape functionals and
// tail diagnostics.

namespace quantfam {

/// Strictly interior probability level.
struct QuantileLevel {
    double u;
    explicit QuantileLevel(double level) : u(level) {
        if (!(u > 0.0 && u < 1.0)) throw InvalidParameter("u", u, "0 < u < 1");
    }
};

struct InversionSettings {
    double abs_tol = 1e-12;
    int max_iter = 200;
    double bracket_expansion = 2.0;
};

/// Q_X(u) = a + b r0(Q_W(u)) with the Gaussian or logistic base quantile.
double quantile(QuantileLevel u, const FamilySpec& spec);

/// Root-search inverse of the transform: returns w* with
/// |transform(w*) - x| <= abs_tol * max(1, |x|). Bracketing by doubling
/// followed by safeguarded Newton with bisection fallback.
double inverse_quantile(double x, const FamilySpec& spec, const InversionSettings& settings = {});

/// F_X(x) = F_W(r^{-1}(x)); 0/1 outside the support.
double cdf(double x, const FamilySpec& spec, const InversionSettings& settings = {});

/// f_X(x) = f_W(w*) / r'(w*) at w* = r^{-1}(x); 0 outside the support.
double pdf(double x, const FamilySpec& spec, const InversionSettings& settings = {});

/// Ordered draws with provenance. Identical (seed, n, spec) arguments give
/// bit-identical values.
struct SamplePayload {
    std::vector<double> values;
    std::uint64_t seed = 0;
    FamilySpec spec;
    std::string source;  // file/column provenance when loaded, empty for synthetic
};

SamplePayload sample(int n, std::uint64_t seed, const FamilySpec& spec);

/// Closed-form raw moment E[X^k] for the GH/H/G families, 1 <= k <= 8.
/// Throws MomentDoesNotExist when h >= 1/k.
double raw_moment_gh(int k, const FamilySpec& spec);

struct MomentSummary {
    double m1, m2, m3, m4;  // mean and central moments 2..4
    double skewness;        // zeta_3 = m3 / m2^{3/2}
    double kurtosis;        // zeta_4 = m4 / m2^2
};

/// Central moments and shape for GH/H/G via the closed-form raw moments
/// and the binomial recursion. Requires h < 1/4.
MomentSummary central_moments_and_shape(const FamilySpec& spec);

/// E[X^k] by adaptive quadrature of r(w)^k f_W(w) over the real line,
/// extended until the tail contribution is negligible. Works for every
/// family; throws Divergent when the integrand fails to decay.
double moment_numeric(int k, const FamilySpec& spec);

/// Median is the location parameter a exactly.
double median(const FamilySpec& spec);

/// argmax of the density, found by golden-section search of
/// f_W(w)/r'(w) and mapped through the transform.
double mode(const FamilySpec& spec);

/// S_F(alpha) = Q(alpha) - Q(1-alpha), alpha in (0.5, 1).
double spread_functional(double alpha, const FamilySpec& spec);

/// gamma_F(alpha) = (Q(alpha) + Q(1-alpha) - 2 Q(1/2)) / S_F(alpha).
double skewness_functional(double alpha, const FamilySpec& spec);

/// Index of regular variation: 1/h for GH/GeneralizedGH/H with h > 0,
/// nullopt for h = 0. Other families throw UnsupportedFamily.
std::optional<double> tail_index(const FamilySpec& spec);

/// Explicit slowly varying factor L(x) of the GH survival function,
/// valid for g > 0, h > 0.
double slow_variation(double x, const FamilySpec& spec);

}  // namespace quantfam

#endif  // QUANTFAM_DISTRIBUTION_HPP_
