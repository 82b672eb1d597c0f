#ifndef QUANTFAM_LMOMENTS_HPP_
#define QUANTFAM_LMOMENTS_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quantfam/family.hpp"

// Sample L-moments via probability-weighted moments, population L-moments
// via quadrature of the quantile function against shifted Legendre weights,
// and closed forms for the logistic-base families.

namespace quantfam {

struct LMomentSet {
    double l1 = 0.0, l2 = 0.0, l3 = 0.0, l4 = 0.0;
    double tau3 = 0.0, tau4 = 0.0;
    bool ratios_defined = true;  // false for degenerate samples (l2 == 0)
};

struct PWMSet {
    double m0 = 0.0, m1 = 0.0, m2 = 0.0, m3 = 0.0;
};

/// Sample probability-weighted moments M_0..M_3. Sorts a copy when the
/// input is not already ascending. Requires n >= 4.
PWMSet sample_pwm(std::span<const double> data);

/// First four sample L-moments as the standard linear combinations of the
/// PWMs, with tau ratios attached. Degenerate samples (l2 = 0) carry
/// ratios_defined = false rather than NaNs.
LMomentSet sample_lmoments(std::span<const double> data);

/// Population L-moments l_k = int_0^1 Q_X(u) P*_{k-1}(u) du, computed on
/// the base-variable axis with the substitution u = F_W(w). Requires the
/// mean to exist (h < 1 for GH/H).
LMomentSet population_lmoments(const FamilySpec& spec);

/// Closed-form first two population L-moments of the logistic gamma-kappa
/// family in terms of harmonic numbers. Requires gamma + kappa < 1,
/// kappa < 1, 1 + gamma > kappa and gamma != 0.
std::pair<double, double> logistic_gk_lambda(double gamma, double kappa);

/// Closed-form first two population L-moments of the logistic
/// kappaL-kappaR family in terms of polygamma values. Requires both
/// kappas < 1.
std::pair<double, double> logistic_kk_lambda(double kappa_left, double kappa_right);

/// LMomentSet to JSON {"l1":...,"l2":...,"l3":...,"l4":...,"tau3":...,"tau4":...}.
std::string to_json(const LMomentSet& lm);

// Verbatim transcriptions of the published closed-form population
// L-moments for the Gaussian-base families. Kept for documentation and for
// regression of the known discrepancy: their integral kernel sqrt(2) *
// phi(sqrt(2) R) weights a variance-1/2 base rather than the standard
// normal, so e.g. gh_l1 disagrees with the correct closed-form mean.
// Never used by the estimators.
namespace paper_fidelity {

double g_family_l1(double g);
double h_family_l1(double h);
double h_family_l2(double h);
double gh_family_l1(double g, double h);

}  // namespace paper_fidelity

}  // namespace quantfam

#endif  // QUANTFAM_LMOMENTS_HPP_
