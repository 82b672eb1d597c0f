#ifndef QUANTFAM_ESTIMATORS_HPP_
#define QUANTFAM_ESTIMATORS_HPP_

#include <map>
#include <span>
#include <string>

#include "quantfam/family.hpp"
#include "quantfam/optimize.hpp"

// The four fitting procedures (moment matching, maximum likelihood,
// quantile matching, method of L-moments) plus the lambda-matching solver
// for the logistic-base families.

namespace quantfam {

enum class FitMethod { MoM, ML, QM, MoLM, LambdaMatch };

const char* method_name(FitMethod m);
FitMethod method_from_name(const std::string& name);

struct FitResult {
    FamilySpec spec;
    FitMethod method = FitMethod::MoLM;
    double objective = 0.0;  // the method's own criterion at the optimum
    int n_evals = 0;
    double elapsed_seconds = 0.0;
    bool converged = false;
    std::map<std::string, double> diagnostics;
};

/// Method of L-moments: shape parameters minimize the (tau3, tau4)
/// matching objective against population ratios of the unit spec, then
/// b = l2_hat / l2 and a = l1_hat - b l1. Families: GH, GK, G, H, DoubleHH.
FitResult fit_molm(std::span<const double> data, FamilyKind family,
                   const OptimizerSettings& settings = {});

/// Moment matching for the GH family: (g, h) minimize the skewness/kurtosis
/// matching objective subject to 0 <= h < 1/4, then b = sqrt(m2_hat/m2)
/// and a = m1_hat - b m1. Sample shape uses the biased moment estimators.
FitResult fit_mom(std::span<const double> data, const OptimizerSettings& settings = {});

/// Maximum likelihood through the inverse quantile, initialized from the
/// MoLM fit; b is optimized on the log scale and observations outside a
/// candidate's support reject the candidate.
FitResult fit_ml(std::span<const double> data, FamilyKind family,
                 const OptimizerSettings& settings = {});

/// Quantile matching with the level count q in {4..20} selected by AIC
/// computed from the full-sample SSE at plotting positions.
FitResult fit_qm(std::span<const double> data, FamilyKind family,
                 const OptimizerSettings& settings = {});

/// Solves lambda1(theta) = l1_hat, lambda2(theta) = l2_hat for the logistic
/// families by damped Newton on the closed forms with a multi-start grid.
FitResult fit_logistic_lmatch(std::span<const double> data, FamilyKind family);

/// Interpolated order-statistic sample quantile (data must be sorted).
double sample_quantile_sorted(std::span<const double> sorted, double u);

std::string to_json(const FitResult& fit);

}  // namespace quantfam

#endif  // QUANTFAM_ESTIMATORS_HPP_
