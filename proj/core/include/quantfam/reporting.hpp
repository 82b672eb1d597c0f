#ifndef QUANTFAM_REPORTING_HPP_
#define QUANTFAM_REPORTING_HPP_

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quantfam/estimators.hpp"

// Goodness-of-fit artifacts: quantile RMSE against order statistics,
// Q-Q point export, and grouped fit reports.

namespace quantfam {

struct GofReport {
    double rmse = 0.0;
    int n = 0;
    FamilySpec spec;
    std::vector<std::pair<double, double>> qq;  // (model_q, sample_q), sorted by level
};

/// RMSE between model quantiles at levels (i-0.5)/n and the order
/// statistics. Input order is irrelevant; sorting is internal.
double rmse(std::span<const double> data, const FamilySpec& spec);

/// (model quantile, sample quantile) pairs. Default levels are
/// (i-0.5)/n with the i-th order statistic on the sample side; custom
/// levels use the interpolated sample quantile.
std::vector<std::pair<double, double>> qq_points(std::span<const double> data,
                                                 const FamilySpec& spec,
                                                 const std::vector<double>* levels = nullptr);

GofReport gof_report(std::span<const double> data, const FamilySpec& spec);

/// Fits each group independently and reports goodness of fit, merged in
/// key order.
std::vector<std::pair<std::string, GofReport>> grouped_gof(
    const std::map<std::string, std::vector<double>>& groups, FamilyKind family,
    FitMethod method, const OptimizerSettings& settings = {});

std::string to_json(const GofReport& report);

/// Two-column CSV "model_q,sample_q".
std::string qq_csv(const std::vector<std::pair<double, double>>& qq);

}  // namespace quantfam

#endif  // QUANTFAM_REPORTING_HPP_
