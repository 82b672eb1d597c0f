#include "quantfam/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "quantfam/distribution.hpp"

namespace quantfam {

double rmse(std::span<const double> data, const FamilySpec& spec) {
    const std::size_t n = data.size();
    if (n < 2) throw TooFewObservations(n, 2);
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double u = (static_cast<double>(i + 1) - 0.5) / static_cast<double>(n);
        double d = quantile(QuantileLevel(u), spec) - sorted[i];
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(n));
}

std::vector<std::pair<double, double>> qq_points(std::span<const double> data,
                                                 const FamilySpec& spec,
                                                 const std::vector<double>* levels) {
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> out;
    if (levels == nullptr) {
        const std::size_t n = sorted.size();
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            double u = (static_cast<double>(i + 1) - 0.5) / static_cast<double>(n);
            out.emplace_back(quantile(QuantileLevel(u), spec), sorted[i]);
        }
    } else {
        std::vector<double> ls = *levels;
        std::sort(ls.begin(), ls.end());
        out.reserve(ls.size());
        for (double u : ls)
            out.emplace_back(quantile(QuantileLevel(u), spec),
                             sample_quantile_sorted(sorted, u));
    }
    return out;
}

GofReport gof_report(std::span<const double> data, const FamilySpec& spec) {
    GofReport report;
    report.spec = spec;
    report.n = static_cast<int>(data.size());
    report.rmse = rmse(data, spec);
    report.qq = qq_points(data, spec);
    return report;
}

std::vector<std::pair<std::string, GofReport>> grouped_gof(
    const std::map<std::string, std::vector<double>>& groups, FamilyKind family,
    FitMethod method, const OptimizerSettings& settings) {
    std::vector<std::pair<std::string, GofReport>> out;
    for (const auto& [key, values] : groups) {
        FitResult fit;
        switch (method) {
            case FitMethod::MoM: fit = fit_mom(values, settings); break;
            case FitMethod::ML: fit = fit_ml(values, family, settings); break;
            case FitMethod::QM: fit = fit_qm(values, family, settings); break;
            case FitMethod::MoLM: fit = fit_molm(values, family, settings); break;
            case FitMethod::LambdaMatch: fit = fit_logistic_lmatch(values, family); break;
        }
        out.emplace_back(key, gof_report(values, fit.spec));
    }
    return out;
}

std::string to_json(const GofReport& report) {
    nlohmann::json j;
    j["rmse"] = report.rmse;
    j["n"] = report.n;
    j["spec"] = nlohmann::json::parse(to_json(report.spec));
    nlohmann::json qq = nlohmann::json::array();
    for (const auto& [model_q, sample_q] : report.qq) {
        qq.push_back(nlohmann::json::array({model_q, sample_q}));
    }
    j["qq"] = qq;
    return j.dump();
}

std::string qq_csv(const std::vector<std::pair<double, double>>& qq) {
    std::string out = "model_q,sample_q\n";
    char buf[80];
    for (const auto& [model_q, sample_q] : qq) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", model_q, sample_q);
        out += buf;
    }
    return out;
}

}  // namespace quantfam
