// Acceptance suite: every criterion below runs at its stated tolerance and
// prints one PASS/FAIL line. The process exit code is the failure count.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quantfam/distribution.hpp"
#include "quantfam/estimators.hpp"
#include "quantfam/lmoments.hpp"
#include "quantfam/quadrature.hpp"
#include "quantfam/reporting.hpp"
#include "quantfam/simstudy.hpp"
#include "quantfam/special.hpp"

using namespace quantfam;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %-28s %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

const CellSummary* find_cell(const StudySummary& s, FitMethod m, int n) {
    for (const auto& c : s.cells)
        if (c.method == m && c.n == n) return &c;
    return nullptr;
}

const ParameterStat* find_param(const CellSummary& cell, const std::string& name) {
    for (const auto& p : cell.parameters)
        if (p.name == name) return &p;
    return nullptr;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------- 1 & 2/3

StudySummary run_reference_study(int parallelism) {
    StudyConfig cfg;
    cfg.true_spec = FamilySpec::gh(0, 1, 0.1, 0.1);
    cfg.sample_sizes = {100};
    cfg.replicates = 500;
    cfg.methods = {FitMethod::MoLM};
    cfg.master_seed = 20160201;
    cfg.parallelism = parallelism;
    return run_study(cfg);
}

StudySummary run_heavy_case(int parallelism) {
    StudyConfig cfg;
    cfg.true_spec = FamilySpec::gh(0, 1, 0.5, 0.2);
    cfg.sample_sizes = {1000};
    cfg.replicates = 200;
    cfg.methods = {FitMethod::MoLM, FitMethod::MoM};
    cfg.master_seed = 20160202;
    cfg.parallelism = parallelism;
    return run_study(cfg);
}

void criterion1(const StudySummary& s) {
    const CellSummary* cell = find_cell(s, FitMethod::MoLM, 100);
    const double ref_mean[4] = {0.003, 0.996, 0.098, 0.098};
    const double ref_mse[4] = {0.013, 0.013, 0.013, 0.004};
    const char* names[4] = {"a", "b", "g", "h"};
    bool pass = cell != nullptr;
    std::string detail;
    for (int i = 0; cell && i < 4; ++i) {
        const ParameterStat* p = find_param(*cell, names[i]);
        double se = *p->sd / std::sqrt(static_cast<double>(cell->successes));
        bool mean_ok = std::fabs(p->mean - ref_mean[i]) <= 3.0 * se;
        bool mse_ok = p->mse >= 0.5 * ref_mse[i] && p->mse <= 1.5 * ref_mse[i];
        pass = pass && mean_ok && mse_ok;
        detail += std::string(names[i]) + "=" + fmt(p->mean) + "/" + fmt(p->mse) + " ";
    }
    report(1, "reference study agreement", pass, detail);
}

void criterion2(const StudySummary& s) {
    const CellSummary* cell = find_cell(s, FitMethod::MoLM, 1000);
    const ParameterStat* g = find_param(*cell, "g");
    const ParameterStat* h = find_param(*cell, "h");
    bool pass = std::fabs(g->mean - 0.500) <= 0.02 && std::fabs(h->mean - 0.197) <= 0.02;
    report(2, "heavy case recovery", pass,
           "mean g=" + fmt(g->mean) + " mean h=" + fmt(h->mean));
}

void criterion3(const StudySummary& s) {
    const CellSummary* cell = find_cell(s, FitMethod::MoM, 1000);
    const ParameterStat* h = find_param(*cell, "h");
    bool pass = h->mean < 0.05;
    report(3, "MoM h pathology", pass, "mean h=" + fmt(h->mean));
}

void criterion4(const StudySummary& heavy) {
    // MSE ordering in the n=1000 cells
    const CellSummary* molm = find_cell(heavy, FitMethod::MoLM, 1000);
    const CellSummary* mom = find_cell(heavy, FitMethod::MoM, 1000);
    bool mse_ok = true;
    for (std::size_t i = 0; i < molm->parameters.size(); ++i)
        mse_ok = mse_ok && molm->parameters[i].mse <= mom->parameters[i].mse;

    // timing ordering on an ML-feasible cell
    StudyConfig cfg;
    cfg.true_spec = FamilySpec::gh(0, 1, 0.1, 0.1);
    cfg.sample_sizes = {200};
    cfg.replicates = 20;
    cfg.methods = {FitMethod::MoLM, FitMethod::ML};
    cfg.master_seed = 20160203;
    cfg.parallelism = 1;  // serial so per-fit wall times are uncontended
    StudySummary timing = run_study(cfg);
    const CellSummary* tm = find_cell(timing, FitMethod::MoLM, 200);
    const CellSummary* tl = find_cell(timing, FitMethod::ML, 200);
    bool time_ok = tm->time_mean_s < tl->time_mean_s;

    report(4, "estimator ordering", mse_ok && time_ok,
           "mse_order=" + std::string(mse_ok ? "ok" : "violated") +
               " time molm=" + fmt(tm->time_mean_s) + "s ml=" + fmt(tl->time_mean_s) + "s");
}

// ------------------------------------------------------------------- 5

void criterion5() {
    bool pass = true;
    std::string first_failure;
    auto fail = [&](const std::string& what) {
        pass = false;
        if (first_failure.empty()) first_failure = what;
    };

    auto specs = oracles::test_specs();

    // quantile/CDF round trip to 1e-9 across 99 levels x all test specs
    for (const auto& spec : specs) {
        for (int i = 1; i <= 99; ++i) {
            double u = i / 100.0;
            double x = quantile(QuantileLevel(u), spec);
            if (std::fabs(cdf(x, spec) - u) > 1e-9) fail("round trip");
        }
    }

    // pdf normalization 1 +- 1e-6
    for (const auto& spec : specs) {
        double lo = quantile(QuantileLevel(1e-9), spec);
        double hi = quantile(QuantileLevel(1.0 - 1e-9), spec);
        double total =
            integrate([&](double x) { return pdf(x, spec); }, lo, hi,
                      QuadratureSettings{1e-9, 1e-9, 4000}).value;
        if (std::fabs(total - 1.0) > 1e-6) fail("pdf normalization");
    }

    // analytic r' vs central finite differences to 1e-6
    for (const auto& spec : specs) {
        for (int i = 0; i <= 60; ++i) {
            double w = -3.0 + 0.1 * i;
            if (std::fabs(w) < 1e-9) continue;
            auto f = [&](double v) { return transform(v, spec); };
            double fd = oracles::central_difference(f, w);
            double an = transform_derivative(w, spec);
            if (std::fabs(an - fd) > std::max(1e-6, 1e-6 * std::fabs(an))) fail("derivative");
        }
    }

    // population l1 equals the closed-form gh mean to 1e-8 relative
    for (auto [g, h] : std::vector<std::pair<double, double>>{{0.1, 0.1}, {0.5, 0.2}}) {
        FamilySpec spec = FamilySpec::gh(0, 1, g, h);
        double l1 = population_lmoments(spec).l1;
        double mean = raw_moment_gh(1, spec);
        if (std::fabs(l1 - mean) > 1e-8 * std::max(1.0, std::fabs(mean))) fail("l1 vs mean");
    }

    // l3 = 0 +- 1e-10 for symmetric specs; tau4 bound for all
    for (const auto& spec : oracles::symmetric_specs()) {
        if (std::fabs(population_lmoments(spec).l3) > 1e-10) fail("symmetric l3");
    }
    for (const auto& spec : specs) {
        LMomentSet lm = population_lmoments(spec);
        if (lm.tau4 < 0.25 * (5.0 * lm.tau3 * lm.tau3 - 1.0) - 1e-12) fail("tau4 bound");
    }

    // logistic closed forms vs quadrature to 1e-8
    for (auto [g, k] : std::vector<std::pair<double, double>>{{0.3, 0.1}, {-0.4, 0.15}}) {
        auto [lam1, lam2] = logistic_gk_lambda(g, k);
        LMomentSet lm = population_lmoments(FamilySpec::logistic_gk(g, k));
        if (std::fabs(lam1 - lm.l1) > 1e-8 || std::fabs(lam2 - lm.l2) > 1e-8)
            fail("logistic gk lambda");
    }
    for (auto [kl, kr] : std::vector<std::pair<double, double>>{{0.2, 0.2}, {0.3, 0.1}}) {
        auto [lam1, lam2] = logistic_kk_lambda(kl, kr);
        LMomentSet lm = population_lmoments(FamilySpec::logistic_kk(kl, kr));
        if (std::fabs(lam1 - lm.l1) > 1e-8 || std::fabs(lam2 - lm.l2) > 1e-8)
            fail("logistic kk lambda");
    }

    report(5, "numerical kernel properties", pass,
           pass ? "all kernels within tolerance" : ("first failure: " + first_failure));
}

// ------------------------------------------------------------------- 6

void criterion6() {
    bool pass = true;
    const std::vector<double> pool{-2.5, -0.7, 0.1, 0.4, 1.3, 2.9, 4.2, 9.1};
    const int n = static_cast<int>(pool.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<double> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) subset.push_back(pool[i]);
        if (subset.size() < 4) continue;
        LMomentSet lm = sample_lmoments(subset);
        double d1 = std::fabs(lm.l1 - oracles::definitional_lmoment(subset, 1));
        double d2 = std::fabs(lm.l2 - oracles::definitional_lmoment(subset, 2));
        double d3 = std::fabs(lm.l3 - oracles::definitional_lmoment(subset, 3));
        double d4 = std::fabs(lm.l4 - oracles::definitional_lmoment(subset, 4));
        double scale = std::max(1.0, std::fabs(lm.l1));
        if (std::max(std::max(d1, d2), std::max(d3, d4)) > 1e-12 * scale) pass = false;
    }
    LMomentSet hand = sample_lmoments(std::vector<double>{1, 2, 3, 4});
    if (std::fabs(hand.l1 - 2.5) > 1e-12 || std::fabs(hand.l2 - 5.0 / 6.0) > 1e-12) pass = false;
    report(6, "sample L-moment oracle", pass, "exhaustive subsets of 8-value pool");
}

// ------------------------------------------------------------------- 7

void criterion7() {
    // rmse = 0 on data generated exactly at levels (i-0.5)/n
    FamilySpec truth = FamilySpec::gh(0.7, 1.3, 0.4, 0.1);
    const int n = 257;
    std::vector<double> exact;
    for (int i = 1; i <= n; ++i)
        exact.push_back(quantile(QuantileLevel((i - 0.5) / n), truth));
    bool zero_ok = rmse(exact, truth) <= 1e-12;

    // synthetic log-scale claims: left-skewed and mildly heavy-tailed
    FamilySpec claims_shape = FamilySpec::gh(9.5, 1.7, -0.25, 0.04);
    SamplePayload data = sample(100000, 19942008, claims_shape);
    FitResult gk = fit_molm(data.values, FamilyKind::GK);
    FitResult h = fit_molm(data.values, FamilyKind::H);
    double rmse_gk = rmse(data.values, gk.spec);
    double rmse_h = rmse(data.values, h.spec);
    bool order_ok = rmse_gk <= rmse_h;

    report(7, "RMSE/Q-Q self-consistency", zero_ok && order_ok,
           "exact-data rmse<=1e-12: " + std::string(zero_ok ? "yes" : "no") +
               ", gk=" + fmt(rmse_gk) + " <= h=" + fmt(rmse_h));
}

// ------------------------------------------------------------------- 8

void criterion8(const StudySummary& s1_first, const StudySummary& s2_first) {
    StudySummary s1_again = run_reference_study(4);
    StudySummary s2_again = run_heavy_case(4);
    bool pass = summary_csv(s1_first) == summary_csv(s1_again) &&
                summary_json(s1_first) == summary_json(s1_again) &&
                summary_csv(s2_first) == summary_csv(s2_again) &&
                summary_json(s2_first) == summary_json(s2_again);
    report(8, "determinism", pass, "reruns at parallelism 4 are byte-identical");
}

}  // namespace

int main() {
    std::printf("acceptance: reference study (500 x n=100, MoLM) ...\n");
    StudySummary reference = run_reference_study(1);
    std::printf("acceptance: heavy case study (200 x n=1000, MoLM+MoM) ...\n");
    StudySummary heavy = run_heavy_case(1);

    criterion1(reference);
    criterion2(heavy);
    criterion3(heavy);
    criterion4(heavy);
    criterion5();
    criterion6();
    criterion7();
    criterion8(reference, heavy);

    std::printf("%d of 8 criteria passed\n", 8 - failures);
    return failures;
}
