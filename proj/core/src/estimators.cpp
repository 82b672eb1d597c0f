#include "quantfam/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "quantfam/distribution.hpp"
#include "quantfam/lmoments.hpp"
#include "quantfam/special.hpp"

namespace quantfam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- family parameterizations shared by the estimators ----------------

struct ShapeParam {
    const char* name;
    double lo, hi;
};

std::vector<ShapeParam> shape_params(FamilyKind family) {
    switch (family) {
        case FamilyKind::GH:
            return {{"g", -5.0, 5.0}, {"h", 0.0, 0.999}};
        case FamilyKind::G:
            return {{"g", -5.0, 5.0}};
        case FamilyKind::H:
            return {{"h", 0.0, 0.999}};
        case FamilyKind::GK:
            return {{"g", -5.0, 5.0}, {"k", -0.499, 5.0}};
        case FamilyKind::DoubleHH:
            return {{"h_l", 0.0, 0.999}, {"h_r", 0.0, 0.999}};
        default:
            throw UnsupportedFamily(std::string("no shape parameterization for family '") +
                                    family_name(family) + "'");
    }
}

FamilySpec make_spec(FamilyKind family, double a, double b, std::span<const double> shape) {
    switch (family) {
        case FamilyKind::GH: return FamilySpec::gh(a, b, shape[0], shape[1]);
        case FamilyKind::G: return FamilySpec::g_family(a, b, shape[0]);
        case FamilyKind::H: return FamilySpec::h_family(a, b, shape[0]);
        case FamilyKind::GK: return FamilySpec::gk(a, b, shape[0], shape[1]);
        case FamilyKind::DoubleHH: return FamilySpec::double_hh(a, b, shape[0], shape[1]);
        default:
            throw UnsupportedFamily("unsupported family in make_spec");
    }
}

std::vector<double> spec_shape(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::GH: return {*spec.g, *spec.h};
        case FamilyKind::G: return {*spec.g};
        case FamilyKind::H: return {*spec.h};
        case FamilyKind::GK: return {*spec.g, *spec.k};
        case FamilyKind::DoubleHH: return {*spec.h_l, *spec.h_r};
        default:
            throw UnsupportedFamily("unsupported family in spec_shape");
    }
}

// Whether the family pins tau3 to zero by symmetry, so only tau4 is matched.
bool matches_tau4_only(FamilyKind family) { return family == FamilyKind::H; }
bool matches_tau3_only(FamilyKind family) { return family == FamilyKind::G; }

std::vector<double> sorted_copy(std::span<const double> data) {
    std::vector<double> s(data.begin(), data.end());
    std::sort(s.begin(), s.end());
    return s;
}

void require_n(std::span<const double> data, std::size_t minimum) {
    if (data.size() < minimum) throw TooFewObservations(data.size(), minimum);
}

}  // namespace

const char* method_name(FitMethod m) {
    switch (m) {
        case FitMethod::MoM: return "mom";
        case FitMethod::ML: return "ml";
        case FitMethod::QM: return "qm";
        case FitMethod::MoLM: return "molm";
        case FitMethod::LambdaMatch: return "lmatch";
    }
    throw Error("unreachable method");
}

FitMethod method_from_name(const std::string& name) {
    if (name == "mom") return FitMethod::MoM;
    if (name == "ml") return FitMethod::ML;
    if (name == "qm") return FitMethod::QM;
    if (name == "molm") return FitMethod::MoLM;
    if (name == "lmatch") return FitMethod::LambdaMatch;
    throw Error("unknown method '" + name + "'");
}

double sample_quantile_sorted(std::span<const double> sorted, double u) {
    const std::size_t n = sorted.size();
    double r = u * static_cast<double>(n);
    if (r <= 1.0) return sorted.front();
    if (r >= static_cast<double>(n)) return sorted.back();
    double fl = std::floor(r);
    std::size_t i = static_cast<std::size_t>(fl);  // 1-based lower rank
    double frac = r - fl;
    return sorted[i - 1] * (1.0 - frac) + sorted[i] * frac;
}

FitResult fit_molm(std::span<const double> data, FamilyKind family,
                   const OptimizerSettings& settings) {
    require_n(data, 20);
    auto t0 = Clock::now();

    LMomentSet sm = sample_lmoments(data);
    if (!sm.ratios_defined || !(sm.l2 > 0.0))
        throw DegenerateSample("sample L-scale is zero");

    FitResult fit;
    fit.method = FitMethod::MoLM;
    if (data.size() < 50) fit.diagnostics["small_sample_warning"] = 1.0;

    double tau4_floor = 0.25 * (5.0 * sm.tau3 * sm.tau3 - 1.0);
    if (sm.tau4 < tau4_floor) fit.diagnostics["infeasible_ratios"] = 1.0;

    auto params = shape_params(family);
    std::vector<double> lo, hi, x0;
    for (const auto& p : params) {
        lo.push_back(p.lo);
        hi.push_back(p.hi);
        x0.push_back(0.5 * (p.lo + p.hi));
    }
    // neutral starts near the base distribution
    if (family == FamilyKind::GH || family == FamilyKind::G) x0[0] = 0.0;
    if (family == FamilyKind::GH) x0[1] = 0.1;
    if (family == FamilyKind::H) x0[0] = 0.1;
    if (family == FamilyKind::GK) {
        x0[0] = 0.0;
        x0[1] = 0.1;
    }
    if (family == FamilyKind::DoubleHH) x0 = {0.1, 0.1};

    auto objective = [&](const std::vector<double>& shape) {
        FamilySpec unit = make_spec(family, 0.0, 1.0, shape);
        LMomentSet pop;
        try {
            pop = population_lmoments(unit);
        } catch (const Error&) {
            return kInf;  // corner of the box that cannot be integrated
        }
        if (!pop.ratios_defined) return kInf;
        if (matches_tau3_only(family)) {
            double d = pop.tau3 - sm.tau3;
            return d * d;
        }
        if (matches_tau4_only(family)) {
            double d = pop.tau4 - sm.tau4;
            return d * d;
        }
        double d3 = pop.tau3 - sm.tau3;
        double d4 = pop.tau4 - sm.tau4;
        return d3 * d3 + d4 * d4;
    };

    MinimizeResult opt = minimize_bounded(objective, x0, lo, hi, settings);

    FamilySpec unit = make_spec(family, 0.0, 1.0, opt.x);
    LMomentSet pop = population_lmoments(unit);
    double b = sm.l2 / pop.l2;
    double a = sm.l1 - b * pop.l1;
    fit.spec = make_spec(family, a, b, opt.x);
    validate(fit.spec);
    fit.objective = opt.f;
    fit.n_evals = opt.n_evals;
    fit.converged = opt.converged;
    fit.elapsed_seconds = seconds_since(t0);
    return fit;
}

FitResult fit_mom(std::span<const double> data, const OptimizerSettings& settings) {
    require_n(data, 20);
    auto t0 = Clock::now();

    const double n = static_cast<double>(data.size());
    double mean = 0.0;
    for (double x : data) mean += x;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : data) {
        double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (!(m2 > 0.0)) throw DegenerateSample("sample variance is zero");
    double skew_hat = m3 / std::pow(m2, 1.5);
    double kurt_hat = m4 / (m2 * m2);

    auto objective = [&](const std::vector<double>& shape) {
        MomentSummary ms;
        try {
            ms = central_moments_and_shape(FamilySpec::gh(0.0, 1.0, shape[0], shape[1]));
        } catch (const MomentDoesNotExist&) {
            return kInf;
        }
        double d3 = ms.skewness - skew_hat;
        double d4 = ms.kurtosis - kurt_hat;
        return d3 * d3 + d4 * d4;
    };

    MinimizeResult opt =
        minimize_bounded(objective, {0.0, 0.05}, {-5.0, 0.0}, {5.0, 0.2499}, settings);

    MomentSummary ms = central_moments_and_shape(FamilySpec::gh(0.0, 1.0, opt.x[0], opt.x[1]));
    double b = std::sqrt(m2 / ms.m2);
    double a = mean - b * ms.m1;

    FitResult fit;
    fit.method = FitMethod::MoM;
    fit.spec = FamilySpec::gh(a, b, opt.x[0], opt.x[1]);
    validate(fit.spec);
    fit.objective = opt.f;
    fit.n_evals = opt.n_evals;
    fit.converged = opt.converged;
    fit.elapsed_seconds = seconds_since(t0);
    return fit;
}

namespace {

// Total log-likelihood of sorted data under spec, using warm-started Newton
// inversions that walk the order statistics left to right. Returns -inf
// when an observation falls outside the support or an inversion fails.
double log_likelihood_sorted(const std::vector<double>& sorted, const FamilySpec& spec) {
    SupportInterval sup = support(spec);
    if (sorted.front() <= sup.lower || sorted.back() >= sup.upper) return -kInf;

    const bool gaussian = family_base(spec.kind) == BaseDistribution::Gaussian;
    double loglik = 0.0;
    double w = -8.0;
    for (double x : sorted) {
        const double y = (x - spec.a) / spec.b;
        bool ok = false;
        for (int iter = 0; iter < 60; ++iter) {
            double f = (transform(w, spec) - spec.a) / spec.b - y;
            double d = transform_derivative(w, spec) / spec.b;
            if (!(d > 0.0) || !std::isfinite(f)) break;
            double step = f / d;
            w -= step;
            if (std::fabs(step) < 1e-12 * (1.0 + std::fabs(w))) {
                ok = true;
                break;
            }
        }
        if (!ok || !std::isfinite(w)) {
            // fall back to the bracketed inversion
            try {
                w = inverse_quantile(x, spec);
            } catch (const Error&) {
                return -kInf;
            }
        }
        double logf = gaussian ? norm_logpdf(w) : logistic_logpdf(w);
        double deriv = transform_derivative(w, spec);
        if (!(deriv > 0.0)) return -kInf;
        loglik += logf - std::log(deriv);
    }
    return loglik;
}

struct FullParam {
    std::vector<double> lo, hi, x0;
    FamilyKind family;

    FamilySpec to_spec(const std::vector<double>& x) const {
        std::vector<double> shape(x.begin() + 2, x.end());
        return make_spec(family, x[0], std::exp(x[1]), shape);
    }
};

FullParam full_parameterization(FamilyKind family, const FamilySpec& warm, double h_cap) {
    FullParam p;
    p.family = family;
    double b0 = warm.b;
    p.x0 = {warm.a, std::log(b0)};
    p.lo = {warm.a - 20.0 * b0, std::log(b0) - 4.0};
    p.hi = {warm.a + 20.0 * b0, std::log(b0) + 4.0};
    auto shapes = shape_params(family);
    auto warm_shape = spec_shape(warm);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        double hi_bound = shapes[i].hi;
        if (std::string(shapes[i].name).front() == 'h') hi_bound = h_cap;
        p.lo.push_back(shapes[i].lo);
        p.hi.push_back(hi_bound);
        p.x0.push_back(std::clamp(warm_shape[i], shapes[i].lo, hi_bound));
    }
    return p;
}

}  // namespace

FitResult fit_ml(std::span<const double> data, FamilyKind family,
                 const OptimizerSettings& settings) {
    require_n(data, 10);
    auto t0 = Clock::now();

    FitResult warm;
    try {
        warm = fit_molm(data, family, settings);
    } catch (const TooFewObservations&) {
        // ML admits n >= 10; start neutrally when MoLM cannot run
        auto shapes = shape_params(family);
        std::vector<double> shape(shapes.size(), 0.05);
        warm.spec = make_spec(family, 0.0, 1.0, shape);
    }

    std::vector<double> sorted = sorted_copy(data);
    FullParam p = full_parameterization(family, warm.spec, 3.0);

    int n_outside_rejections = 0;
    auto objective = [&](const std::vector<double>& x) {
        FamilySpec spec = p.to_spec(x);
        double ll = log_likelihood_sorted(sorted, spec);
        if (ll == -kInf) {
            ++n_outside_rejections;
            return kInf;
        }
        return -ll;
    };

    MinimizeResult opt;
    try {
        opt = minimize_bounded(objective, p.x0, p.lo, p.hi, settings);
    } catch (const NonFiniteObjective&) {
        // warm start without full support; retry from a heavy-tailed start
        auto shapes = shape_params(family);
        for (std::size_t i = 0; i < shapes.size(); ++i)
            if (std::string(shapes[i].name).front() == 'h') p.x0[2 + i] = 0.2;
        try {
            opt = minimize_bounded(objective, p.x0, p.lo, p.hi, settings);
        } catch (const NonFiniteObjective&) {
            throw AllPointsOutsideSupport(
                "no candidate spec covers every observation");
        }
    }

    FitResult fit;
    fit.method = FitMethod::ML;
    fit.spec = p.to_spec(opt.x);
    validate(fit.spec);
    fit.objective = -opt.f;  // total log-likelihood
    fit.n_evals = opt.n_evals;
    fit.converged = opt.converged;
    if (n_outside_rejections > 0)
        fit.diagnostics["support_rejections"] = static_cast<double>(n_outside_rejections);
    fit.elapsed_seconds = seconds_since(t0);
    if (!fit.converged && opt.n_evals >= settings.max_evals)
        fit.diagnostics["budget_exhausted"] = 1.0;
    return fit;
}

FitResult fit_qm(std::span<const double> data, FamilyKind family,
                 const OptimizerSettings& settings) {
    require_n(data, 21);
    auto t0 = Clock::now();

    FitResult warm = fit_molm(data, family, settings);
    std::vector<double> sorted = sorted_copy(data);
    const std::size_t n = sorted.size();
    const bool gaussian = family_base(family) == BaseDistribution::Gaussian;
    auto base_q = [&](double u) { return gaussian ? norm_quantile(u) : logistic_quantile(u); };

    // plotting positions for the full-sample SSE
    std::vector<double> z_full(n);
    for (std::size_t i = 0; i < n; ++i) {
        double pi = (static_cast<double>(i + 1) - 1.0 / 3.0) / (static_cast<double>(n) + 1.0 / 3.0);
        z_full[i] = base_q(pi);
    }

    FullParam p = full_parameterization(family, warm.spec, 3.0);

    FitResult best_fit;
    double best_aic = kInf;
    int total_evals = 0;
    nlohmann::json aic_table;

    for (int q = 4; q <= 20; ++q) {
        std::vector<double> zq(q), target(q);
        for (int i = 1; i <= q; ++i) {
            double u = (i - 1.0 / 3.0) / (q + 1.0 / 3.0);
            zq[i - 1] = base_q(u);
            target[i - 1] = sample_quantile_sorted(sorted, u);
        }
        auto objective = [&](const std::vector<double>& x) {
            FamilySpec spec = p.to_spec(x);
            double sse = 0.0;
            for (int i = 0; i < q; ++i) {
                double d = transform(zq[i], spec) - target[i];
                sse += d * d;
            }
            return sse;
        };
        MinimizeResult opt = minimize_bounded(objective, p.x0, p.lo, p.hi, settings);
        total_evals += opt.n_evals;

        FamilySpec spec = p.to_spec(opt.x);
        double sse_full = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = transform(z_full[i], spec) - sorted[i];
            sse_full += d * d;
        }
        double aic = static_cast<double>(n) * std::log(sse_full / static_cast<double>(n)) +
                     2.0 * (q + 1);
        aic_table["q" + std::to_string(q)] = aic;
        if (aic < best_aic) {
            best_aic = aic;
            best_fit.spec = spec;
            best_fit.objective = opt.f;
            best_fit.converged = opt.converged;
            best_fit.diagnostics["q"] = q;
            best_fit.diagnostics["aic"] = aic;
            best_fit.diagnostics["sse_full"] = sse_full;
        }
    }

    best_fit.method = FitMethod::QM;
    validate(best_fit.spec);
    best_fit.n_evals = total_evals;
    for (auto it = aic_table.begin(); it != aic_table.end(); ++it)
        best_fit.diagnostics["aic_" + it.key()] = it.value().get<double>();
    best_fit.elapsed_seconds = seconds_since(t0);
    return best_fit;
}

namespace {

struct LambdaSystem {
    FamilyKind family;

    std::pair<double, double> eval(double t1, double t2) const {
        if (family == FamilyKind::LogisticGammaKappa) return logistic_gk_lambda(t1, t2);
        return logistic_kk_lambda(t1, t2);
    }

    bool feasible(double t1, double t2) const {
        if (family == FamilyKind::LogisticGammaKappa) {
            return t1 != 0.0 && t2 >= 0.0 && t1 + t2 < 1.0 && t2 < 1.0 && 1.0 + t1 > t2;
        }
        return t1 >= 0.0 && t2 >= 0.0 && t1 < 1.0 && t2 < 1.0;
    }
};

}  // namespace

FitResult fit_logistic_lmatch(std::span<const double> data, FamilyKind family) {
    if (family != FamilyKind::LogisticGammaKappa && family != FamilyKind::LogisticKappaKappa)
        throw UnsupportedFamily("lambda matching applies to the logistic families");
    require_n(data, 20);
    auto t0 = Clock::now();

    LMomentSet sm = sample_lmoments(data);
    if (!(sm.l2 > 0.0)) throw DegenerateSample("sample L-scale is not positive");

    LambdaSystem sys{family};
    const double scale = std::max({1.0, std::fabs(sm.l1), sm.l2});

    std::vector<std::pair<double, double>> starts;
    if (family == FamilyKind::LogisticGammaKappa) {
        for (double gam : {-0.8, -0.5, -0.2, -0.05, 0.05, 0.2, 0.5, 0.8})
            for (double kap : {0.02, 0.15, 0.4})
                if (sys.feasible(gam, kap)) starts.emplace_back(gam, kap);
    } else {
        for (double kl : {0.02, 0.2, 0.5, 0.8})
            for (double kr : {0.02, 0.2, 0.5, 0.8}) starts.emplace_back(kl, kr);
    }

    FitResult fit;
    fit.method = FitMethod::LambdaMatch;
    bool found = false;
    double best_norm = kInf;
    std::pair<double, double> best_theta{0.0, 0.0};
    int evals = 0;

    for (auto [t1, t2] : starts) {
        double x1 = t1, x2 = t2;
        bool ok = false;
        for (int iter = 0; iter < 80; ++iter) {
            auto [lam1, lam2] = sys.eval(x1, x2);
            ++evals;
            double r1 = lam1 - sm.l1;
            double r2 = lam2 - sm.l2;
            double rn = std::hypot(r1, r2);
            if (rn <= 1e-10 * scale) {
                ok = true;
                break;
            }
            // finite-difference Jacobian
            const double eps = 1e-7;
            auto step_of = [&](double a1, double a2) { return sys.eval(a1, a2); };
            double d1 = sys.feasible(x1 + eps, x2) ? eps : -eps;
            double d2 = sys.feasible(x1, x2 + eps) ? eps : -eps;
            auto [f1a, f2a] = step_of(x1 + d1, x2);
            auto [f1b, f2b] = step_of(x1, x2 + d2);
            evals += 2;
            double j11 = (f1a - lam1) / d1, j12 = (f1b - lam1) / d2;
            double j21 = (f2a - lam2) / d1, j22 = (f2b - lam2) / d2;
            double det = j11 * j22 - j12 * j21;
            if (!std::isfinite(det) || std::fabs(det) < 1e-14) break;
            double s1 = (j22 * r1 - j12 * r2) / det;
            double s2 = (-j21 * r1 + j11 * r2) / det;
            // damping: halve until feasible and non-increasing
            double lambda = 1.0;
            bool stepped = false;
            for (int half = 0; half < 30; ++half) {
                double n1 = x1 - lambda * s1;
                double n2 = x2 - lambda * s2;
                if (sys.feasible(n1, n2)) {
                    auto [m1, m2] = sys.eval(n1, n2);
                    ++evals;
                    if (std::hypot(m1 - sm.l1, m2 - sm.l2) < rn) {
                        x1 = n1;
                        x2 = n2;
                        stepped = true;
                        break;
                    }
                }
                lambda *= 0.5;
            }
            if (!stepped) break;
        }
        if (ok) {
            auto [lam1, lam2] = sys.eval(x1, x2);
            double rn = std::hypot(lam1 - sm.l1, lam2 - sm.l2);
            if (rn < best_norm) {
                best_norm = rn;
                best_theta = {x1, x2};
                found = true;
            }
        }
    }

    if (!found) throw NoRoot("no feasible start converged to the L-moment system root");

    fit.spec = (family == FamilyKind::LogisticGammaKappa)
                   ? FamilySpec::logistic_gk(best_theta.first, best_theta.second)
                   : FamilySpec::logistic_kk(best_theta.first, best_theta.second);
    validate(fit.spec);
    fit.objective = best_norm * best_norm;
    fit.n_evals = evals;
    fit.converged = true;
    fit.elapsed_seconds = seconds_since(t0);
    return fit;
}

std::string to_json(const FitResult& fit) {
    nlohmann::json j;
    j["method"] = method_name(fit.method);
    j["spec"] = nlohmann::json::parse(to_json(fit.spec));
    j["objective"] = fit.objective;
    j["n_evals"] = fit.n_evals;
    j["elapsed_seconds"] = fit.elapsed_seconds;
    j["converged"] = fit.converged;
    nlohmann::json diag = nlohmann::json::object();
    for (const auto& [k, v] : fit.diagnostics) diag[k] = v;
    j["diagnostics"] = diag;
    return j.dump();
}

}  // namespace quantfam
