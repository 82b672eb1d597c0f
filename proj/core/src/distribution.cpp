#include "quantfam/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quantfam/quadrature.hpp"
#include "quantfam/rng.hpp"
#include "quantfam/special.hpp"

namespace quantfam {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double base_quantile(double u, const FamilySpec& spec) {
    return family_base(spec.kind) == BaseDistribution::Gaussian ? norm_quantile(u)
                                                                : logistic_quantile(u);
}

double base_cdf(double w, const FamilySpec& spec) {
    return family_base(spec.kind) == BaseDistribution::Gaussian ? norm_cdf(w)
                                                                : logistic_cdf(w);
}

double base_pdf(double w, const FamilySpec& spec) {
    return family_base(spec.kind) == BaseDistribution::Gaussian ? norm_pdf(w)
                                                                : logistic_pdf(w);
}

double base_logpdf(double w, const FamilySpec& spec) {
    return family_base(spec.kind) == BaseDistribution::Gaussian ? norm_logpdf(w)
                                                                : logistic_logpdf(w);
}

}  // namespace

double quantile(QuantileLevel u, const FamilySpec& spec) {
    if (u.u == 0.5) return spec.a;  // r0(Q_W(1/2)) = r0(0) = 0 for every family
    return transform(base_quantile(u.u, spec), spec);
}

double inverse_quantile(double x, const FamilySpec& spec, const InversionSettings& settings) {
    SupportInterval sup = support(spec);
    if (!(x > sup.lower && x < sup.upper)) throw NotInSupport(x);

    const double y = (x - spec.a) / spec.b;  // target for r0
    const double tol = settings.abs_tol * std::max(1.0, std::fabs(x)) / spec.b;

    auto r0 = [&](double w) { return (transform(w, spec) - spec.a) / spec.b; };

    // r0 is increasing with r0(0) = 0; bracket on the side of y.
    double w_lo = 0.0, w_hi = 0.0;
    if (y == 0.0) return 0.0;
    double step = 1.0;
    if (y > 0.0) {
        w_hi = step;
        int guard = 0;
        while (r0(w_hi) < y) {
            w_lo = w_hi;
            w_hi *= settings.bracket_expansion;
            if (++guard > 4000) throw NoConvergence(guard);
        }
    } else {
        w_lo = -step;
        int guard = 0;
        while (r0(w_lo) > y) {
            w_hi = w_lo;
            w_lo *= settings.bracket_expansion;
            if (++guard > 4000) throw NoConvergence(guard);
        }
    }

    double w = 0.5 * (w_lo + w_hi);
    for (int iter = 0; iter < settings.max_iter; ++iter) {
        double f = r0(w) - y;
        if (std::fabs(f) <= tol) return w;
        if (f > 0.0)
            w_hi = w;
        else
            w_lo = w;
        double d = transform_derivative(w, spec) / spec.b;
        double w_next = (std::isfinite(d) && d > 0.0) ? w - f / d : w;
        if (!(w_next > w_lo && w_next < w_hi) || !std::isfinite(w_next)) {
            w_next = 0.5 * (w_lo + w_hi);  // bisection safeguard
        }
        if (w_next == w) w_next = 0.5 * (w_lo + w_hi);
        w = w_next;
    }
    if (std::fabs(r0(w) - y) <= tol) return w;
    throw NoConvergence(settings.max_iter);
}

double cdf(double x, const FamilySpec& spec, const InversionSettings& settings) {
    SupportInterval sup = support(spec);
    if (x <= sup.lower) return 0.0;
    if (x >= sup.upper) return 1.0;
    return base_cdf(inverse_quantile(x, spec, settings), spec);
}

double pdf(double x, const FamilySpec& spec, const InversionSettings& settings) {
    SupportInterval sup = support(spec);
    if (x <= sup.lower || x >= sup.upper) return 0.0;
    double w = inverse_quantile(x, spec, settings);
    return base_pdf(w, spec) / transform_derivative(w, spec);
}

SamplePayload sample(int n, std::uint64_t seed, const FamilySpec& spec) {
    if (n < 1) throw InvalidParameter("n", n, "n >= 1");
    SamplePayload payload;
    payload.seed = seed;
    payload.spec = spec;
    payload.values.reserve(static_cast<std::size_t>(n));
    UniformStream stream(seed);
    for (int i = 0; i < n; ++i) {
        double u = stream.next();
        payload.values.push_back(transform(base_quantile(u, spec), spec));
    }
    return payload;
}

namespace {

double binomial_coeff(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// Unit raw moment E[r0(W)^k] for the GH family (a = 0, b = 1).
double unit_raw_moment_gh(int k, double g, double h) {
    if (k == 0) return 1.0;
    if (!(h < 1.0 / k))
        throw MomentDoesNotExist("moment of order " + std::to_string(k) +
                                 " requires h < 1/" + std::to_string(k));
    if (std::fabs(g) < 1e-10) {
        if (k % 2 == 1) return 0.0;
        double dfact = 1.0;  // (k-1)!!
        for (int i = k - 1; i >= 1; i -= 2) dfact *= i;
        return dfact * std::pow(1.0 - k * h, -(k + 1) / 2.0);
    }
    double sum = 0.0;
    for (int i = 0; i <= k; ++i) {
        double sign = (i % 2 == 0) ? 1.0 : -1.0;
        double e = (k - i) * g;
        sum += sign * binomial_coeff(k, i) * std::exp(e * e / (2.0 * (1.0 - k * h)));
    }
    return sum / (std::pow(g, k) * std::sqrt(1.0 - k * h));
}

void require_gh_like(const FamilySpec& spec, const char* op) {
    if (spec.kind != FamilyKind::GH && spec.kind != FamilyKind::H && spec.kind != FamilyKind::G)
        throw UnsupportedFamily(std::string(op) + " requires the gh, h or g family");
}

// (g, h) shape pair of a GH/H/G spec in the unified parametrization.
std::pair<double, double> gh_shape(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::G: return {*spec.g, 0.0};
        case FamilyKind::H: return {0.0, *spec.h};
        default: return {*spec.g, *spec.h};
    }
}

}  // namespace

double raw_moment_gh(int k, const FamilySpec& spec) {
    require_gh_like(spec, "raw_moment_gh");
    if (k < 1 || k > 8) throw InvalidParameter("k", k, "1 <= k <= 8");
    auto [g, h] = gh_shape(spec);
    // E[(a + b T)^k] via the binomial expansion over unit moments.
    double sum = 0.0;
    for (int i = 0; i <= k; ++i) {
        sum += binomial_coeff(k, i) * std::pow(spec.a, k - i) * std::pow(spec.b, i) *
               unit_raw_moment_gh(i, g, h);
    }
    return sum;
}

MomentSummary central_moments_and_shape(const FamilySpec& spec) {
    require_gh_like(spec, "central_moments_and_shape");
    auto [g, h] = gh_shape(spec);
    if (!(h < 0.25))
        throw MomentDoesNotExist("shape moments require h < 1/4");
    double raw[5];
    raw[0] = 1.0;
    for (int k = 1; k <= 4; ++k) raw[k] = raw_moment_gh(k, spec);
    double mu = raw[1];
    double central[5];
    central[0] = 1.0;
    central[1] = 0.0;
    for (int k = 2; k <= 4; ++k) {
        double acc = 0.0;
        for (int i = 0; i <= k; ++i) {
            double sign = ((k - i) % 2 == 0) ? 1.0 : -1.0;
            acc += binomial_coeff(k, i) * sign * raw[i] * std::pow(mu, k - i);
        }
        central[k] = acc;
    }
    MomentSummary s;
    s.m1 = mu;
    s.m2 = central[2];
    s.m3 = central[3];
    s.m4 = central[4];
    s.skewness = central[3] / std::pow(central[2], 1.5);
    s.kurtosis = central[4] / (central[2] * central[2]);
    return s;
}

double moment_numeric(int k, const FamilySpec& spec) {
    if (k < 1) throw InvalidParameter("k", k, "k >= 1");
    // Analytic divergence bounds where the tail behaviour is known exactly.
    if (spec.kind == FamilyKind::GH || spec.kind == FamilyKind::H ||
        spec.kind == FamilyKind::GeneralizedGH) {
        if (spec.g_poly.empty() && spec.h_poly.empty() && k * *spec.h >= 1.0)
            throw Divergent("moment integrand grows: k*h >= 1");
    }
    if (spec.kind == FamilyKind::DoubleHH && k * std::max(*spec.h_l, *spec.h_r) >= 1.0)
        throw Divergent("moment integrand grows: k*h >= 1");
    if (spec.kind == FamilyKind::LogisticGammaKappa &&
        k * (std::fabs(*spec.gamma_l) + *spec.kappa_l2) >= 1.0)
        throw Divergent("moment integrand grows in the logistic tails");
    if (spec.kind == FamilyKind::LogisticKappaKappa &&
        k * std::max(*spec.kappa_left, *spec.kappa_right) >= 1.0)
        throw Divergent("moment integrand grows in the logistic tails");

    auto integrand = [&](double w) {
        SignedLog r = transform_unit_log(w, spec);
        double lx, sx;
        if (r.log_abs < 690.0) {
            double x = spec.a + spec.b * (r.sign * std::exp(r.log_abs));
            if (x == 0.0) return 0.0;
            lx = std::log(std::fabs(x));
            sx = (x > 0.0) ? 1.0 : -1.0;
        } else {
            // b r0 dwarfs a; work with logs to dodge overflow
            lx = std::log(spec.b) + r.log_abs;
            sx = r.sign;
        }
        double sign_k = (k % 2 == 0) ? 1.0 : sx;
        return sign_k * std::exp(k * lx + base_logpdf(w, spec));
    };
    return integrate_real_line(integrand, 8.0, QuadratureSettings{1e-12, 1e-12, 4000});
}

double median(const FamilySpec& spec) { return spec.a; }

double mode(const FamilySpec& spec) {
    // maximize log f_W(w) - log r'(w) by golden section, widening the
    // interval when the optimum lands on a boundary
    auto neg_obj = [&](double w) {
        return -(base_logpdf(w, spec) - std::log(transform_derivative(w, spec)));
    };
    double lo = -5.0, hi = 5.0;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int widen = 0; widen < 8; ++widen) {
        double x1 = hi - gr * (hi - lo);
        double x2 = lo + gr * (hi - lo);
        double f1 = neg_obj(x1), f2 = neg_obj(x2);
        double a = lo, b = hi;
        while (b - a > 1e-10) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = neg_obj(x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = neg_obj(x2);
            }
        }
        double w_star = 0.5 * (a + b);
        if (w_star - lo > 1e-6 && hi - w_star > 1e-6) return transform(w_star, spec);
        lo *= 2.0;
        hi *= 2.0;
    }
    throw NoConvergence(8);
}

double spread_functional(double alpha, const FamilySpec& spec) {
    if (!(alpha > 0.5 && alpha < 1.0)) throw InvalidParameter("alpha", alpha, "0.5 < alpha < 1");
    return quantile(QuantileLevel(alpha), spec) - quantile(QuantileLevel(1.0 - alpha), spec);
}

double skewness_functional(double alpha, const FamilySpec& spec) {
    if (!(alpha > 0.5 && alpha < 1.0)) throw InvalidParameter("alpha", alpha, "0.5 < alpha < 1");
    double qa = quantile(QuantileLevel(alpha), spec);
    double qb = quantile(QuantileLevel(1.0 - alpha), spec);
    double qm = spec.a;
    return (qa + qb - 2.0 * qm) / (qa - qb);
}

std::optional<double> tail_index(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::GH:
        case FamilyKind::GeneralizedGH:
        case FamilyKind::H: {
            double h = *spec.h;
            if (h > 0.0) return 1.0 / h;
            return std::nullopt;  // subexponential, not regularly varying
        }
        default:
            throw UnsupportedFamily(
                "tail index is defined for the gh, generalized gh and h families only");
    }
}

double slow_variation(double x, const FamilySpec& spec) {
    if (spec.kind != FamilyKind::GH)
        throw UnsupportedFamily("slow variation factor is available for the gh family");
    double g = *spec.g, h = *spec.h;
    if (!(g > 0.0 && h > 0.0))
        throw UnsupportedFamily("slow variation factor requires g > 0 and h > 0");
    double root = std::sqrt(g * g + 2.0 * h * std::log(g * x));
    double num = std::pow(std::expm1(g / h * root - g * g / h), 1.0 / h);
    return h / (kSqrt2Pi * std::pow(g, 1.0 / h)) * num / (root - g);
}

}  // namespace quantfam
