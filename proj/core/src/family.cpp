#include "quantfam/family.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "quantfam/special.hpp"

namespace quantfam {

namespace {

constexpr double kGZeroSwitch = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

double require(const std::optional<double>& field, const char* name) {
    if (!field) throw InvalidParameter(name, std::numeric_limits<double>::quiet_NaN(),
                                       std::string("field '") + name + "' must be set");
    return *field;
}

void forbid(const std::optional<double>& field, const char* name, const char* kind) {
    if (field)
        throw InvalidParameter(name, *field,
                               std::string("field not applicable to family '") + kind + "'");
}

double poly_eval(const std::vector<double>& coeffs, double fallback, double w) {
    if (coeffs.empty()) return fallback;
    double v = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) v = v * w + coeffs[j];
    return v;
}

double poly_derivative(const std::vector<double>& coeffs, double w) {
    if (coeffs.size() < 2) return 0.0;
    double v = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 1;) v = v * w + coeffs[j] * static_cast<double>(j);
    return v;
}

// (e^{gw}-1)/g with the exact w limit at tiny g.
double g_factor(double g, double w) {
    if (std::fabs(g) < kGZeroSwitch) return w;
    return std::expm1(g * w) / g;
}

// generalized-g factor G*(w) = 1 + c tanh(gw/2)
double gstar(double c, double g, double w) { return 1.0 + c * std::tanh(0.5 * g * w); }

double gstar_derivative(double c, double g, double w) {
    double t = std::cosh(0.5 * g * w);
    return 0.5 * c * g / (t * t);
}

double hjk_T(double w, double alpha, double beta, double gamma) {
    double inner = (std::pow(w * w + gamma, alpha) - std::pow(gamma, alpha)) / beta;
    return std::pow(1.0 + inner, beta);
}

double hjk_T_derivative(double w, double alpha, double beta, double gamma) {
    double base = 1.0 + (std::pow(w * w + gamma, alpha) - std::pow(gamma, alpha)) / beta;
    return std::pow(base, beta - 1.0) * 2.0 * alpha * w * std::pow(w * w + gamma, alpha - 1.0);
}

}  // namespace

const char* family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::G: return "g";
        case FamilyKind::H: return "h";
        case FamilyKind::GH: return "gh";
        case FamilyKind::GeneralizedGH: return "gengh";
        case FamilyKind::GK: return "gk";
        case FamilyKind::GJ: return "gj";
        case FamilyKind::DoubleHH: return "hh";
        case FamilyKind::SuperHJK: return "hjk";
        case FamilyKind::LogisticGammaKappa: return "loggk";
        case FamilyKind::LogisticKappaKappa: return "logkk";
    }
    throw Error("unreachable family kind");
}

FamilyKind family_from_name(const std::string& name) {
    if (name == "g") return FamilyKind::G;
    if (name == "h") return FamilyKind::H;
    if (name == "gh") return FamilyKind::GH;
    if (name == "gengh") return FamilyKind::GeneralizedGH;
    if (name == "gk") return FamilyKind::GK;
    if (name == "gj") return FamilyKind::GJ;
    if (name == "hh") return FamilyKind::DoubleHH;
    if (name == "hjk") return FamilyKind::SuperHJK;
    if (name == "loggk") return FamilyKind::LogisticGammaKappa;
    if (name == "logkk") return FamilyKind::LogisticKappaKappa;
    throw Error("unknown family name '" + name + "'");
}

BaseDistribution family_base(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::LogisticGammaKappa:
        case FamilyKind::LogisticKappaKappa:
            return BaseDistribution::Logistic;
        default:
            return BaseDistribution::Gaussian;
    }
}

FamilySpec FamilySpec::gh(double a, double b, double g, double h) {
    FamilySpec s;
    s.kind = FamilyKind::GH;
    s.a = a;
    s.b = b;
    s.g = g;
    s.h = h;
    return s;
}

FamilySpec FamilySpec::g_family(double a, double b, double g) {
    FamilySpec s;
    s.kind = FamilyKind::G;
    s.a = a;
    s.b = b;
    s.g = g;
    return s;
}

FamilySpec FamilySpec::h_family(double a, double b, double h) {
    FamilySpec s;
    s.kind = FamilyKind::H;
    s.a = a;
    s.b = b;
    s.h = h;
    return s;
}

FamilySpec FamilySpec::gk(double a, double b, double g, double k, double c) {
    FamilySpec s;
    s.kind = FamilyKind::GK;
    s.a = a;
    s.b = b;
    s.g = g;
    s.k = k;
    s.c = c;
    return s;
}

FamilySpec FamilySpec::gj(double a, double b, double g, double c) {
    FamilySpec s;
    s.kind = FamilyKind::GJ;
    s.a = a;
    s.b = b;
    s.g = g;
    s.c = c;
    return s;
}

FamilySpec FamilySpec::generalized_gh(double a, double b, double g, double h, double c) {
    FamilySpec s;
    s.kind = FamilyKind::GeneralizedGH;
    s.a = a;
    s.b = b;
    s.g = g;
    s.h = h;
    s.c = c;
    return s;
}

FamilySpec FamilySpec::double_hh(double a, double b, double h_left, double h_right) {
    FamilySpec s;
    s.kind = FamilyKind::DoubleHH;
    s.a = a;
    s.b = b;
    s.h_l = h_left;
    s.h_r = h_right;
    return s;
}

FamilySpec FamilySpec::super_hjk(double a, double b, double alpha, double beta, double gamma) {
    FamilySpec s;
    s.kind = FamilyKind::SuperHJK;
    s.a = a;
    s.b = b;
    s.alpha_s = alpha;
    s.beta_s = beta;
    s.gamma_s = gamma;
    return s;
}

FamilySpec FamilySpec::logistic_gk(double gamma, double kappa, double a, double b) {
    FamilySpec s;
    s.kind = FamilyKind::LogisticGammaKappa;
    s.a = a;
    s.b = b;
    s.gamma_l = gamma;
    s.kappa_l2 = kappa;
    return s;
}

FamilySpec FamilySpec::logistic_kk(double kappa_left, double kappa_right, double a, double b) {
    FamilySpec s;
    s.kind = FamilyKind::LogisticKappaKappa;
    s.a = a;
    s.b = b;
    s.kappa_left = kappa_left;
    s.kappa_right = kappa_right;
    return s;
}

const FamilySpec& validate(const FamilySpec& spec) {
    if (!std::isfinite(spec.a)) throw InvalidParameter("a", spec.a, "finite");
    if (!(spec.b > 0.0) || !std::isfinite(spec.b))
        throw InvalidParameter("b", spec.b, "b > 0");
    const char* kind = family_name(spec.kind);

    auto check_nonneg = [](const char* name, double v) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidParameter(name, v, ">= 0");
    };
    auto check_finite = [](const char* name, double v) {
        if (!std::isfinite(v)) throw InvalidParameter(name, v, "finite");
    };

    switch (spec.kind) {
        case FamilyKind::G:
            check_finite("g", require(spec.g, "g"));
            forbid(spec.h, "h", kind);
            forbid(spec.k, "k", kind);
            break;
        case FamilyKind::H:
            check_nonneg("h", require(spec.h, "h"));
            forbid(spec.g, "g", kind);
            forbid(spec.k, "k", kind);
            break;
        case FamilyKind::GH:
        case FamilyKind::GeneralizedGH:
            check_finite("g", require(spec.g, "g"));
            check_nonneg("h", require(spec.h, "h"));
            forbid(spec.k, "k", kind);
            break;
        case FamilyKind::GK: {
            check_finite("g", require(spec.g, "g"));
            double k = require(spec.k, "k");
            if (!(k > -0.5) || !std::isfinite(k)) throw InvalidParameter("k", k, "k > -0.5");
            forbid(spec.h, "h", kind);
            break;
        }
        case FamilyKind::GJ:
            check_finite("g", require(spec.g, "g"));
            forbid(spec.h, "h", kind);
            forbid(spec.k, "k", kind);
            break;
        case FamilyKind::DoubleHH:
            check_nonneg("h_l", require(spec.h_l, "h_l"));
            check_nonneg("h_r", require(spec.h_r, "h_r"));
            forbid(spec.g, "g", kind);
            forbid(spec.h, "h", kind);
            break;
        case FamilyKind::SuperHJK: {
            double alpha = require(spec.alpha_s, "alpha");
            double beta = require(spec.beta_s, "beta");
            double gamma = require(spec.gamma_s, "gamma");
            if (!(alpha > 0.0)) throw InvalidParameter("alpha", alpha, "alpha > 0");
            if (!(beta >= 1.0)) throw InvalidParameter("beta", beta, "beta >= 1");
            if (!(gamma > 0.0)) throw InvalidParameter("gamma", gamma, "gamma > 0");
            forbid(spec.g, "g", kind);
            forbid(spec.h, "h", kind);
            break;
        }
        case FamilyKind::LogisticGammaKappa: {
            double gamma = require(spec.gamma_l, "gamma");
            double kappa = require(spec.kappa_l2, "kappa");
            check_finite("gamma", gamma);
            check_nonneg("kappa", kappa);
            if (!(gamma + kappa < 1.0))
                throw InvalidParameter("gamma", gamma, "gamma + kappa < 1");
            if (!(kappa < 1.0)) throw InvalidParameter("kappa", kappa, "kappa < 1");
            if (!(1.0 + gamma > kappa))
                throw InvalidParameter("gamma", gamma, "1 + gamma > kappa");
            forbid(spec.g, "g", kind);
            forbid(spec.h, "h", kind);
            break;
        }
        case FamilyKind::LogisticKappaKappa: {
            double kl = require(spec.kappa_left, "kappa_l");
            double kr = require(spec.kappa_right, "kappa_r");
            check_nonneg("kappa_l", kl);
            check_nonneg("kappa_r", kr);
            if (!(kl < 1.0)) throw InvalidParameter("kappa_l", kl, "kappa_l < 1");
            if (!(kr < 1.0)) throw InvalidParameter("kappa_r", kr, "kappa_r < 1");
            forbid(spec.g, "g", kind);
            forbid(spec.h, "h", kind);
            break;
        }
    }
    if (!spec.g_poly.empty() && spec.kind != FamilyKind::GH)
        throw InvalidParameter("g_poly", 0.0, "polynomial coefficients only for the gh family");
    if (!spec.h_poly.empty() && spec.kind != FamilyKind::GH)
        throw InvalidParameter("h_poly", 0.0, "polynomial coefficients only for the gh family");
    return spec;
}

namespace {

// Unit transform r0(w); the plain-arithmetic path used by quantile
// evaluation and root searches.
double unit_transform(double w, const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::G:
            return g_factor(*spec.g, w);
        case FamilyKind::H:
            return w * std::exp(0.5 * *spec.h * w * w);
        case FamilyKind::GH: {
            if (!spec.g_poly.empty() || !spec.h_poly.empty()) {
                double gw = poly_eval(spec.g_poly, *spec.g, w);
                double hw = poly_eval(spec.h_poly, *spec.h, w);
                return g_factor(gw, w) * std::exp(0.5 * hw * w * w);
            }
            return g_factor(*spec.g, w) * std::exp(0.5 * *spec.h * w * w);
        }
        case FamilyKind::GeneralizedGH:
            return gstar(spec.c, *spec.g, w) * w * std::exp(0.5 * *spec.h * w * w);
        case FamilyKind::GK:
            return gstar(spec.c, *spec.g, w) * w * std::pow(1.0 + w * w, *spec.k);
        case FamilyKind::GJ:
            return gstar(spec.c, *spec.g, w) * w * std::cosh(w);
        case FamilyKind::DoubleHH: {
            double h = (w <= 0.0) ? *spec.h_l : *spec.h_r;
            return w * std::exp(0.5 * h * w * w);
        }
        case FamilyKind::SuperHJK:
            return w * hjk_T(w, *spec.alpha_s, *spec.beta_s, *spec.gamma_s);
        case FamilyKind::LogisticGammaKappa: {
            double gamma = *spec.gamma_l, kappa = *spec.kappa_l2;
            return g_factor(gamma, w) * std::exp(kappa * std::fabs(w));
        }
        case FamilyKind::LogisticKappaKappa: {
            double kappa = (w <= 0.0) ? *spec.kappa_left : *spec.kappa_right;
            return w * std::exp(kappa * std::fabs(w));
        }
    }
    throw Error("unreachable family kind");
}

double unit_derivative(double w, const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::G: {
            double g = *spec.g;
            if (std::fabs(g) < kGZeroSwitch) return 1.0;
            return std::exp(g * w);
        }
        case FamilyKind::H: {
            double h = *spec.h;
            return std::exp(0.5 * h * w * w) * (1.0 + h * w * w);
        }
        case FamilyKind::GH: {
            if (!spec.g_poly.empty() || !spec.h_poly.empty()) {
                double gv = poly_eval(spec.g_poly, *spec.g, w);
                double gd = poly_derivative(spec.g_poly, w);
                double hv = poly_eval(spec.h_poly, *spec.h, w);
                double hd = poly_derivative(spec.h_poly, w);
                double ev = std::exp(0.5 * hv * w * w);
                double vprime = 0.5 * hd * w * w + hv * w;
                if (std::fabs(gv) < kGZeroSwitch) {
                    // limit of the quotient-rule expression as g(w) -> 0
                    return (1.0 + gv * w + 0.5 * gd * w * w) * ev +
                           w * ev * vprime;
                }
                double u = gv * w;
                double uprime = gd * w + gv;
                double A = std::expm1(u) / gv;
                double Aprime = (std::exp(u) * uprime - A * gd) / gv;
                return Aprime * ev + A * ev * vprime;
            }
            double g = *spec.g, h = *spec.h;
            double ev = std::exp(0.5 * h * w * w);
            if (std::fabs(g) < kGZeroSwitch) return ev * (1.0 + h * w * w);
            return ev * (std::exp(g * w) + (h * w / g) * std::expm1(g * w));
        }
        case FamilyKind::GeneralizedGH: {
            double g = *spec.g, h = *spec.h, c = spec.c;
            double ev = std::exp(0.5 * h * w * w);
            return ev * (gstar_derivative(c, g, w) * w +
                         gstar(c, g, w) * (1.0 + h * w * w));
        }
        case FamilyKind::GK: {
            double g = *spec.g, k = *spec.k, c = spec.c;
            double onep = 1.0 + w * w;
            return std::pow(onep, k - 1.0) *
                   (gstar_derivative(c, g, w) * w * onep +
                    gstar(c, g, w) * (1.0 + (1.0 + 2.0 * k) * w * w));
        }
        case FamilyKind::GJ: {
            double g = *spec.g, c = spec.c;
            return gstar_derivative(c, g, w) * w * std::cosh(w) +
                   gstar(c, g, w) * (std::cosh(w) + w * std::sinh(w));
        }
        case FamilyKind::DoubleHH: {
            double h = (w <= 0.0) ? *spec.h_l : *spec.h_r;
            return std::exp(0.5 * h * w * w) * (1.0 + h * w * w);
        }
        case FamilyKind::SuperHJK: {
            double alpha = *spec.alpha_s, beta = *spec.beta_s, gamma = *spec.gamma_s;
            return hjk_T(w, alpha, beta, gamma) + w * hjk_T_derivative(w, alpha, beta, gamma);
        }
        case FamilyKind::LogisticGammaKappa: {
            double gamma = *spec.gamma_l, kappa = *spec.kappa_l2;
            double ek = std::exp(kappa * std::fabs(w));
            double sgn = (w >= 0.0) ? 1.0 : -1.0;
            if (std::fabs(gamma) < kGZeroSwitch)
                return ek * (1.0 + kappa * std::fabs(w));
            return ek * (std::exp(gamma * w) +
                         sgn * (kappa / gamma) * std::expm1(gamma * w));
        }
        case FamilyKind::LogisticKappaKappa: {
            double kappa = (w <= 0.0) ? *spec.kappa_left : *spec.kappa_right;
            return std::exp(kappa * std::fabs(w)) * (1.0 + kappa * std::fabs(w));
        }
    }
    throw Error("unreachable family kind");
}

}  // namespace

double transform(double w, const FamilySpec& spec) {
    return spec.a + spec.b * unit_transform(w, spec);
}

double transform_derivative(double w, const FamilySpec& spec) {
    return spec.b * unit_derivative(w, spec);
}

SignedLog transform_unit_log(double w, const FamilySpec& spec) {
    if (w == 0.0) return {0.0, -kInf};
    double sign_w = (w > 0.0) ? 1.0 : -1.0;
    switch (spec.kind) {
        case FamilyKind::G: {
            double g = *spec.g;
            if (std::fabs(g) < kGZeroSwitch) return {sign_w, std::log(std::fabs(w))};
            double s = (std::expm1(g * w) / g > 0.0) ? 1.0 : -1.0;
            return {s, log_abs_expm1(g * w) - std::log(std::fabs(g))};
        }
        case FamilyKind::H:
            return {sign_w, std::log(std::fabs(w)) + 0.5 * *spec.h * w * w};
        case FamilyKind::GH: {
            double g = poly_eval(spec.g_poly, *spec.g, w);
            double h = poly_eval(spec.h_poly, *spec.h, w);
            double quad = 0.5 * h * w * w;
            if (std::fabs(g) < kGZeroSwitch) return {sign_w, std::log(std::fabs(w)) + quad};
            return {sign_w, log_abs_expm1(g * w) - std::log(std::fabs(g)) + quad};
        }
        case FamilyKind::GeneralizedGH: {
            double gs = gstar(spec.c, *spec.g, w);
            double s = sign_w * ((gs >= 0.0) ? 1.0 : -1.0);
            return {s, std::log(std::fabs(gs)) + std::log(std::fabs(w)) +
                           0.5 * *spec.h * w * w};
        }
        case FamilyKind::GK: {
            double gs = gstar(spec.c, *spec.g, w);
            double s = sign_w * ((gs >= 0.0) ? 1.0 : -1.0);
            return {s, std::log(std::fabs(gs)) + std::log(std::fabs(w)) +
                           *spec.k * std::log1p(w * w)};
        }
        case FamilyKind::GJ: {
            double gs = gstar(spec.c, *spec.g, w);
            double s = sign_w * ((gs >= 0.0) ? 1.0 : -1.0);
            return {s, std::log(std::fabs(gs)) + std::log(std::fabs(w)) + log_cosh(w)};
        }
        case FamilyKind::DoubleHH: {
            double h = (w <= 0.0) ? *spec.h_l : *spec.h_r;
            return {sign_w, std::log(std::fabs(w)) + 0.5 * h * w * w};
        }
        case FamilyKind::SuperHJK: {
            double alpha = *spec.alpha_s, beta = *spec.beta_s, gamma = *spec.gamma_s;
            double la = alpha * std::log(w * w + gamma);
            double logT;
            if (la > 680.0) {
                logT = beta * (la - std::log(beta));
            } else {
                logT = beta *
                       std::log1p((std::exp(la) - std::pow(gamma, alpha)) / beta);
            }
            return {sign_w, std::log(std::fabs(w)) + logT};
        }
        case FamilyKind::LogisticGammaKappa: {
            double gamma = *spec.gamma_l, kappa = *spec.kappa_l2;
            double lin = kappa * std::fabs(w);
            if (std::fabs(gamma) < kGZeroSwitch)
                return {sign_w, std::log(std::fabs(w)) + lin};
            double s = (std::expm1(gamma * w) / gamma > 0.0) ? 1.0 : -1.0;
            return {s, log_abs_expm1(gamma * w) - std::log(std::fabs(gamma)) + lin};
        }
        case FamilyKind::LogisticKappaKappa: {
            double kappa = (w <= 0.0) ? *spec.kappa_left : *spec.kappa_right;
            return {sign_w, std::log(std::fabs(w)) + kappa * std::fabs(w)};
        }
    }
    throw Error("unreachable family kind");
}

SupportInterval support(const FamilySpec& spec) {
    auto bounded_g_range = [&](double g) -> SupportInterval {
        if (std::fabs(g) < kGZeroSwitch) return {-kInf, kInf};
        if (g > 0.0) return {spec.a - spec.b / g, kInf};
        return {-kInf, spec.a - spec.b / g};
    };
    switch (spec.kind) {
        case FamilyKind::G:
            return bounded_g_range(*spec.g);
        case FamilyKind::GH:
            if (spec.g_poly.empty() && spec.h_poly.empty() && *spec.h == 0.0)
                return bounded_g_range(*spec.g);
            return {-kInf, kInf};
        case FamilyKind::LogisticGammaKappa:
            if (*spec.kappa_l2 == 0.0) return bounded_g_range(*spec.gamma_l);
            return {-kInf, kInf};
        default:
            return {-kInf, kInf};
    }
}

MonotonicityCertificate monotonicity_certificate(const FamilySpec& spec, double w_lo,
                                                 double w_hi, int n_grid) {
    if (!(w_lo < w_hi)) throw InvalidParameter("w_lo", w_lo, "w_lo < w_hi");
    if (n_grid < 2) throw InvalidParameter("n_grid", n_grid, "n_grid >= 2");
    MonotonicityCertificate cert;
    cert.monotone = true;
    double step = (w_hi - w_lo) / (n_grid - 1);
    for (int i = 0; i < n_grid; ++i) {
        double w = w_lo + step * i;
        if (!(transform_derivative(w, spec) > 0.0)) {
            cert.monotone = false;
            cert.first_violation = w;
            break;
        }
    }
    return cert;
}

namespace {

using nlohmann::json;

void put_shape_fields(json& j, const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::G:
            j["g"] = *spec.g;
            break;
        case FamilyKind::H:
            j["h"] = *spec.h;
            break;
        case FamilyKind::GH:
        case FamilyKind::GeneralizedGH:
            j["g"] = *spec.g;
            j["h"] = *spec.h;
            break;
        case FamilyKind::GK:
            j["g"] = *spec.g;
            j["k"] = *spec.k;
            break;
        case FamilyKind::GJ:
            j["g"] = *spec.g;
            break;
        case FamilyKind::DoubleHH:
            j["h_l"] = *spec.h_l;
            j["h_r"] = *spec.h_r;
            break;
        case FamilyKind::SuperHJK:
            j["alpha"] = *spec.alpha_s;
            j["beta"] = *spec.beta_s;
            j["gamma"] = *spec.gamma_s;
            break;
        case FamilyKind::LogisticGammaKappa:
            j["gamma"] = *spec.gamma_l;
            j["kappa"] = *spec.kappa_l2;
            break;
        case FamilyKind::LogisticKappaKappa:
            j["kappa_l"] = *spec.kappa_left;
            j["kappa_r"] = *spec.kappa_right;
            break;
    }
}

}  // namespace

std::string to_json(const FamilySpec& spec) {
    json j;
    j["kind"] = family_name(spec.kind);
    j["a"] = spec.a;
    j["b"] = spec.b;
    put_shape_fields(j, spec);
    j["c"] = spec.c;
    return j.dump();
}

FamilySpec spec_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    if (!j.is_object()) throw Error("family spec JSON must be an object");
    if (!j.contains("kind")) throw Error("family spec JSON missing 'kind'");

    FamilySpec spec;
    spec.kind = family_from_name(j.at("kind").get<std::string>());

    json probe;
    probe["kind"] = true;
    probe["a"] = true;
    probe["b"] = true;
    probe["c"] = true;
    {
        FamilySpec shape;
        shape.kind = spec.kind;
        double unit = 0.0;
        shape.g = unit;
        shape.h = unit;
        shape.k = unit;
        shape.h_l = shape.h_r = unit;
        shape.alpha_s = shape.beta_s = shape.gamma_s = unit;
        shape.gamma_l = shape.kappa_l2 = unit;
        shape.kappa_left = shape.kappa_right = unit;
        put_shape_fields(probe, shape);
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!probe.contains(it.key()))
            throw Error("unknown key '" + it.key() + "' in family spec JSON");
    }

    auto get = [&](const char* key) -> std::optional<double> {
        if (!j.contains(key)) return std::nullopt;
        return j.at(key).get<double>();
    };
    if (auto v = get("a")) spec.a = *v;
    if (auto v = get("b")) spec.b = *v;
    if (auto v = get("c")) spec.c = *v;
    switch (spec.kind) {
        case FamilyKind::G:
        case FamilyKind::GJ:
            spec.g = get("g");
            break;
        case FamilyKind::H:
            spec.h = get("h");
            break;
        case FamilyKind::GH:
        case FamilyKind::GeneralizedGH:
            spec.g = get("g");
            spec.h = get("h");
            break;
        case FamilyKind::GK:
            spec.g = get("g");
            spec.k = get("k");
            break;
        case FamilyKind::DoubleHH:
            spec.h_l = get("h_l");
            spec.h_r = get("h_r");
            break;
        case FamilyKind::SuperHJK:
            spec.alpha_s = get("alpha");
            spec.beta_s = get("beta");
            spec.gamma_s = get("gamma");
            break;
        case FamilyKind::LogisticGammaKappa:
            spec.gamma_l = get("gamma");
            spec.kappa_l2 = get("kappa");
            break;
        case FamilyKind::LogisticKappaKappa:
            spec.kappa_left = get("kappa_l");
            spec.kappa_right = get("kappa_r");
            break;
    }
    validate(spec);
    return spec;
}

}  // namespace quantfam
