#ifndef QUANTFAM_FAMILY_HPP_
#define QUANTFAM_FAMILY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "quantfam/errors.hpp"

namespace quantfam {

/// The quantile-transform families. Gaussian base unless noted.
enum class FamilyKind {
    G,                  // a + b (e^{gW}-1)/g
    H,                  // a + b W e^{hW^2/2}
    GH,                 // a + b (e^{gW}-1)/g e^{hW^2/2}
    GeneralizedGH,      // a + b G*(W) W e^{hW^2/2}
    GK,                 // a + b G*(W) W (1+W^2)^k
    GJ,                 // a + b G*(W) W cosh(W)
    DoubleHH,           // a + b W e^{h_{l|r} W^2/2}, side by sign(W)
    SuperHJK,           // a + b W T_hjk(W; alpha,beta,gamma)
    LogisticGammaKappa, // logistic base, gamma^{-1}(e^{gamma W}-1) e^{kappa|W|}
    LogisticKappaKappa, // logistic base, W e^{kappa_{L|R}|W|}
};

const char* family_name(FamilyKind kind);
FamilyKind family_from_name(const std::string& name);

/// Which base distribution drives the family.
enum class BaseDistribution { Gaussian, Logistic };
BaseDistribution family_base(FamilyKind kind);

/// A family together with its full parameter vector. Shape fields are
/// optional; validate() insists that exactly the fields the kind uses are
/// set. theta is fixed at 1 throughout; c is the overall-asymmetry
/// constant of the generalized-g factor (only generalized-g forms read it).
struct FamilySpec {
    FamilyKind kind = FamilyKind::GH;
    double a = 0.0;
    double b = 1.0;
    std::optional<double> g;
    std::optional<double> h;
    std::optional<double> k;
    std::optional<double> h_l, h_r;
    std::optional<double> alpha_s, beta_s, gamma_s;
    std::optional<double> gamma_l, kappa_l2;
    std::optional<double> kappa_left, kappa_right;
    double c = 0.8;
    static constexpr double theta = 1.0;

    // Polynomial extensions of g(w), h(w) for the GH family; coefficient j
    // multiplies w^j with index 0 the constant term. Evaluation-only: the
    // estimators never touch these and JSON does not carry them.
    std::vector<double> g_poly;
    std::vector<double> h_poly;

    static FamilySpec gh(double a, double b, double g, double h);
    static FamilySpec g_family(double a, double b, double g);
    static FamilySpec h_family(double a, double b, double h);
    static FamilySpec gk(double a, double b, double g, double k, double c = 0.8);
    static FamilySpec gj(double a, double b, double g, double c = 0.8);
    static FamilySpec generalized_gh(double a, double b, double g, double h, double c = 0.8);
    static FamilySpec double_hh(double a, double b, double h_left, double h_right);
    static FamilySpec super_hjk(double a, double b, double alpha, double beta, double gamma);
    static FamilySpec logistic_gk(double gamma, double kappa, double a = 0.0, double b = 1.0);
    static FamilySpec logistic_kk(double kappa_left, double kappa_right, double a = 0.0,
                                  double b = 1.0);
};

/// Checks every FamilySpec invariant (presence of exactly the fields the
/// kind uses, and all range constraints). Returns the spec unchanged.
/// Throws InvalidParameter naming the violated constraint.
const FamilySpec& validate(const FamilySpec& spec);

/// x = a + b r0(w) with r0 the family's unit transform. The g -> 0 branch
/// switches to the exact limiting formula at |g| < 1e-10.
double transform(double w, const FamilySpec& spec);

/// b * dr0/dw, derived symbolically per family.
double transform_derivative(double w, const FamilySpec& spec);

/// Unit transform value in sign/log-magnitude form so tail integrands can
/// be evaluated without overflow: r0(w) = sign * exp(log_abs).
struct SignedLog {
    double sign;     // -1, 0 or +1
    double log_abs;  // -inf when sign == 0
};
SignedLog transform_unit_log(double w, const FamilySpec& spec);

/// Analytic support of X = a + b r0(W). Infinite ends are +-inf.
struct SupportInterval {
    double lower;
    double upper;
};
SupportInterval support(const FamilySpec& spec);

struct MonotonicityCertificate {
    bool monotone = false;
    std::optional<double> first_violation;
};

/// Samples r' on a uniform grid of n_grid points over [w_lo, w_hi];
/// monotone iff the minimum stays strictly positive.
MonotonicityCertificate monotonicity_certificate(const FamilySpec& spec, double w_lo,
                                                 double w_hi, int n_grid);

/// Flat JSON object {"kind":"gh","a":...,"b":...,...}. Shape fields follow
/// the kind; c always rides along. Unknown keys are rejected.
std::string to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const std::string& json_text);

}  // namespace quantfam

#endif  // QUANTFAM_FAMILY_HPP_
