#ifndef QUANTFAM_QUADRATURE_HPP_
#define QUANTFAM_QUADRATURE_HPP_

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "quantfam/errors.hpp"

// Adaptive quadrature on an embedded Gauss7/Kronrod15 pair, plus a
// whole-real-line driver that extends the interval block by block until
// the tail contribution is negligible.

namespace quantfam {

struct QuadratureSettings {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_segments = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

/// Integrate f over [a,b] by adaptive bisection of G7/K15 panels.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSettings& settings = {});

/// Same machinery for an integrand with kDim simultaneous components that
/// share evaluation points (the four L-moment weights, for instance).
/// The per-panel error is the max over components.
template <std::size_t kDim>
using VectorIntegrand = std::function<std::array<double, kDim>(double)>;

std::array<double, 4> integrate4(const VectorIntegrand<4>& f, double a, double b,
                                 const QuadratureSettings& settings = {});

/// Integrate f over the whole real line: adaptive core on [-w0, w0], then
/// doubling blocks outward on each side until two consecutive blocks
/// contribute less than rel_tol relative to the running total. Throws
/// Divergent when block contributions grow instead.
double integrate_real_line(const std::function<double(double)>& f, double w0 = 8.0,
                           const QuadratureSettings& settings = {});

std::array<double, 4> integrate_real_line4(const VectorIntegrand<4>& f, double w0 = 8.0,
                                           const QuadratureSettings& settings = {});

}  // namespace quantfam

#endif  // QUANTFAM_QUADRATURE_HPP_
