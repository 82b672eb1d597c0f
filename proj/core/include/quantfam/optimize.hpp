#ifndef QUANTFAM_OPTIMIZE_HPP_
#define QUANTFAM_OPTIMIZE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

// Derivative-free bounded minimization: Nelder-Mead run in a
// logit-transformed box so iterates respect the bounds without penalties,
// with seeded randomized restarts.

namespace quantfam {

struct OptimizerSettings {
    double x_tol = 1e-8;
    double f_tol = 1e-10;
    int max_evals = 5000;
    int restarts = 3;
    std::uint64_t seed = 12345;
};

struct MinimizeResult {
    std::vector<double> x;
    double f = 0.0;
    int n_evals = 0;
    bool converged = false;
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Minimize f over the box [lo, hi]. x0 is clamped into the box before the
/// search starts. Non-finite objective values inside the search are treated
/// as +infinity; a non-finite value at x0 throws NonFiniteObjective.
MinimizeResult minimize_bounded(const Objective& f, std::vector<double> x0,
                                const std::vector<double>& lo, const std::vector<double>& hi,
                                const OptimizerSettings& settings = {});

}  // namespace quantfam

#endif  // QUANTFAM_OPTIMIZE_HPP_
