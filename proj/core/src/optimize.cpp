#include "quantfam/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quantfam/errors.hpp"
#include "quantfam/rng.hpp"

namespace quantfam {

namespace {

constexpr double kHuge = std::numeric_limits<double>::max();

using Vec = std::vector<double>;

struct BoxMap {
    const Vec& lo;
    const Vec& hi;

    double to_x(double y, std::size_t i) const {
        double s = 1.0 / (1.0 + std::exp(-y));
        return lo[i] + (hi[i] - lo[i]) * s;
    }
    double to_y(double x, std::size_t i) const {
        double t = (x - lo[i]) / (hi[i] - lo[i]);
        t = std::clamp(t, 1e-12, 1.0 - 1e-12);
        // keep the start out of the saturated logit region, where the
        // initial simplex would collapse to zero x-width
        return std::clamp(std::log(t) - std::log1p(-t), -12.0, 12.0);
    }
    Vec to_x(const Vec& y) const {
        Vec x(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) x[i] = to_x(y[i], i);
        return x;
    }
};

struct NelderMeadRun {
    Vec y_best;
    double f_best = kHuge;
    int evals = 0;
    bool converged = false;
};

NelderMeadRun nelder_mead(const Objective& f, const BoxMap& box, const Vec& y0,
                          const OptimizerSettings& s, int budget) {
    const std::size_t d = y0.size();
    auto eval = [&](const Vec& y, int& evals) {
        ++evals;
        double v = f(box.to_x(y));
        return std::isfinite(v) ? v : kHuge;
    };

    NelderMeadRun run;
    std::vector<Vec> simplex(d + 1, y0);
    std::vector<double> fv(d + 1);
    for (std::size_t j = 0; j < d; ++j) simplex[j + 1][j] += 0.25;
    for (std::size_t j = 0; j <= d; ++j) fv[j] = eval(simplex[j], run.evals);

    auto order = [&] {
        std::vector<std::size_t> idx(d + 1);
        for (std::size_t i = 0; i <= d; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<Vec> s2(d + 1);
        std::vector<double> f2(d + 1);
        for (std::size_t i = 0; i <= d; ++i) {
            s2[i] = simplex[idx[i]];
            f2[i] = fv[idx[i]];
        }
        simplex.swap(s2);
        fv.swap(f2);
    };

    while (run.evals < budget) {
        order();
        // convergence tests in x-space and on the value spread
        double xdiam = 0.0;
        Vec x_best = box.to_x(simplex[0]);
        for (std::size_t j = 1; j <= d; ++j) {
            Vec xj = box.to_x(simplex[j]);
            for (std::size_t i = 0; i < d; ++i)
                xdiam = std::max(xdiam, std::fabs(xj[i] - x_best[i]));
        }
        double fspread = std::fabs(fv[d] - fv[0]);
        if (xdiam <= s.x_tol || fspread <= s.f_tol * (std::fabs(fv[0]) + s.f_tol)) {
            run.converged = true;
            break;
        }

        Vec centroid(d, 0.0);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[j][i] / static_cast<double>(d);

        auto affine = [&](double t) {
            Vec p(d);
            for (std::size_t i = 0; i < d; ++i) p[i] = centroid[i] + t * (centroid[i] - simplex[d][i]);
            return p;
        };

        Vec xr = affine(1.0);
        double fr = eval(xr, run.evals);
        if (fr < fv[0]) {
            Vec xe = affine(2.0);
            double fe = eval(xe, run.evals);
            if (fe < fr) {
                simplex[d] = xe;
                fv[d] = fe;
            } else {
                simplex[d] = xr;
                fv[d] = fr;
            }
        } else if (fr < fv[d - 1]) {
            simplex[d] = xr;
            fv[d] = fr;
        } else {
            bool outside = fr < fv[d];
            Vec xc = affine(outside ? 0.5 : -0.5);
            double fc = eval(xc, run.evals);
            if (fc < (outside ? fr : fv[d])) {
                simplex[d] = xc;
                fv[d] = fc;
            } else {
                for (std::size_t j = 1; j <= d; ++j) {
                    for (std::size_t i = 0; i < d; ++i)
                        simplex[j][i] = simplex[0][i] + 0.5 * (simplex[j][i] - simplex[0][i]);
                    fv[j] = eval(simplex[j], run.evals);
                }
            }
        }
    }
    order();
    run.y_best = simplex[0];
    run.f_best = fv[0];
    return run;
}

}  // namespace

MinimizeResult minimize_bounded(const Objective& f, Vec x0, const Vec& lo, const Vec& hi,
                                const OptimizerSettings& settings) {
    const std::size_t d = x0.size();
    if (lo.size() != d || hi.size() != d)
        throw InvalidParameter("bounds", static_cast<double>(d), "lo/hi match x0 dimension");
    for (std::size_t i = 0; i < d; ++i) {
        if (!(lo[i] < hi[i]))
            throw InvalidParameter("bounds", lo[i], "lo < hi componentwise");
        x0[i] = std::clamp(x0[i], lo[i], hi[i]);
    }

    BoxMap box{lo, hi};
    Vec y0(d);
    for (std::size_t i = 0; i < d; ++i) y0[i] = box.to_y(x0[i], i);

    {
        double f0 = f(box.to_x(y0));
        if (!std::isfinite(f0))
            throw NonFiniteObjective("objective not finite at the start point");
    }

    MinimizeResult best;
    best.f = kHuge;
    UniformStream rng(settings.seed);
    int total_evals = 0;
    int runs = std::max(1, settings.restarts);
    for (int r = 0; r < runs && total_evals < settings.max_evals; ++r) {
        Vec start = y0;
        if (r > 0) {
            // global multistart: uniform in y covers the box from ~0.2% to
            // ~99.8% in each coordinate
            for (std::size_t i = 0; i < d; ++i) start[i] = (rng.next() * 2.0 - 1.0) * 6.0;
        }
        int budget = (settings.max_evals - total_evals) / (runs - r);
        NelderMeadRun run = nelder_mead(f, box, start, settings, std::max(budget, 32));
        total_evals += run.evals;
        if (run.f_best < best.f) {
            best.f = run.f_best;
            best.x = box.to_x(run.y_best);
            best.converged = run.converged;
        } else if (run.converged && run.f_best == best.f) {
            best.converged = true;
        }
    }
    best.n_evals = total_evals;
    return best;
}

}  // namespace quantfam
