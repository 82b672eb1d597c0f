#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quantfam/optimize.hpp"
#include "quantfam/errors.hpp"

using namespace quantfam;

TEST_CASE("quadratic bowl") {
    auto f = [](const std::vector<double>& x) { return (x[0] - 0.3) * (x[0] - 0.3); };
    MinimizeResult r = minimize_bounded(f, {0.9}, {0.0}, {1.0});
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(r.n_evals > 0);
}

TEST_CASE("Rosenbrock in a box") {
    auto f = [](const std::vector<double>& x) {
        double a = 1.0 - x[0];
        double b = x[1] - x[0] * x[0];
        return a * a + 100.0 * b * b;
    };
    OptimizerSettings s;
    s.max_evals = 20000;
    s.restarts = 4;
    MinimizeResult r = minimize_bounded(f, {-1.5, 1.5}, {-2.0, -2.0}, {2.0, 2.0}, s);
    CHECK(r.f < 1e-6);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("start point outside the box is clamped") {
    auto f = [](const std::vector<double>& x) { return x[0] * x[0]; };
    MinimizeResult r = minimize_bounded(f, {25.0}, {1.0}, {2.0});
    // boundary optimum: the logit box approaches a corner asymptotically
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(r.x[0] >= 1.0);
    CHECK(r.x[0] <= 2.0);
}

TEST_CASE("objective non-finite at the start throws") {
    auto f = [](const std::vector<double>&) { return std::nan(""); };
    CHECK_THROWS_AS((void)minimize_bounded(f, {0.5}, {0.0}, {1.0}), NonFiniteObjective);
}

TEST_CASE("iterates always respect the bounds") {
    double lo = 0.2, hi = 0.9;
    auto f = [&](const std::vector<double>& x) {
        REQUIRE(x[0] >= lo);
        REQUIRE(x[0] <= hi);
        return std::cos(20.0 * x[0]);
    };
    MinimizeResult r = minimize_bounded(f, {0.5}, {lo}, {hi});
    CHECK(r.x[0] >= lo);
    CHECK(r.x[0] <= hi);
}

TEST_CASE("determinism for a fixed seed") {
    auto f = [](const std::vector<double>& x) {
        return std::sin(5.0 * x[0]) + x[1] * x[1] + 0.3 * std::cos(9.0 * x[1] + 1.0);
    };
    OptimizerSettings s;
    s.seed = 991;
    MinimizeResult r1 = minimize_bounded(f, {0.2, 0.7}, {-2.0, -2.0}, {2.0, 2.0}, s);
    MinimizeResult r2 = minimize_bounded(f, {0.2, 0.7}, {-2.0, -2.0}, {2.0, 2.0}, s);
    CHECK(r1.x == r2.x);
    CHECK(r1.f == r2.f);
    CHECK(r1.n_evals == r2.n_evals);
}

TEST_CASE("bad bounds are rejected") {
    auto f = [](const std::vector<double>& x) { return x[0]; };
    CHECK_THROWS_AS((void)minimize_bounded(f, {0.0}, {1.0}, {0.0}), InvalidParameter);
}
