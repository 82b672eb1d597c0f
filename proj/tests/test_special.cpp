#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quantfam/errors.hpp"
#include "quantfam/quadrature.hpp"
#include "quantfam/special.hpp"

using namespace quantfam;

TEST_CASE("normal quantile matches reference points") {
    CHECK(norm_quantile(0.5) == 0.0);
    CHECK(norm_quantile(0.975) == doctest::Approx(1.95996398454005424).epsilon(1e-12));
    CHECK(norm_quantile(0.99) == doctest::Approx(2.3263478740408411).epsilon(1e-12));
    CHECK(norm_quantile(0.25) == doctest::Approx(-0.674489750196081743).epsilon(1e-12));
    CHECK_THROWS_AS((void)norm_quantile(0.0), InvalidParameter);
    CHECK_THROWS_AS((void)norm_quantile(1.0), InvalidParameter);
}

TEST_CASE("normal quantile inverts the CDF across the unit interval") {
    for (int i = 1; i <= 999; ++i) {
        double u = i / 1000.0;
        CHECK(norm_cdf(norm_quantile(u)) == doctest::Approx(u).epsilon(1e-13));
    }
    // deep tails
    for (double u : {1e-10, 1e-7, 1e-4, 1.0 - 1e-4, 1.0 - 1e-7, 1.0 - 1e-10}) {
        CHECK(norm_cdf(norm_quantile(u)) == doctest::Approx(u).epsilon(1e-10));
    }
}

TEST_CASE("logistic kernels") {
    CHECK(logistic_cdf(0.0) == 0.5);
    CHECK(logistic_quantile(0.5) == doctest::Approx(0.0));
    for (double u : {0.01, 0.2, 0.8, 0.99}) {
        CHECK(logistic_cdf(logistic_quantile(u)) == doctest::Approx(u).epsilon(1e-14));
    }
    CHECK(logistic_pdf(0.0) == doctest::Approx(0.25));
    CHECK(std::exp(logistic_logpdf(3.7)) == doctest::Approx(logistic_pdf(3.7)));
}

TEST_CASE("shifted Legendre values") {
    CHECK(shifted_legendre(1, 0.5) == 0.0);
    CHECK(shifted_legendre(2, 1.0) == doctest::Approx(1.0));
    CHECK(shifted_legendre(0, 0.3) == 1.0);
    CHECK(shifted_legendre(3, 0.0) == doctest::Approx(-1.0));
    CHECK_THROWS_AS((void)shifted_legendre(4, 0.5), InvalidParameter);
}

TEST_CASE("shifted Legendre orthogonality via quadrature") {
    for (int j = 0; j <= 3; ++j) {
        for (int k = 0; k <= 3; ++k) {
            auto f = [&](double u) { return shifted_legendre(j, u) * shifted_legendre(k, u); };
            double v = integrate(f, 0.0, 1.0).value;
            double expect = (j == k) ? 1.0 / (2.0 * k + 1.0) : 0.0;
            CHECK(v == doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic_number(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(harmonic_number(3.0) == doctest::Approx(11.0 / 6.0).epsilon(1e-12));
    CHECK(harmonic_number(0.5) == doctest::Approx(0.613705638880109381).epsilon(1e-12));
    CHECK(harmonic_number(0.0) == doctest::Approx(0.0));
    // analytic continuation left of zero
    CHECK(harmonic_number(-0.5) == doctest::Approx(2.0 - 2.0 * std::log(2.0) - 2.0).epsilon(1e-10));
    CHECK_THROWS_AS((void)harmonic_number(-1.0), PoleInput);
    CHECK_THROWS_AS((void)harmonic_number(-3.0), PoleInput);
}

TEST_CASE("polygamma") {
    CHECK(polygamma(0, 1.0) == doctest::Approx(-0.577215664901532861).epsilon(1e-12));
    CHECK(polygamma(1, 1.0) == doctest::Approx(1.64493406684822644).epsilon(1e-12));
    CHECK(polygamma(1, 0.5) == doctest::Approx(4.93480220054467931).epsilon(1e-12));
    // recurrence psi(x+1) = psi(x) + 1/x
    CHECK(polygamma(0, 2.5) == doctest::Approx(polygamma(0, 1.5) + 1.0 / 1.5).epsilon(1e-13));
    CHECK_THROWS_AS((void)polygamma(1, 0.0), PoleInput);
    CHECK_THROWS_AS((void)polygamma(1, -2.0), PoleInput);
}

TEST_CASE("adaptive quadrature on known integrals") {
    auto gauss = [](double x) { return std::exp(-x * x); };
    CHECK(integrate(gauss, -10.0, 10.0).value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));

    auto spike = [](double x) { return 1.0 / (1e-4 + x * x); };
    double expect = 2.0 / 1e-2 * std::atan(1.0 / 1e-2);
    CHECK(integrate(spike, -1.0, 1.0).value == doctest::Approx(expect).epsilon(1e-11));
}

TEST_CASE("real-line driver detects divergence") {
    auto growing = [](double x) { return std::exp(0.05 * x * x) * 1e-8; };
    CHECK_THROWS_AS((void)integrate_real_line(growing), Divergent);
    auto decaying = [](double x) { return std::exp(-0.5 * x * x); };
    CHECK(integrate_real_line(decaying) == doctest::Approx(kSqrt2Pi).epsilon(1e-12));
}

TEST_CASE("log helpers stay finite in the far tails") {
    CHECK(log_abs_expm1(1000.0) == doctest::Approx(1000.0));
    CHECK(log_abs_expm1(-1000.0) == doctest::Approx(0.0));
    CHECK(log_cosh(800.0) == doctest::Approx(800.0 - std::log(2.0)));
    CHECK(log_cosh(0.0) == doctest::Approx(0.0));
}
