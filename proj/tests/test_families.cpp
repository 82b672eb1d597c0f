#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "quantfam/family.hpp"

using namespace quantfam;

TEST_CASE("validate accepts the study specs and rejects bad parameters") {
    CHECK_NOTHROW(validate(FamilySpec::gh(0.0, 1.0, 0.5, 0.2)));
    CHECK_THROWS_AS(validate(FamilySpec::gh(0.0, -1.0, 0.0, 0.0)), InvalidParameter);
    CHECK_THROWS_AS(validate(FamilySpec::gk(0.0, 1.0, 0.0, -0.6)), InvalidParameter);
    CHECK_THROWS_AS(validate(FamilySpec::gh(0.0, 1.0, 0.0, -0.1)), InvalidParameter);
    CHECK_THROWS_AS(validate(FamilySpec::logistic_gk(0.5, 0.6)), InvalidParameter);
    CHECK_THROWS_AS(validate(FamilySpec::logistic_kk(1.2, 0.1)), InvalidParameter);
    CHECK_NOTHROW(validate(FamilySpec::h_family(0.0, 1.0, 1.2)));  // h has no upper bound

    // fields shared across kinds are never silently ignored
    FamilySpec stray = FamilySpec::h_family(0.0, 1.0, 0.2);
    stray.g = 0.3;
    CHECK_THROWS_AS(validate(stray), InvalidParameter);
    FamilySpec missing;
    missing.kind = FamilyKind::GH;
    CHECK_THROWS_AS(validate(missing), InvalidParameter);
}

TEST_CASE("transform reference values") {
    // identity at h=0, g->0
    CHECK(transform(1.3, FamilySpec::gh(0.0, 1.0, 0.0, 0.0)) == doctest::Approx(1.3).epsilon(1e-15));
    // direct evaluation of the g transform
    CHECK(transform(1.0, FamilySpec::g_family(0.0, 1.0, 1.0)) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-15));
    // ((e^0.5 - 1)/0.5) e^0.1, frozen from a high-precision evaluation
    CHECK(transform(1.0, FamilySpec::gh(0.0, 1.0, 0.5, 0.2)) ==
          doctest::Approx(1.4338957646297227).epsilon(1e-14));
}

TEST_CASE("transform derivative reference values") {
    CHECK(transform_derivative(0.7, FamilySpec::gh(0.0, 1.0, 0.0, 0.0)) == doctest::Approx(1.0));
    CHECK(transform_derivative(0.0, FamilySpec::h_family(0.0, 1.0, 0.5)) == doctest::Approx(1.0));
}

TEST_CASE("analytic derivative matches central finite differences everywhere") {
    for (const auto& spec : oracles::test_specs()) {
        for (int i = 0; i <= 80; ++i) {
            double w = -4.0 + i * 0.1;
            if (std::fabs(w) < 1e-9) continue;  // |w| kink of the logistic families
            auto f = [&](double x) { return transform(x, spec); };
            double fd = oracles::central_difference(f, w);
            double an = transform_derivative(w, spec);
            CHECK(an == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("derivative positivity for nonnegative kurtosis families") {
    auto specs = {FamilySpec::gh(0.0, 1.0, 0.5, 0.2), FamilySpec::gh(0.0, 1.0, -1.0, 0.4),
                  FamilySpec::h_family(0.0, 1.0, 0.8), FamilySpec::double_hh(0.0, 1.0, 0.3, 0.6)};
    for (const auto& spec : specs) {
        for (int i = 0; i <= 2000; ++i) {
            double w = -10.0 + i * 0.01;
            CHECK(transform_derivative(w, spec) > 0.0);
        }
    }
}

TEST_CASE("symmetry of kurtosis-only transforms") {
    auto specs = {FamilySpec::h_family(1.0, 2.0, 0.4), FamilySpec::gk(0.5, 1.5, 0.0, 0.3)};
    for (const auto& spec : specs) {
        for (double w : {0.3, 1.1, 2.7, 4.0}) {
            double lhs = transform(-w, spec);
            double rhs = -transform(w, spec) + 2.0 * spec.a;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("skew-sign reflection for gh") {
    for (double w : {0.2, 0.9, 2.5}) {
        for (double h : {0.0, 0.2}) {
            double lhs = transform(w, FamilySpec::gh(0.0, 1.0, 0.7, h));
            double rhs = -transform(-w, FamilySpec::gh(0.0, 1.0, -0.7, h));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("g to zero continuity") {
    for (int i = 0; i <= 40; ++i) {
        double w = -4.0 + i * 0.2;
        double near = transform(w, FamilySpec::gh(0.0, 1.0, 1e-10, 0.1));
        double at = transform(w, FamilySpec::gh(0.0, 1.0, 0.0, 0.1));
        CHECK(std::fabs(near - at) < 1e-7);
    }
    // agreement at the switch point itself
    double just_above = transform(1.5, FamilySpec::gh(0.0, 1.0, 1.0000000001e-10, 0.0));
    double limit = transform(1.5, FamilySpec::gh(0.0, 1.0, 0.0, 0.0));
    CHECK(std::fabs(just_above - limit) < 1e-8);
}

TEST_CASE("monotonicity certificate") {
    auto ok = monotonicity_certificate(FamilySpec::gh(0.0, 1.0, 0.5, 0.2), -8.0, 8.0, 4001);
    CHECK(ok.monotone);
    CHECK(!ok.first_violation.has_value());

    auto ident = monotonicity_certificate(FamilySpec::gh(0.0, 1.0, 0.0, 0.0), -8.0, 8.0, 101);
    CHECK(ident.monotone);

    // extreme skew g-and-k loses monotonicity near the origin
    auto bad = monotonicity_certificate(FamilySpec::gk(0.0, 1.0, 5.0, -0.45), -8.0, 8.0, 4001);
    CHECK(!bad.monotone);
    CHECK(bad.first_violation.has_value());
    CHECK(std::fabs(*bad.first_violation) < 2.0);

    CHECK_THROWS_AS((void)monotonicity_certificate(FamilySpec::gh(0, 1, 0, 0), 1.0, -1.0, 10),
                    InvalidParameter);
}

TEST_CASE("polynomial g(w), h(w) coefficients are accepted by evaluation") {
    FamilySpec spec = FamilySpec::gh(0.0, 1.0, 0.3, 0.1);
    spec.g_poly = {0.3, 0.05};   // g(w) = 0.3 + 0.05 w
    spec.h_poly = {0.1, 0.02};   // h(w) = 0.1 + 0.02 w
    CHECK_NOTHROW(validate(spec));
    for (double w : {-2.0, -0.5, 0.4, 1.7}) {
        auto f = [&](double x) { return transform(x, spec); };
        CHECK(transform_derivative(w, spec) ==
              doctest::Approx(oracles::central_difference(f, w)).epsilon(1e-6));
    }
    // constant coefficient vectors reproduce the scalar parameterization
    FamilySpec constant = FamilySpec::gh(0.0, 1.0, 0.3, 0.1);
    FamilySpec aspoly = constant;
    aspoly.g_poly = {0.3};
    aspoly.h_poly = {0.1};
    for (double w : {-1.0, 0.8, 2.2}) {
        CHECK(transform(w, aspoly) == doctest::Approx(transform(w, constant)).epsilon(1e-14));
    }
}

TEST_CASE("spec JSON round trip and strictness") {
    FamilySpec spec = FamilySpec::gh(0.25, 2.0, 0.5, 0.2);
    FamilySpec back = spec_from_json(to_json(spec));
    CHECK(back.kind == spec.kind);
    CHECK(back.a == spec.a);
    CHECK(back.b == spec.b);
    CHECK(*back.g == *spec.g);
    CHECK(*back.h == *spec.h);
    CHECK(back.c == spec.c);

    CHECK_NOTHROW(spec_from_json(R"({"kind":"gh","a":0.0,"b":1.0,"g":0.5,"h":0.2,"c":0.8})"));
    CHECK_THROWS_AS(spec_from_json(R"({"kind":"gh","a":0,"b":1,"g":0,"h":0,"zz":3})"), Error);
    CHECK_THROWS_AS(spec_from_json(R"({"kind":"gh","a":0,"b":1,"g":0,"h":0,"k":0.1})"), Error);
    CHECK_THROWS_AS(spec_from_json(R"({"kind":"nope","a":0,"b":1})"), Error);

    for (const auto& s : oracles::test_specs()) {
        FamilySpec rt = spec_from_json(to_json(s));
        CHECK(rt.kind == s.kind);
        CHECK(transform(0.73, rt) == doctest::Approx(transform(0.73, s)).epsilon(1e-15));
    }
}

TEST_CASE("log-magnitude form agrees with the plain transform") {
    for (const auto& spec : oracles::test_specs()) {
        for (double w : {-6.0, -2.0, -0.3, 0.4, 1.9, 6.0}) {
            SignedLog sl = transform_unit_log(w, spec);
            double plain = (transform(w, spec) - spec.a) / spec.b;
            CHECK(sl.sign * std::exp(sl.log_abs) == doctest::Approx(plain).epsilon(1e-12));
        }
        SignedLog zero = transform_unit_log(0.0, spec);
        CHECK(zero.sign == 0.0);
    }
}
