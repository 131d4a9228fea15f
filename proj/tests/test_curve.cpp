/*
   Copyright 2026 The radrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "radrep/curve.hpp"
#include "support/corpus.hpp"

using radrep::ParametricCurve;
using radrep::Polynomial;
using radrep::Rational;
using radrep::RationalFunction;
using radrep::testing::make_curve;

namespace {

Polynomial from_ints(std::initializer_list<long> coefficients) {
    std::vector<Rational> c;
    for (long v : coefficients) c.emplace_back(v);
    return Polynomial(std::move(c));
}

/// Dense-trapezoid oracle for integrals of a pointwise-evaluable function.
double trapezoid(const std::function<double(double)>& f, int n) {
    double acc = 0.5 * (f(0.0) + f(1.0));
    for (int i = 1; i < n; ++i) acc += f(static_cast<double>(i) / n);
    return acc / n;
}

} // namespace

TEST_SUITE_BEGIN("curve");

TEST_CASE("omega^2 of the running example is 36 t^2 / (9 t^4 + 1)^2") {
    const auto p = make_curve({"t", "t^3"});
    const RationalFunction w2 = radrep::angular_speed_squared(p);
    // Equality of canonical forms, so any common normalization cancels.
    CHECK(w2 == RationalFunction(from_ints({0, 0, 36}),
                                 from_ints({1, 0, 0, 0, 9}) * from_ints({1, 0, 0, 0, 9})));
    CHECK(p.omega_numerator() == from_ints({0, 0, 36}));
    CHECK(p.omega_denominator() == from_ints({1, 0, 0, 0, 9}));
}

TEST_CASE("straight lines have identically zero angular speed") {
    const auto p = make_curve({"t", "7"});
    CHECK(p.omega_is_zero());
    CHECK(radrep::angular_speed_squared(p).is_zero());
    const auto q = make_curve({"t", "2*t + 1"});
    CHECK(q.omega_is_zero());
}

TEST_CASE("omega^2 of (t, t^4) is 144 t^4 / (1 + 16 t^6)^2") {
    const auto p = make_curve({"t", "t^4"});
    CHECK(p.omega_numerator() == from_ints({0, 0, 0, 0, 144}));
    CHECK(p.omega_denominator() == from_ints({1, 0, 0, 0, 0, 0, 16}));
}

TEST_CASE("evaluate_omega on the running example") {
    const auto p = make_curve({"t", "t^3"});
    CHECK(radrep::evaluate_omega(p, 0.0) == 0.0);
    CHECK(radrep::evaluate_omega(p, 1.0) == doctest::Approx(0.6).epsilon(1e-12));
    // The critical point 3^(-3/4) is the maximum of omega.
    const double tc = std::pow(3.0, -0.75);
    const double peak = radrep::evaluate_omega(p, tc);
    for (double t : {tc - 0.05, tc + 0.05, 0.1, 0.9}) {
        CHECK(radrep::evaluate_omega(p, t) < peak);
    }
    // Against the closed form 6t/(9t^4+1).
    for (int i = 0; i <= 20; ++i) {
        const double t = i / 20.0;
        const double expected = 6.0 * t / (9.0 * t * t * t * t + 1.0);
        CHECK(radrep::evaluate_omega(p, t) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("uniformity of the running example matches the reported values") {
    const auto p = make_curve({"t", "t^3"});
    const auto report = radrep::uniformity(p);
    CHECK(std::abs(report.mu - 1.249) <= 5e-3);
    CHECK(std::abs(report.uniformity - 0.846) <= 5e-3);
    // Closed form: mu = arctan 3.
    CHECK(std::abs(report.mu - std::atan(3.0)) <= 1e-9);
    CHECK(report.quad_error_bound <= 1e-6);
    CHECK(report.sigma2 > 0.0);
}

TEST_CASE("uniformity of a straight line is exactly one") {
    const auto report = radrep::uniformity(make_curve({"t", "2*t + 1"}));
    CHECK(report.uniformity == 1.0);
    CHECK(report.mu == 0.0);
}

TEST_CASE("uniformity of (t, t^4) against a dense trapezoid oracle") {
    const auto p = make_curve({"t", "t^4"});
    const auto report = radrep::uniformity(p);
    auto omega = [&p](double t) { return radrep::evaluate_omega(p, t); };
    const double mu_oracle = trapezoid(omega, 1000000);
    const double i2_oracle =
        trapezoid([&omega](double t) { const double w = omega(t); return w * w; }, 1000000);
    const double u_oracle = mu_oracle * mu_oracle / i2_oracle;
    CHECK(std::abs(report.mu - mu_oracle) <= 1e-6);
    CHECK(std::abs(report.uniformity - u_oracle) <= 1e-6);
}

TEST_CASE("multiplicity profile of the corpus anchors") {
    SUBCASE("(t, t^3): zero at 0 with multiplicity 1") {
        const auto data = radrep::multiplicity_profile(make_curve({"t", "t^3"}));
        REQUIRE(data.zero_factors.size() == 1);
        CHECK(data.zero_factors[0].approx == 0);
        CHECK(data.zero_factors[0].multiplicity == 1);
        // F = 36 t^2 -> zeta = 36.
        CHECK(data.zeta == from_ints({36}));
    }
    SUBCASE("(t, t^4): zero at 0 with multiplicity 2") {
        const auto data = radrep::multiplicity_profile(make_curve({"t", "t^4"}));
        REQUIRE(data.zero_factors.size() == 1);
        CHECK(data.zero_factors[0].approx == 0);
        CHECK(data.zero_factors[0].multiplicity == 2);
    }
    SUBCASE("(t, (t - 2/5)^3): zero at 2/5 with multiplicity 1") {
        const auto data = radrep::multiplicity_profile(make_curve({"t", "(t - 2/5)^3"}));
        REQUIRE(data.zero_factors.size() == 1);
        CHECK(data.zero_factors[0].approx == Rational(2, 5));
        CHECK(data.zero_factors[0].multiplicity == 1);
    }
    SUBCASE("line is rejected as degenerate") {
        CHECK_THROWS_WITH_AS(radrep::multiplicity_profile(make_curve({"t", "2*t"})),
                             doctest::Contains("DegenerateLine"), radrep::Error);
    }
}

TEST_CASE("F is nonnegative on [-2, 2] across the corpus") {
    std::mt19937 rng(5501);
    std::uniform_real_distribution<double> ts(-2.0, 2.0);
    for (const auto& entry : radrep::testing::zero_corpus()) {
        const auto p = make_curve(entry.coordinates);
        const auto coeffs = p.omega_numerator().double_coefficients();
        for (int i = 0; i < 1000; ++i) {
            CHECK(radrep::horner(coeffs, ts(rng)) >= -1e-9);
        }
    }
}

TEST_CASE("similarity invariance of the angular speed") {
    // Exact rational rotation (3/5, 4/5), scaling 7/3, translation (1/3, -2).
    const auto p = make_curve({"t", "t^3"});
    const auto q = make_curve({"(3/5)*t - (4/5)*t^3", "(4/5)*t + (3/5)*t^3"});
    const auto scaled = make_curve({"(7/3)*t + 1/3", "(7/3)*t^3 - 2"});
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> ts(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double t = ts(rng);
        const double w = radrep::evaluate_omega(p, t);
        CHECK(radrep::evaluate_omega(q, t) == doctest::Approx(w).epsilon(1e-9));
        CHECK(radrep::evaluate_omega(scaled, t) == doctest::Approx(w).epsilon(1e-9));
    }
}

TEST_CASE("uniformity stays in (0, 1] on the whole corpus") {
    for (const auto& entry : radrep::testing::zero_corpus()) {
        const auto report = radrep::uniformity(make_curve(entry.coordinates));
        CHECK(report.uniformity > 0.0);
        CHECK(report.uniformity <= 1.0);
    }
    for (const auto& entry : radrep::testing::no_zero_corpus()) {
        const auto report = radrep::uniformity(make_curve(entry.coordinates));
        CHECK(report.uniformity > 0.0);
        CHECK(report.uniformity <= 1.0);
    }
}

TEST_CASE("singular curves are rejected with a bracket") {
    // Hodograph vanishes at t = 1/2: x' = 2t - 1.
    CHECK_THROWS_WITH_AS(make_curve({"t^2 - t", "(t^2 - t)^2"}),
                         doctest::Contains("SingularCurve"), radrep::Error);
    // Coordinate pole inside [0, 1].
    CHECK_THROWS_WITH_AS(make_curve({"1/(t - 1/2)", "t"}),
                         doctest::Contains("SingularCurve"), radrep::Error);
    // Dimension guard.
    CHECK_THROWS_AS(radrep::ParametricCurve({radrep::RationalFunction::variable()}), radrep::Error);
}

TEST_CASE("derivative form is reduced: gcd(X_1, ..., X_n, W) constant") {
    const auto p = make_curve({"t/(1 + t)", "t^2"});
    Polynomial common = p.derivative_denominator();
    for (const auto& x : p.derivative_numerators()) common = gcd(common, x);
    CHECK(common.is_constant());
    // x' = 1/(1+t)^2, y' = 2t -> W = (1+t)^2, X = (1, 2t(1+t)^2).
    CHECK(p.derivative_denominator() == from_ints({1, 2, 1}));
}

TEST_SUITE_END();
