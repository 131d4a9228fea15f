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
#include <random>

#include "radrep/polynomial.hpp"
#include "radrep/quadrature.hpp"

using radrep::Integrand;
using radrep::Polynomial;
using radrep::Rational;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("running-example mean integrand hits arctan 3") {
    Integrand f{[](double t) { return 6.0 * t / (9.0 * t * t * t * t + 1.0); }};
    const auto r = radrep::integrate(f, 0.0, 1.0, 1e-9);
    CHECK(std::abs(r.value - std::atan(3.0)) <= 1e-10);
    CHECK(r.error_bound <= 1e-9);
    CHECK(r.converged);
}

TEST_CASE("constant one integrates to one") {
    const auto r = radrep::integrate(Integrand{[](double) { return 1.0; }}, 0.0, 1.0, 1e-9);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("declared endpoint exponent -1/2 integrates t^(-1/2) to 2") {
    Integrand f{[](double t) { return 1.0 / std::sqrt(t); }, 0.0, -0.5};
    const auto r = radrep::integrate(f, 0.0, 1.0, 1e-9);
    CHECK(std::abs(r.value - 2.0) <= 1e-9);

    // Mirrored at the right endpoint.
    Integrand g{[](double t) { return 1.0 / std::sqrt(1.0 - t); }, 1.0, -0.5};
    const auto r2 = radrep::integrate(g, 0.0, 1.0, 1e-9);
    CHECK(std::abs(r2.value - 2.0) <= 1e-9);
}

TEST_CASE("non-integrable declaration is rejected") {
    Integrand f{[](double t) { return 1.0 / t; }, 0.0, -1.0};
    CHECK_THROWS_WITH_AS(radrep::integrate(f, 0.0, 1.0, 1e-9),
                         doctest::Contains("QuadratureError"), radrep::Error);
}

TEST_CASE("polynomials up to degree 20 match the exact antiderivative") {
    std::mt19937 rng(2027);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int degree = 0; degree <= 20; ++degree) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        for (auto& q : c) {
            q = Rational(num(rng), den(rng));
            q.canonicalize();
        }
        const Polynomial p(std::move(c));
        // Independent oracle: exact rational antiderivative evaluated at the ends.
        std::vector<Rational> anti(p.coefficients().size() + 1, Rational(0));
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
            anti[k + 1] = p.coefficients()[k] / Rational(static_cast<long>(k) + 1);
        }
        const Polynomial antiderivative{std::move(anti)};
        const double exact =
            radrep::to_double(antiderivative(Rational(1)) - antiderivative(Rational(0)));

        const auto coeffs = p.double_coefficients();
        const auto r = radrep::integrate(
            Integrand{[&coeffs](double t) { return radrep::horner(coeffs, t); }}, 0.0, 1.0, 1e-9);
        CHECK(std::abs(r.value - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("linearity within twice the tolerance") {
    std::mt19937 rng(4099);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    const double tol = 1e-9;
    for (int trial = 0; trial < 10; ++trial) {
        const double a = coeff(rng);
        const double b = coeff(rng);
        auto f = [](double t) { return t * t * t - 0.3 * t; };
        auto g = [](double t) { return std::exp(-t) * 2.0; };
        const double lhs = radrep::integrate(
                               Integrand{[=](double t) { return a * f(t) + b * g(t); }}, 0.0, 1.0, tol)
                               .value;
        const double rhs = a * radrep::integrate(Integrand{f}, 0.0, 1.0, tol).value +
                           b * radrep::integrate(Integrand{g}, 0.0, 1.0, tol).value;
        CHECK(std::abs(lhs - rhs) <= 2.0 * tol * (1.0 + std::abs(a) + std::abs(b)));
    }
}

TEST_CASE("interval additivity within twice the tolerance") {
    Integrand f{[](double t) { return std::sin(7.0 * t) + t * t; }};
    const double tol = 1e-9;
    const double whole = radrep::integrate(f, 0.0, 1.0, tol).value;
    for (double c : {0.1, 0.37, 0.5, 0.93}) {
        const double split = radrep::integrate(f, 0.0, c, tol).value +
                             radrep::integrate(f, c, 1.0, tol).value;
        CHECK(std::abs(whole - split) <= 2.0 * tol);
    }
}

TEST_CASE("budget exhaustion reports instead of lying") {
    // A genuine non-integrable pole inside the interval cannot converge.
    Integrand f{[](double t) { return 1.0 / std::abs(t - 0.5); }};
    radrep::QuadratureOptions options;
    options.max_evaluations = 20000;
    const auto r = radrep::integrate_detail(f, 0.0, 1.0, 1e-9, options);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(radrep::integrate(f, 0.0, 1.0, 1e-9, options), radrep::QuadratureError);
    try {
        radrep::integrate(f, 0.0, 1.0, 1e-9, options);
    } catch (const radrep::QuadratureError& e) {
        CHECK(e.best_estimate() == r.value);
    }
}

TEST_SUITE_END();
