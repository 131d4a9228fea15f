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

#include <random>

#include "radrep/polynomial.hpp"

using radrep::Polynomial;
using radrep::Rational;

namespace {

Polynomial from_ints(std::initializer_list<long> coefficients) {
    std::vector<Rational> c;
    for (long v : coefficients) c.emplace_back(v);
    return Polynomial(std::move(c));
}

Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    return Polynomial(std::move(c));
}

} // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("derivative power rule") {
    // t^3 -> 3 t^2
    CHECK(differentiate(from_ints({0, 0, 0, 1})) == from_ints({0, 0, 3}));
    // constants vanish
    CHECK(differentiate(from_ints({5})).is_zero());
    // 9 t^4 + 1 -> 36 t^3
    CHECK(differentiate(from_ints({1, 0, 0, 0, 9})) == from_ints({0, 0, 0, 36}));
}

TEST_CASE("derivative is linear") {
    std::mt19937 rng(871);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial f = random_polynomial(rng, 10);
        const Polynomial g = random_polynomial(rng, 10);
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        CHECK(differentiate(a * f + b * g) == a * differentiate(f) + b * differentiate(g));
    }
}

TEST_CASE("evaluation, exact and double") {
    const Polynomial f = from_ints({1, -2, 3}); // 3t^2 - 2t + 1
    CHECK(f(Rational(1, 2)) == Rational(3, 4));
    CHECK(f(0.5) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(radrep::horner(f.double_coefficients(), 0.5) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("squarefree decomposition of t^2 (t-1)") {
    const Polynomial f = from_ints({0, 0, 1}) * from_ints({-1, 1}); // t^2 (t - 1)
    const auto d = squarefree_decomposition(f);
    REQUIRE(d.factors.size() == 2);
    CHECK(d.constant == 1);
    CHECK(d.factors[0].factor == from_ints({-1, 1}));
    CHECK(d.factors[0].exponent == 1);
    CHECK(d.factors[1].factor == from_ints({0, 1}));
    CHECK(d.factors[1].exponent == 2);
}

TEST_CASE("squarefree decomposition of 36 t^2 keeps the constant") {
    const Polynomial f = from_ints({0, 0, 36});
    const auto d = squarefree_decomposition(f);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.constant == 36);
    CHECK(d.factors[0].factor == from_ints({0, 1}));
    CHECK(d.factors[0].exponent == 2);
}

TEST_CASE("squarefree input comes back whole") {
    const Polynomial f = from_ints({-1, 0, 1}); // (t-1)(t+1)
    const auto d = squarefree_decomposition(f);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].exponent == 1);
    CHECK(d.factors[0].factor == f);
}

TEST_CASE("squarefree decomposition rejects the zero polynomial") {
    CHECK_THROWS_WITH_AS(squarefree_decomposition(Polynomial()),
                         doctest::Contains("ZeroPolynomial"), radrep::Error);
}

TEST_CASE("squarefree decomposition reconstructs its input") {
    std::mt19937 rng(929);
    std::uniform_int_distribution<int> exponent(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial f = random_polynomial(rng, 3);
        if (f.is_zero()) continue;
        // Plant extra structure: multiply by a random power of a linear factor.
        std::uniform_int_distribution<long> root(-3, 3);
        const Polynomial linear = from_ints({-root(rng), 1});
        f *= linear.pow(static_cast<unsigned>(exponent(rng)));
        const auto d = squarefree_decomposition(f);
        CHECK(d.reconstruct() == f);
        for (std::size_t i = 0; i + 1 < d.factors.size(); ++i) {
            CHECK(d.factors[i].exponent < d.factors[i + 1].exponent);
        }
        for (const auto& [factor, e] : d.factors) {
            CHECK(gcd(factor, factor.derivative()).is_constant());
        }
    }
}

TEST_CASE("gcd basics") {
    const Polynomial a = from_ints({0, 0, 1});          // t^2
    const Polynomial b = from_ints({0, 1}) * from_ints({-1, 1}); // t(t-1)
    CHECK(gcd(a, b) == from_ints({0, 1}));
    CHECK(gcd(a, Polynomial()) == from_ints({0, 0, 1}));
    CHECK(gcd(from_ints({2}), b).is_constant());
}

TEST_CASE("euclidean quotient exact cases") {
    SUBCASE("t^2 by (t-0)^2") {
        const auto d = euclidean_quotient(from_ints({0, 0, 1}), Rational(0), 2);
        CHECK(d.quotient == from_ints({1}));
        CHECK(d.remainder.is_zero());
        CHECK(d.remainder_max_abs == 0.0);
    }
    SUBCASE("t^2 - 2t + 1 by (t-1)^2") {
        const auto d = euclidean_quotient(from_ints({1, -2, 1}), Rational(1), 2);
        CHECK(d.quotient == from_ints({1}));
        CHECK(d.remainder.is_zero());
    }
    SUBCASE("36 t^2 by (t-0)^2") {
        const auto d = euclidean_quotient(from_ints({0, 0, 36}), Rational(0), 2);
        CHECK(d.quotient == from_ints({36}));
        CHECK(d.remainder.is_zero());
    }
}

TEST_CASE("euclidean quotient reconstructs the dividend exactly") {
    std::mt19937 rng(403);
    std::uniform_int_distribution<int> power(1, 4);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = random_polynomial(rng, 8);
        if (f.is_zero()) continue;
        Rational gamma(num(rng), den(rng));
        gamma.canonicalize();
        const int k = power(rng);
        const auto d = euclidean_quotient(f, gamma, k);
        const Polynomial shift = Polynomial::variable() - Polynomial(gamma);
        CHECK(shift.pow(static_cast<unsigned>(k)) * d.quotient + d.remainder == f);
        CHECK(d.remainder.degree() < k);
    }
}

TEST_CASE("divmod round trips") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial a = random_polynomial(rng, 9);
        Polynomial b = random_polynomial(rng, 4);
        if (b.is_zero()) b = from_ints({1, 2});
        const auto d = divmod(a, b);
        CHECK(d.quotient * b + d.remainder == a);
        CHECK(d.remainder.degree() < b.degree());
    }
}

TEST_SUITE_END();
