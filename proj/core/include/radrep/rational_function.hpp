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

#ifndef RADREP_RATIONAL_FUNCTION_HPP
#define RADREP_RATIONAL_FUNCTION_HPP

#include <string>

#include "radrep/polynomial.hpp"

namespace radrep {

/// Quotient of two exact polynomials kept in canonical reduced form:
/// gcd(numerator, denominator) is constant and the denominator is monic.
class RationalFunction {
public:
    RationalFunction() : den_{Rational(1)} {}
    explicit RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_{Rational(1)} {}
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction constant(Rational value);
    static RationalFunction variable();

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    RationalFunction derivative() const;

    /// Exact evaluation; error "SingularCurve" style callers handle the
    /// vanishing-denominator case, here it is "ZeroPolynomial".
    Rational operator()(const Rational& t) const;
    double operator()(double t) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    RationalFunction pow(int exponent) const; // negative exponents flip num/den

    bool operator==(const RationalFunction& rhs) const = default;

    std::string str(const std::string& var = "t") const;

private:
    void reduce();

    Polynomial num_;
    Polynomial den_;
};

} // namespace radrep

#endif
