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

#include "radrep/rational_function.hpp"

namespace radrep {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw Error("ZeroPolynomial", "rational function with zero denominator");
    reduce();
}

RationalFunction RationalFunction::constant(Rational value) {
    return RationalFunction(Polynomial(std::move(value)));
}

RationalFunction RationalFunction::variable() {
    return RationalFunction(Polynomial::variable());
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divmod(num_, g).quotient;
        den_ = divmod(den_, g).quotient;
    }
    const Rational lead = den_.leading_coefficient();
    if (lead != 1) {
        num_ /= lead;
        den_ /= lead;
    }
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd') / d^2; reduction happens in the constructor.
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    return RationalFunction(std::move(n), den_ * den_);
}

Rational RationalFunction::operator()(const Rational& t) const {
    Rational d = den_(t);
    if (d == 0) throw Error("ZeroPolynomial", "rational function evaluated at a pole");
    return num_(t) / d;
}

double RationalFunction::operator()(double t) const { return num_(t) / den_(t); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    *this = RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw Error("ZeroPolynomial", "division by the zero rational function");
    *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

RationalFunction RationalFunction::pow(int exponent) const {
    if (exponent == 0) return constant(Rational(1));
    if (exponent < 0) {
        if (is_zero()) throw Error("ZeroPolynomial", "negative power of the zero rational function");
        RationalFunction inv(den_, num_);
        return inv.pow(-exponent);
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(exponent)),
                            den_.pow(static_cast<unsigned>(exponent)));
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) {
        if (den_.coeff(0) == 1) return num_.str(var);
        return "(" + num_.str(var) + ")/" + den_.coeff(0).get_str();
    }
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace radrep
