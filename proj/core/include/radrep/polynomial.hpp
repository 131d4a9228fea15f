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

#ifndef RADREP_POLYNOMIAL_HPP
#define RADREP_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include "radrep/rational.hpp"

namespace radrep {

/// Dense univariate polynomial with exact rational coefficients.
/// coeff(k) is the coefficient of t^k. The zero polynomial stores no
/// coefficients and reports degree() == -1; otherwise the leading stored
/// coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);
    explicit Polynomial(std::vector<Rational> coefficients);

    /// The monomial t.
    static Polynomial variable();
    static Polynomial monomial(int degree, Rational coefficient);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of t^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    const Rational& leading_coefficient() const;

    Rational operator()(const Rational& t) const;
    double operator()(double t) const;

    /// Coefficients narrowed to double, for quadrature-side Horner loops.
    std::vector<double> double_coefficients() const;

    Polynomial derivative() const;
    Polynomial pow(unsigned exponent) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);
    Polynomial& operator/=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& scalar) { return lhs *= scalar; }
    friend Polynomial operator*(const Rational& scalar, Polynomial rhs) { return rhs *= scalar; }
    friend Polynomial operator/(Polynomial lhs, const Rational& scalar) { return lhs /= scalar; }

    bool operator==(const Polynomial& rhs) const = default;

    /// Readable form, lowest degree last: "3*t^2 - 1/2*t + 5".
    std::string str(const std::string& var = "t") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Horner evaluation of double coefficients (index = degree of term).
double horner(std::span<const double> coeffs, double t);

Polynomial differentiate(const Polynomial& f);

struct PolynomialDivision {
    Polynomial quotient;
    Polynomial remainder;
};

/// Exact division with remainder over the rationals. The divisor must be
/// nonzero.
PolynomialDivision divmod(const Polynomial& numerator, const Polynomial& denominator);

/// Monic greatest common divisor (primitive PRS over the integers inside).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

struct SquarefreeFactor {
    Polynomial factor; // monic, square-free
    int exponent;      // >= 1
};

struct SquarefreeDecomposition {
    Rational constant; // input == constant * prod factor^exponent
    std::vector<SquarefreeFactor> factors;

    Polynomial reconstruct() const;
};

/// Yun's algorithm. Factors are monic, pairwise coprime and square-free,
/// listed by increasing exponent. Error "ZeroPolynomial" on the zero input.
SquarefreeDecomposition squarefree_decomposition(const Polynomial& f);

struct EuclideanDivision {
    Polynomial quotient;      // Q with f == (t-gamma)^power * Q + R
    Polynomial remainder;     // R, degree < power
    double remainder_max_abs; // max |coefficient of R|; conditioning diagnostic
};

/// Divides f by (t-gamma)^power. When gamma approximates a root of f of
/// multiplicity >= power the remainder is near zero and its magnitude
/// measures how loose the approximation is.
EuclideanDivision euclidean_quotient(const Polynomial& f, const Rational& gamma, int power);

} // namespace radrep

#endif
