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

#include "radrep/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace radrep {

namespace {

const Rational kZero(0);

} // namespace

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::variable() { return monomial(1, Rational(1)); }

Polynomial Polynomial::monomial(int degree, Rational coefficient) {
    if (coefficient == 0) return Polynomial();
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = std::move(coefficient);
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw Error("ZeroPolynomial", "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

double Polynomial::operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + it->get_d();
    }
    return acc;
}

std::vector<double> Polynomial::double_coefficients() const {
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i].get_d();
    return out;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial out{Rational(1)};
    Polynomial acc = *this;
    unsigned e = exponent;
    while (e != 0) {
        if (e & 1u) out *= acc;
        acc *= acc;
        e >>= 1u;
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& scalar) {
    if (scalar == 0) throw Error("ZeroPolynomial", "division of polynomial by zero scalar");
    for (auto& c : coeffs_) c /= scalar;
    return *this;
}

std::string Polynomial::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit = (a == 1 && k != 0);
        if (!unit) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

double horner(std::span<const double> coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial differentiate(const Polynomial& f) { return f.derivative(); }

PolynomialDivision divmod(const Polynomial& numerator, const Polynomial& denominator) {
    if (denominator.is_zero()) throw Error("ZeroPolynomial", "polynomial division by zero");
    PolynomialDivision out;
    out.remainder = numerator;
    const int d = denominator.degree();
    if (numerator.degree() < d) return out;
    std::vector<Rational> q(static_cast<std::size_t>(numerator.degree() - d) + 1, Rational(0));
    std::vector<Rational> r = numerator.coefficients();
    const Rational& lead = denominator.leading_coefficient();
    for (int k = static_cast<int>(r.size()) - 1; k >= d; --k) {
        const auto ku = static_cast<std::size_t>(k);
        if (r[ku] == 0) continue;
        Rational factor = r[ku] / lead;
        q[static_cast<std::size_t>(k - d)] = factor;
        for (int j = 0; j <= d; ++j) {
            r[static_cast<std::size_t>(k - d + j)] -= factor * denominator.coeff(j);
        }
    }
    out.quotient = Polynomial(std::move(q));
    out.remainder = Polynomial(std::move(r));
    return out;
}

namespace {

using ZPoly = std::vector<mpz_class>; // index = degree, trailing nonzero

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(ZPoly& p) {
    ztrim(p);
    if (p.empty()) return;
    mpz_class g = zcontent(p);
    if (g == 0) return;
    if (sgn(p.back()) < 0) g = -g;
    if (g == 1) return;
    for (auto& c : p) c /= g;
}

ZPoly to_primitive_integer(const Polynomial& f) {
    ZPoly out;
    out.reserve(f.coefficients().size());
    mpz_class den_lcm(1);
    for (const auto& c : f.coefficients()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    for (const auto& c : f.coefficients()) {
        mpz_class num = c.get_num() * (den_lcm / c.get_den());
        out.push_back(std::move(num));
    }
    make_primitive(out);
    return out;
}

/// Pseudo-remainder of a by b over the integers (sign-insensitive; callers
/// re-normalize to primitive form).
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
    ztrim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lead = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        mpz_class top = a.back();
        for (auto& c : a) c *= lead;
        for (int j = 0; j <= db; ++j) {
            a[static_cast<std::size_t>(da - db + j)] -= top * b[static_cast<std::size_t>(j)];
        }
        ztrim(a);
    }
    return a;
}

Polynomial monic_from_integer(const ZPoly& p) {
    if (p.empty()) return Polynomial();
    std::vector<Rational> c;
    c.reserve(p.size());
    const mpz_class& lead = p.back();
    for (const auto& z : p) {
        Rational q(z, lead);
        q.canonicalize();
        c.push_back(std::move(q));
    }
    return Polynomial(std::move(c));
}

Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) return f;
    return f / f.leading_coefficient();
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    ZPoly f = to_primitive_integer(a);
    ZPoly g = to_primitive_integer(b);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        ZPoly r = pseudo_remainder(f, g);
        make_primitive(r);
        f = std::move(g);
        g = std::move(r);
    }
    return monic_from_integer(f);
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial g = gcd(a, b);
    Polynomial q = divmod(a, g).quotient;
    return monic(q * b);
}

Polynomial SquarefreeDecomposition::reconstruct() const {
    Polynomial out{constant};
    for (const auto& [factor, exponent] : factors) {
        out *= factor.pow(static_cast<unsigned>(exponent));
    }
    return out;
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw Error("ZeroPolynomial", "square-free decomposition of the zero polynomial");
    SquarefreeDecomposition out;
    out.constant = f.leading_coefficient();
    if (f.is_constant()) return out;
    Polynomial fm = monic(f);

    // Yun's algorithm over a characteristic-zero field.
    Polynomial d = fm.derivative();
    Polynomial g = gcd(fm, d);
    if (g.is_constant()) {
        out.factors.push_back({fm, 1});
        return out;
    }
    Polynomial w = divmod(fm, g).quotient;
    Polynomial y = divmod(d, g).quotient;
    Polynomial z = y - w.derivative();
    int i = 1;
    while (!w.is_constant()) {
        Polynomial h = gcd(w, z);
        if (!h.is_constant()) out.factors.push_back({h, i});
        w = divmod(w, h).quotient;
        y = divmod(z, h).quotient;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

EuclideanDivision euclidean_quotient(const Polynomial& f, const Rational& gamma, int power) {
    if (power < 1) throw Error("InvalidArgument", "euclidean_quotient requires power >= 1");
    EuclideanDivision out;
    Polynomial q = f;
    std::vector<Rational> shifted_rem; // remainder coefficients in the (t-gamma)^k basis
    shifted_rem.reserve(static_cast<std::size_t>(power));
    for (int k = 0; k < power; ++k) {
        // Synthetic division of q by (t - gamma).
        const auto& c = q.coefficients();
        if (c.empty()) {
            shifted_rem.push_back(Rational(0));
            continue;
        }
        std::vector<Rational> next(c.size() > 1 ? c.size() - 1 : 0, Rational(0));
        Rational acc(0);
        for (int j = static_cast<int>(c.size()) - 1; j >= 1; --j) {
            acc = acc * gamma + c[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j - 1)] = acc;
        }
        acc = acc * gamma + c[0];
        shifted_rem.push_back(std::move(acc));
        q = Polynomial(std::move(next));
    }
    out.quotient = std::move(q);

    Polynomial basis{Rational(1)};
    const Polynomial shift = Polynomial::variable() - Polynomial(gamma);
    Polynomial rem;
    for (std::size_t k = 0; k < shifted_rem.size(); ++k) {
        rem += basis * shifted_rem[k];
        if (k + 1 < shifted_rem.size()) basis *= shift;
    }
    out.remainder = std::move(rem);
    double mag = 0.0;
    for (const auto& c : out.remainder.coefficients()) {
        mag = std::max(mag, std::abs(c.get_d()));
    }
    out.remainder_max_abs = mag;
    return out;
}

} // namespace radrep
