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

#ifndef RADREP_RATIONAL_HPP
#define RADREP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "radrep/errors.hpp"

namespace radrep {

/// Exact arbitrary-precision rational. All coefficient arithmetic in the
/// algebra layer runs on this type; doubles appear only in refined root
/// values and quadrature.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    Rational q(x);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    Rational acc = base;
    unsigned e = exponent;
    while (e != 0) {
        if (e & 1u) out *= acc;
        acc *= acc;
        e >>= 1u;
    }
    return out;
}

/// Parses "123", "-7", "2/5", "0.25", "1.5e-3" exactly. Decimal and
/// exponent forms become the exact rational they denote.
Rational rational_from_string(const std::string& text);

} // namespace radrep

#endif
