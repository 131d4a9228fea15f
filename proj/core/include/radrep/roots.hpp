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

#ifndef RADREP_ROOTS_HPP
#define RADREP_ROOTS_HPP

#include <vector>

#include "radrep/polynomial.hpp"

namespace radrep {

/// One isolated real root: an exact rational bracket certified (via Sturm
/// counts) to contain exactly this root, a rational approximation within the
/// requested tolerance, and the root's multiplicity in the source polynomial.
struct IsolatedRoot {
    Rational lower;       // bracket; lower == upper iff the root is exactly rational
    Rational upper;
    Rational approx;      // bracket midpoint (or the exact root)
    double refined_value; // to_double(approx)
    int multiplicity = 1;
    bool exact = false;
};

struct RootIsolationOptions {
    /// Target bracket width; refined_value then sits within half of this of
    /// the true root. Downstream quadrature at 1e-9 needs the headroom.
    Rational refine_tolerance = Rational(1, 1000000000000L); // 1e-12
};

/// All distinct real roots of f in the closed interval [a, b], ascending,
/// with multiplicities from the square-free decomposition. Interval
/// endpoints count as roots when f vanishes there. Error "ZeroPolynomial"
/// on the zero polynomial.
std::vector<IsolatedRoot> isolate_roots(const Polynomial& f, const Rational& a, const Rational& b,
                                        const RootIsolationOptions& options = {});

/// Number of distinct real roots of f in [a, b] (multiplicities ignored).
int count_distinct_roots(const Polynomial& f, const Rational& a, const Rational& b);

} // namespace radrep

#endif
