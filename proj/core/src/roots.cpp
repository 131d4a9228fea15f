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

#include "radrep/roots.hpp"

#include <algorithm>

#include "radrep/errors.hpp"

namespace radrep {

namespace {

/// Scales a nonzero polynomial by a positive rational so that its
/// coefficients are coprime integers. Positive scaling preserves the sign
/// pattern, which is all a Sturm chain cares about.
Polynomial positive_primitive(const Polynomial& f) {
    if (f.is_zero()) return f;
    mpz_class den_lcm(1);
    for (const auto& c : f.coefficients()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    mpz_class num_gcd(0);
    for (const auto& c : f.coefficients()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    return f * scale;
}

using Chain = std::vector<Polynomial>;

Chain sturm_chain(const Polynomial& squarefree) {
    Chain chain;
    chain.push_back(positive_primitive(squarefree));
    Polynomial d = squarefree.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(positive_primitive(d));
    while (true) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

int sign_variations(const Chain& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = sgn(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

/// Roots of the (square-free) chain head in the open interval (a, b),
/// assuming the head does not vanish at a or b.
int open_interval_count(const Chain& chain, const Rational& a, const Rational& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

/// Shrinks a sign-change bracket around the single root inside it.
void refine_bracket(const Polynomial& g, Rational& lo, Rational& hi, const Rational& tol) {
    int sign_lo = sgn(g(lo));
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        const int sign_mid = sgn(g(mid));
        if (sign_mid == 0) {
            lo = mid;
            hi = mid;
            return;
        }
        if (sign_mid == sign_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

struct Isolator {
    const Polynomial& g; // square-free, nonzero at the outer endpoints
    const Chain chain;
    const Rational& tol;
    std::vector<IsolatedRoot>& out;
    int multiplicity;

    void emit_exact(const Rational& root) {
        IsolatedRoot r;
        r.lower = root;
        r.upper = root;
        r.approx = root;
        r.refined_value = to_double(root);
        r.multiplicity = multiplicity;
        r.exact = true;
        out.push_back(std::move(r));
    }

    void emit_bracket(Rational lo, Rational hi) {
        refine_bracket(g, lo, hi, tol);
        IsolatedRoot r;
        r.lower = lo;
        r.upper = hi;
        r.approx = (lo + hi) / 2;
        r.refined_value = to_double(r.approx);
        r.multiplicity = multiplicity;
        r.exact = (lo == hi);
        if (r.exact) r.approx = lo;
        out.push_back(std::move(r));
    }

    void isolate(const Rational& a, const Rational& b) {
        const int n = open_interval_count(chain, a, b);
        if (n == 0) return;
        if (n == 1) {
            emit_bracket(a, b);
            return;
        }
        Rational mid = (a + b) / 2;
        if (g(mid) == 0) {
            emit_exact(mid);
            // Step far enough off the root that the two recursions see
            // disjoint root sets.
            Rational delta = (b - a) / 4;
            while (true) {
                const Rational lo = mid - delta;
                const Rational hi = mid + delta;
                if (g(lo) != 0 && g(hi) != 0 && open_interval_count(chain, lo, hi) == 1) {
                    isolate(a, lo);
                    isolate(hi, b);
                    return;
                }
                delta /= 2;
            }
        }
        isolate(a, mid);
        isolate(mid, b);
    }
};

} // namespace

std::vector<IsolatedRoot> isolate_roots(const Polynomial& f, const Rational& a, const Rational& b,
                                        const RootIsolationOptions& options) {
    if (f.is_zero()) throw Error("ZeroPolynomial", "cannot isolate roots of the zero polynomial");
    std::vector<IsolatedRoot> out;
    if (f.is_constant() || a > b) return out;

    const SquarefreeDecomposition decomposition = squarefree_decomposition(f);
    for (const auto& [factor, exponent] : decomposition.factors) {
        Polynomial g = factor;
        if (g.degree() == 1) {
            // Linear factors have exact rational roots; skip the bisection.
            Rational root = -g.coeff(0) / g.coeff(1);
            if (root >= a && root <= b) {
                IsolatedRoot r;
                r.lower = r.upper = r.approx = root;
                r.refined_value = to_double(root);
                r.multiplicity = exponent;
                r.exact = true;
                out.push_back(std::move(r));
            }
            continue;
        }
        // Peel endpoint roots off so Sturm counts stay clean on (a, b).
        if (g(a) == 0) {
            IsolatedRoot r;
            r.lower = r.upper = r.approx = a;
            r.refined_value = to_double(a);
            r.multiplicity = exponent;
            r.exact = true;
            out.push_back(std::move(r));
            g = divmod(g, Polynomial::variable() - Polynomial(a)).quotient;
        }
        if (!g.is_constant() && g(b) == 0) {
            IsolatedRoot r;
            r.lower = r.upper = r.approx = b;
            r.refined_value = to_double(b);
            r.multiplicity = exponent;
            r.exact = true;
            out.push_back(std::move(r));
            g = divmod(g, Polynomial::variable() - Polynomial(b)).quotient;
        }
        if (g.is_constant() || a == b) continue;
        Isolator isolator{g, sturm_chain(g), options.refine_tolerance, out, exponent};
        isolator.isolate(a, b);
    }

    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.approx < y.approx; });
    return out;
}

int count_distinct_roots(const Polynomial& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw Error("ZeroPolynomial", "cannot count roots of the zero polynomial");
    if (f.is_constant() || a > b) return 0;

    // Square-free part, so the chain certification applies.
    Polynomial g = divmod(f, gcd(f, f.derivative())).quotient;
    int count = 0;
    if (g(a) == 0) {
        ++count;
        g = divmod(g, Polynomial::variable() - Polynomial(a)).quotient;
    }
    if (a != b && !g.is_constant() && g(b) == 0) {
        ++count;
        g = divmod(g, Polynomial::variable() - Polynomial(b)).quotient;
    }
    if (g.is_constant() || a == b) return count;
    return count + open_interval_count(sturm_chain(g), a, b);
}

} // namespace radrep
