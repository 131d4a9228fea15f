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

#include "radrep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace radrep {

namespace {

// Kronrod-15 abscissae (positive half) and weights; rows 1,3,5,7 carry the
// embedded Gauss-7 rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Segment {
    double a, b;
    double value;
    double error;
    int depth;
};

struct SegmentWorse {
    bool operator()(const Segment& x, const Segment& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a; // deterministic tie-break
    }
};

Segment apply_gk15(const std::function<double(double)>& f, double a, double b, int depth, long& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fsum;
        if (i == 7) {
            fsum = f(center);
            ++evals;
        } else {
            const double dx = half * kXgk[i];
            fsum = f(center - dx) + f(center + dx);
            evals += 2;
        }
        kronrod += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    double err = std::abs(kronrod - gauss);
    if (!std::isfinite(kronrod)) err = std::numeric_limits<double>::infinity();
    return Segment{a, b, kronrod, err, depth};
}

QuadratureResult adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          const QuadratureOptions& options) {
    QuadratureResult result;
    if (a == b) return result;

    long evals = 0;
    std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> active;
    std::vector<Segment> frozen;
    active.push(apply_gk15(f, a, b, 0, evals));

    double total_error = active.top().error;
    auto frozen_error = [&frozen]() {
        double e = 0.0;
        for (const auto& s : frozen) e += s.error;
        return e;
    };

    while (total_error > tol && !active.empty()) {
        if (evals >= options.max_evaluations) break;
        Segment worst = active.top();
        active.pop();
        if (worst.depth >= options.max_depth || worst.b - worst.a <= 1e-300) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = apply_gk15(f, worst.a, mid, worst.depth + 1, evals);
        Segment right = apply_gk15(f, mid, worst.b, worst.depth + 1, evals);
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }

    double value = 0.0;
    double error = frozen_error();
    for (const auto& s : frozen) value += s.value;
    // Drain in deterministic (heap) order; summation order is fixed for a
    // given refinement history.
    std::vector<Segment> rest;
    while (!active.empty()) {
        rest.push_back(active.top());
        active.pop();
    }
    std::sort(rest.begin(), rest.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
    for (const auto& s : rest) {
        value += s.value;
        error += s.error;
    }

    result.value = value;
    result.error_bound = std::max(error, std::abs(value) * 16 * std::numeric_limits<double>::epsilon());
    result.evaluations = evals;
    result.converged = std::isfinite(value) && error <= tol;
    return result;
}

} // namespace

QuadratureResult integrate_detail(const Integrand& f, double a, double b, double tol,
                                  const QuadratureOptions& options) {
    if (!(a <= b)) throw Error("QuadratureError", "integration bounds must satisfy a <= b");
    if (!(tol > 0)) throw Error("QuadratureError", "tolerance must be positive");
    if (a == b) return QuadratureResult{};

    if (f.endpoint_behavior) {
        const auto& eb = *f.endpoint_behavior;
        if (eb.exponent <= -1.0) {
            throw Error("QuadratureError", "declared endpoint exponent is not integrable");
        }
        if (eb.exponent < 0.0) {
            // Substitute the singular endpoint away: with k = 1/(1+sigma),
            // t = endpoint +- u^k turns |t-endpoint|^sigma dt into a bounded
            // integrand in u.
            const double k = 1.0 / (1.0 + eb.exponent);
            const auto& inner = f.evaluate;
            const double len = b - a;
            const double upper = std::pow(len, 1.0 / k);
            std::function<double(double)> g;
            if (eb.location == a) {
                g = [inner, a, k](double u) { return inner(a + std::pow(u, k)) * k * std::pow(u, k - 1.0); };
            } else if (eb.location == b) {
                g = [inner, b, k](double u) { return inner(b - std::pow(u, k)) * k * std::pow(u, k - 1.0); };
            } else {
                // Declared point not an endpoint of this interval: integrate as is.
                return adaptive(f.evaluate, a, b, tol, options);
            }
            return adaptive(g, 0.0, upper, tol, options);
        }
    }
    return adaptive(f.evaluate, a, b, tol, options);
}

QuadratureResult integrate(const Integrand& f, double a, double b, double tol,
                           const QuadratureOptions& options) {
    QuadratureResult result = integrate_detail(f, a, b, tol, options);
    if (!result.converged) {
        throw QuadratureError("failed to reach tolerance within the evaluation budget",
                              result.value, result.error_bound);
    }
    return result;
}

} // namespace radrep
