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

#ifndef RADREP_QUADRATURE_HPP
#define RADREP_QUADRATURE_HPP

#include <functional>
#include <optional>

#include "radrep/errors.hpp"

namespace radrep {

/// Integrand for adaptive quadrature. An optional declaration marks one
/// endpoint near which the integrand behaves like |t - endpoint|^exponent;
/// exponents in (-1, 0) are removed by a power substitution before the
/// adaptive pass so the rule never chases an integrable blow-up.
struct Integrand {
    std::function<double(double)> evaluate;

    struct EndpointBehavior {
        double location;
        double exponent; // > -1
    };
    std::optional<EndpointBehavior> endpoint_behavior;

    Integrand() = default;
    Integrand(std::function<double(double)> f) : evaluate(std::move(f)) {}
    Integrand(std::function<double(double)> f, double endpoint, double exponent)
        : evaluate(std::move(f)), endpoint_behavior(EndpointBehavior{endpoint, exponent}) {}
};

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    long evaluations = 0;
    bool converged = true;
};

struct QuadratureOptions {
    long max_evaluations = 2000000;
    int max_depth = 55;
};

/// Adaptive Gauss-Kronrod 7/15 over [a, b]. The returned error bound
/// satisfies error_bound <= tol on success; on failure to converge within
/// budget a QuadratureError carrying the best estimate is thrown.
QuadratureResult integrate(const Integrand& f, double a, double b, double tol,
                           const QuadratureOptions& options = {});

/// Same rule, but non-convergence is reported in the result instead of
/// thrown, and the best estimate is kept.
QuadratureResult integrate_detail(const Integrand& f, double a, double b, double tol,
                                  const QuadratureOptions& options = {});

} // namespace radrep

#endif
