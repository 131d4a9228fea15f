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

#include "radrep/curve.hpp"

#include <cmath>
#include <sstream>

namespace radrep {

namespace {

std::string bracket_message(const IsolatedRoot& root) {
    std::ostringstream os;
    os << "[" << to_double(root.lower) << ", " << to_double(root.upper) << "]";
    return os.str();
}

} // namespace

ParametricCurve::ParametricCurve(std::vector<RationalFunction> coordinates, const CurveOptions& options)
    : coords_(std::move(coordinates)) {
    if (coords_.size() < 2) {
        throw Error("InvalidCurve", "a parametric curve needs at least two coordinates");
    }

    const Rational zero(0);
    const Rational one(1);
    for (const auto& coordinate : coords_) {
        const Polynomial& den = coordinate.denominator();
        if (den.is_constant()) continue;
        auto poles = isolate_roots(den, zero, one, options.roots);
        if (!poles.empty()) {
            throw Error("SingularCurve",
                        "coordinate function has a pole in " + bracket_message(poles.front()));
        }
    }

    // p' = (X_1/W, ..., X_n/W) with gcd(X_1, ..., X_n, W) constant.
    std::vector<RationalFunction> derivatives;
    derivatives.reserve(coords_.size());
    Polynomial w{Rational(1)};
    for (const auto& coordinate : coords_) {
        derivatives.push_back(coordinate.derivative());
        w = lcm(w, derivatives.back().denominator());
    }
    W_ = w;
    X_.reserve(coords_.size());
    Polynomial common = W_;
    for (const auto& d : derivatives) {
        Polynomial scale = divmod(W_, d.denominator()).quotient;
        X_.push_back(d.numerator() * scale);
        common = gcd(common, X_.back());
    }
    if (!common.is_constant()) {
        W_ = divmod(W_, common).quotient;
        for (auto& x : X_) x = divmod(x, common).quotient;
    }

    // F = sum over i<j of (X_i' X_j - X_j' X_i)^2, denom = sum X_i^2.
    for (std::size_t i = 0; i < X_.size(); ++i) {
        for (std::size_t j = i + 1; j < X_.size(); ++j) {
            Polynomial minor = X_[i].derivative() * X_[j] - X_[j].derivative() * X_[i];
            F_ += minor * minor;
        }
        denom_ += X_[i] * X_[i];
    }

    if (denom_.is_zero()) {
        throw Error("SingularCurve", "the derivative vanishes identically");
    }
    if (!denom_.is_constant()) {
        auto singular = isolate_roots(denom_, zero, one, options.roots);
        if (!singular.empty()) {
            throw Error("SingularCurve",
                        "hodograph vanishes in " + bracket_message(singular.front()));
        }
    }
}

std::vector<double> ParametricCurve::evaluate(double t) const {
    std::vector<double> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c(t));
    return out;
}

std::vector<Rational> ParametricCurve::evaluate_exact(const Rational& t) const {
    std::vector<Rational> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c(t));
    return out;
}

RationalFunction angular_speed_squared(const ParametricCurve& p) {
    return RationalFunction(p.omega_numerator(), p.omega_denominator() * p.omega_denominator());
}

double evaluate_omega(const ParametricCurve& p, double t) {
    const double den = p.omega_denominator()(t);
    if (den == 0.0) throw Error("SingularCurve", "angular speed denominator vanishes");
    // F is a sum of squares; clip the rounding dust below zero.
    const double f = std::max(0.0, p.omega_numerator()(t));
    return std::sqrt(f) / den;
}

AngularSpeedData multiplicity_profile(const ParametricCurve& p, const CurveOptions& options) {
    if (p.omega_is_zero()) {
        throw Error("DegenerateLine", "angular speed is identically zero");
    }
    AngularSpeedData data;
    data.F = p.omega_numerator();
    data.denom = p.omega_denominator();

    const Rational zero(0);
    const Rational one(1);
    const SquarefreeDecomposition decomposition = squarefree_decomposition(data.F);
    for (const auto& [factor, exponent] : decomposition.factors) {
        auto roots = isolate_roots(factor, zero, one, options.roots);
        if (roots.empty()) continue;
        if (exponent % 2 != 0) {
            throw Error("MalformedF", "real zero of F in [0,1] with odd multiplicity " +
                                          std::to_string(exponent));
        }
        for (auto& root : roots) {
            root.multiplicity = exponent / 2; // mult(omega, root)
            data.zero_factors.push_back(root);
        }
    }
    std::sort(data.zero_factors.begin(), data.zero_factors.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.approx < b.approx; });

    data.zeta = data.F;
    for (const auto& root : data.zero_factors) {
        data.zeta = euclidean_quotient(data.zeta, root.approx, 2 * root.multiplicity).quotient;
    }
    return data;
}

UniformityReport uniformity(const ParametricCurve& p, double tol) {
    UniformityReport report;
    if (p.omega_is_zero()) {
        return report; // mu = 0, sigma2 = 0, uniformity = 1
    }

    const AngularSpeedData data = multiplicity_profile(p);
    std::vector<double> cuts{0.0};
    for (const auto& root : data.zero_factors) {
        if (root.refined_value > 0.0 && root.refined_value < 1.0) cuts.push_back(root.refined_value);
    }
    cuts.push_back(1.0);

    // omega is analytic between consecutive zeros, so integrate piecewise.
    const auto f_coeffs = p.omega_numerator().double_coefficients();
    const auto den_coeffs = p.omega_denominator().double_coefficients();
    Integrand omega{[&f_coeffs, &den_coeffs](double t) {
        return std::sqrt(std::max(0.0, horner(f_coeffs, t))) / horner(den_coeffs, t);
    }};
    Integrand omega_sq{[&f_coeffs, &den_coeffs](double t) {
        const double d = horner(den_coeffs, t);
        return std::max(0.0, horner(f_coeffs, t)) / (d * d);
    }};

    double mu = 0.0;
    double mu_err = 0.0;
    const double piece_tol = tol / (2.0 * static_cast<double>(cuts.size()));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto r = integrate(omega, cuts[i], cuts[i + 1], piece_tol);
        mu += r.value;
        mu_err += r.error_bound;
    }

    auto second = integrate(omega_sq, 0.0, 1.0, tol / 2.0);
    const double i2 = second.value;
    const double i2_err = second.error_bound;

    report.mu = mu;
    report.sigma2 = std::max(0.0, i2 - mu * mu);
    if (mu > 0.0 && i2 > 0.0) {
        // mu^2/I2 = 1/(1 + sigma^2/mu^2); clip quadrature dust above 1.
        report.uniformity = std::min(1.0, mu * mu / i2);
    } else {
        report.uniformity = 1.0;
    }
    // First-order propagation of the two quadrature bounds into u = mu^2/I2.
    if (i2 > 0.0) {
        report.quad_error_bound =
            (2.0 * mu / i2) * mu_err + (mu * mu / (i2 * i2)) * i2_err;
    }
    report.quad_error_bound = std::max(report.quad_error_bound, mu_err);
    return report;
}

} // namespace radrep
