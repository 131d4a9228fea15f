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

#ifndef RADREP_CURVE_HPP
#define RADREP_CURVE_HPP

#include <vector>

#include "radrep/quadrature.hpp"
#include "radrep/rational_function.hpp"
#include "radrep/roots.hpp"

namespace radrep {

/// Mean, variance and uniformity of the angular speed over [0, 1].
/// uniformity = 1/(1 + sigma2/mu^2) in (0, 1], and exactly 1 for straight
/// lines (mu == 0).
struct UniformityReport {
    double mu = 0.0; // mean angular speed, radians per unit parameter
    double sigma2 = 0.0;
    double uniformity = 1.0;
    double quad_error_bound = 0.0;
};

/// The data behind omega^2 = F / denom^2: the sum-of-squares numerator F,
/// denom = sum X_i^2, the cofactor zeta left after dividing the [0,1] zero
/// factors out of F, and those zeros themselves. zero_factors[i].multiplicity
/// stores mult(omega, t_i), i.e. half the multiplicity of the root in F.
struct AngularSpeedData {
    Polynomial F;
    Polynomial denom;
    Polynomial zeta;
    std::vector<IsolatedRoot> zero_factors;
};

struct CurveOptions {
    RootIsolationOptions roots;
};

/// Regular rational parametric curve in R^n, n >= 2, over the parameter
/// interval [0, 1]. Derivatives are held in the reduced form
/// p'(t) = (X_1/W, ..., X_n/W) with gcd(X_1, ..., X_n, W) constant, and the
/// angular speed is omega = sqrt(F)/denom with F = sum of squared Wronskian
/// minors and denom = sum X_i^2. Construction verifies that no coordinate
/// denominator and no point of denom vanishes inside [0, 1].
class ParametricCurve {
public:
    explicit ParametricCurve(std::vector<RationalFunction> coordinates, const CurveOptions& options = {});

    int dimension() const noexcept { return static_cast<int>(coords_.size()); }
    const std::vector<RationalFunction>& coordinates() const noexcept { return coords_; }
    const std::vector<Polynomial>& derivative_numerators() const noexcept { return X_; }
    const Polynomial& derivative_denominator() const noexcept { return W_; }

    /// F in omega = sqrt(F)/denom; the zero polynomial iff p is a line.
    const Polynomial& omega_numerator() const noexcept { return F_; }
    const Polynomial& omega_denominator() const noexcept { return denom_; }
    bool omega_is_zero() const noexcept { return F_.is_zero(); }

    std::vector<double> evaluate(double t) const;
    std::vector<Rational> evaluate_exact(const Rational& t) const;

private:
    std::vector<RationalFunction> coords_;
    std::vector<Polynomial> X_;
    Polynomial W_;
    Polynomial F_;
    Polynomial denom_;
};

/// omega^2 as a reduced rational function; omega itself is its nonnegative
/// square root.
RationalFunction angular_speed_squared(const ParametricCurve& p);

/// Pointwise nonnegative angular speed at t in [0, 1].
double evaluate_omega(const ParametricCurve& p, double t);

/// Zeros of omega over [0, 1] with multiplicities. Error "MalformedF" when a
/// real root of F inside [0,1] has odd multiplicity (F is a sum of squares,
/// so that indicates an arithmetic bug upstream), "DegenerateLine" when
/// omega is identically zero.
AngularSpeedData multiplicity_profile(const ParametricCurve& p, const CurveOptions& options = {});

/// Mean/variance/uniformity of omega by adaptive quadrature.
UniformityReport uniformity(const ParametricCurve& p, double tol = 1e-9);

} // namespace radrep

#endif
