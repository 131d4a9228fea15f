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

#ifndef RADREP_TRANSFORMS_HPP
#define RADREP_TRANSFORMS_HPP

#include <span>
#include <variant>
#include <vector>

#include "radrep/partition.hpp"

namespace radrep {

/// One radical piece of phi mapping [s_lo, s_hi] onto [t_lo, t_hi]. With
/// st = (s - s_lo)/(s_hi - s_lo) and k = radical_index:
///   left_zero:  t_lo + dt * st^(1/k)
///   right_zero: t_lo + dt * (1 - (1 - st)^(1/k))
///   plain:      t_lo + dt * st              (k == 1)
/// k = mult(omega, zero endpoint) + 1 cancels the zero of the composed
/// angular speed.
struct RadicalPiece {
    PieceKind kind = PieceKind::plain;
    double t_lo = 0.0, t_hi = 1.0;
    double s_lo = 0.0, s_hi = 1.0;
    int radical_index = 1; // mu + 1; 1 exactly for plain pieces
};

/// One Moebius piece mapping [z_lo, z_hi] onto [s_lo, s_hi]:
///   s_lo + ds * (1-alpha) zt / ((1-alpha) zt + alpha (1-zt)),
/// zt = (z - z_lo)/(z_hi - z_lo). Strictly increasing for alpha in (0,1);
/// alpha = 1/2 degenerates to the affine map.
struct MoebiusPiece {
    double z_lo = 0.0, z_hi = 1.0;
    double s_lo = 0.0, s_hi = 1.0;
    double alpha = 0.5;
};

/// Radical piece applied after a Moebius piece: z -> t over [z_lo, z_hi].
struct ComposedPiece {
    MoebiusPiece inner;
    RadicalPiece outer;
};

using TransformPiece = std::variant<RadicalPiece, MoebiusPiece, ComposedPiece>;

double piece_domain_lo(const TransformPiece& piece);
double piece_domain_hi(const TransformPiece& piece);
double piece_range_lo(const TransformPiece& piece);
double piece_range_hi(const TransformPiece& piece);

enum class Side { left, right };

/// C0, strictly increasing piecewise bijection of [0, 1] onto [0, 1].
/// Breakpoints are mapped bit-exactly; evaluation picks the piece on the
/// right of a shared breakpoint (the left at x == 1).
class PiecewiseTransform {
public:
    static PiecewiseTransform identity();
    explicit PiecewiseTransform(std::vector<TransformPiece> pieces);

    const std::vector<TransformPiece>& pieces() const noexcept { return pieces_; }
    const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
    std::vector<double> range_breakpoints() const;
    std::size_t piece_index(double x) const;

    double operator()(double x) const;

    /// Derivative of the active piece; the overload lets the caller pick the
    /// piece at a shared breakpoint. Error "SingularDerivative" exactly at a
    /// radical piece's zero endpoint, where it diverges.
    double derivative(double x) const;
    double derivative(double x, Side side) const;

    /// Inverse map [0,1] -> [0,1] (closed forms per piece).
    double inverse(double y) const;

private:
    std::vector<TransformPiece> pieces_;
    std::vector<double> breakpoints_;
};

/// phi from the partition T and breakpoints S (|S| == |T.t_points|,
/// strictly increasing, S0 = 0, S_N = 1). Error "InvalidBreakpoints".
PiecewiseTransform build_radical(const Partition& T, std::span<const double> S);

/// m from S, Z and alpha (|Z| == |S|, |alpha| == |S|-1). Errors
/// "InvalidBreakpoints" / "InvalidAlpha".
PiecewiseTransform build_moebius(std::span<const double> S, std::span<const double> Z,
                                 std::span<const double> alpha);

/// r = phi o m; m's range pieces must match phi's domain pieces one for one
/// (error "PieceMismatch"). Breakpoints of r are m's domain breakpoints.
PiecewiseTransform compose(const PiecewiseTransform& phi, const PiecewiseTransform& m);

/// Free-function spellings of evaluation.
double evaluate(const PiecewiseTransform& tr, double x);
double evaluate_derivative(const PiecewiseTransform& tr, double x);
double evaluate_derivative(const PiecewiseTransform& tr, double x, Side side);

/// Angular speed of p o tr, evaluated through the cancelled closed form on
/// radical pieces: on a piece whose endpoint is a zero of omega of
/// multiplicity mu,
///   omega_{p o phi}(s) = dt^(mu+1) / ((mu+1) ds) * zeta(t),
/// where zeta(t) = sqrt(Q(t))/denom(t) and Q is the Euclidean quotient of F
/// by (t - t_zero)^(2 mu). The 0 * inf product of the naive chain rule never
/// forms, so the value is finite and positive at the zero itself.
class ReparameterizedSpeed {
public:
    ReparameterizedSpeed(const ParametricCurve& p, const PiecewiseTransform& tr);

    /// Value at x using the breakpoint convention of the transform (right
    /// piece at interior breakpoints, left piece at x == 1).
    double operator()(double x) const;

    /// One-sided value at a breakpoint; elsewhere both sides agree.
    double value(double x, Side side) const;

private:
    struct PieceSpeed {
        double scale = 1.0;          // dt^(mu+1)/((mu+1) ds) on zero pieces, dt/ds on plain
        std::vector<double> q;       // Q coefficients (zero pieces only)
        bool has_zero = false;
    };

    double piece_value(std::size_t index, double x) const;

    const PiecewiseTransform* transform_;
    std::vector<double> f_;     // F coefficients
    std::vector<double> denom_; // denom coefficients
    std::vector<PieceSpeed> piece_data_;
};

double reparameterized_omega(const ParametricCurve& p, const PiecewiseTransform& tr, double x);

} // namespace radrep

#endif
