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

#ifndef RADREP_OPTIMIZER_HPP
#define RADREP_OPTIMIZER_HPP

#include <span>
#include <vector>

#include "radrep/partition.hpp"
#include "radrep/transforms.hpp"

namespace radrep {

/// Per-piece integrals driving both optimization stages.
/// L_k feeds the optimal radical breakpoints S*; A/B/C/M feed the optimal
/// Moebius parameters alpha*, Z*. All are positive on non-degenerate pieces
/// (B may be zero only in degenerate limits).
struct PieceIntegrals {
    std::vector<double> L;
    std::vector<double> A;
    std::vector<double> B;
    std::vector<double> C;
    std::vector<double> M; // M_k = ds_k * (2 sqrt(A_k C_k) + B_k)
};

struct OptimizationResult {
    std::vector<double> S_star;
    std::vector<double> Z_star;
    std::vector<double> alpha_star;
    double u_after_phi = 1.0; // mu^2 / (sum sqrt L)^2
    double u_after_m = 1.0;   // mu^2 / (sum sqrt M)^2
    double eta_phi = 0.0;     // (sum sqrt L)^2
    double eta_m = 0.0;       // (sum sqrt M)^2
};

/// The weighted angular-speed energy of piece i:
///   left zero :  dt * Int omega^2 / ((mu+1) tt^mu)
///   right zero:  dt * Int omega^2 / ((mu+1) (1-tt)^mu)
///   plain     :  dt * Int omega^2
/// Zero-adjacent pieces route through stable_piece_integral.
double piece_L(const ParametricCurve& p, const Partition& T, int i, double tol = 1e-9);

/// The same integral evaluated directly from the singular-weight form, with
/// no Euclidean-quotient stabilization. Reference path: sound when the zero
/// endpoint is exactly rational, numerically explosive otherwise. Failure is
/// reported in the result, not thrown.
QuadratureResult naive_piece_L(const ParametricCurve& p, const Partition& T, int i, double tol = 1e-9,
                               const QuadratureOptions& options = {});

/// Singular-weight piece integral stabilized per the Euclidean-quotient
/// construction: with G/H = omega^2 and G = (t-g)^(2 mu) Q + R at the zero
/// endpoint g, the integrand becomes Q(t) (t-g)^mu / H(t), finite on the
/// closed piece. Error "IllConditionedRoot" when the discarded remainder is
/// too large for the requested tolerance.
double stable_piece_integral(const ParametricCurve& p, const IsolatedRoot& root, double t_lo,
                             double t_hi, PieceKind kind, double tol = 1e-9);

struct MoebiusPieceIntegrals {
    double A;
    double B;
    double C;
};

/// A_i, B_i, C_i of piece i computed directly from p via the pulled-back
/// t-domain formulas (no radical composition is ever integrated).
MoebiusPieceIntegrals piece_ABC(const ParametricCurve& p, const Partition& T,
                                std::span<const double> S, int i, double tol = 1e-9);

/// Optimal radical breakpoints: s_i* = sum_{k<i} sqrt(L_k) / sum_k sqrt(L_k).
/// Error "DegeneratePiece" if some L_k <= 0.
std::vector<double> optimal_S(const ParametricCurve& p, const Partition& T, double tol = 1e-9);

/// All piece integrals for a fixed T and S.
PieceIntegrals compute_piece_integrals(const ParametricCurve& p, const Partition& T,
                                       std::span<const double> S, double tol = 1e-9);

/// Optimal Moebius data for fixed S: alpha_i* = 1/(1 + sqrt(C_i/A_i)),
/// z_i* = sum_{k<i} sqrt(M_k) / sum_k sqrt(M_k), and the closed-form
/// uniformities u = mu^2/(sum sqrt .)^2. Error "DegeneratePiece" when some
/// A or C is nonpositive.
OptimizationResult optimal_alpha_Z(const PieceIntegrals& integrals, std::span<const double> S,
                                   double mu_p);

/// eta of the radical stage for arbitrary S: sum L_i / ds_i.
double eta_phi(std::span<const double> L, std::span<const double> S);

/// eta of the Moebius stage for arbitrary Z and alpha:
///   sum (ds_i/dz_i) * [(1-a)^2 A + a(1-a) B + a^2 C] / (a (1-a)).
/// At alpha* and Z* this collapses to (sum sqrt M)^2.
double eta_moebius(const PieceIntegrals& integrals, std::span<const double> S,
                   std::span<const double> Z, std::span<const double> alpha);

} // namespace radrep

#endif
