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

#include "radrep/optimizer.hpp"

#include <cmath>

namespace radrep {

namespace {

// Discarded-remainder budget relative to the coefficient size of F. Roots
// refined to 1e-12 leave remainders orders of magnitude below this; hitting
// it means the root approximation cannot support the requested quadrature
// tolerance.
constexpr double kRemainderBudget = 1e-6;

double max_abs_coefficient(const Polynomial& f) {
    double mag = 0.0;
    for (const auto& c : f.coefficients()) mag = std::max(mag, std::abs(c.get_d()));
    return mag;
}

int zero_multiplicity(const Partition& T, int i, PieceKind kind) {
    return kind == PieceKind::left_zero ? T.multiplicities[static_cast<std::size_t>(i)]
                                        : T.multiplicities[static_cast<std::size_t>(i) + 1];
}

/// Integrand core Q(t) (t - g)^mu / denom(t)^2 for a left zero at g = t_lo
/// (mirrored for right zeros). The (t-g)^mu factor is exactly the surviving
/// part of (t-g)^(2 mu) / tt^mu after the Euclidean division of F.
struct StableCore {
    std::vector<double> q;
    std::vector<double> denom;
    double zero_point;
    int mu;

    double operator()(double t) const {
        const double d = horner(denom, t);
        double w = 1.0;
        const double offset = t - zero_point;
        for (int k = 0; k < mu; ++k) w *= offset;
        return horner(q, t) * std::abs(w) / (d * d);
    }
};

StableCore make_stable_core(const ParametricCurve& p, double zero_point, int mu) {
    const EuclideanDivision division =
        euclidean_quotient(p.omega_numerator(), rational_from_double(zero_point), 2 * mu);
    const double budget = kRemainderBudget * std::max(1.0, max_abs_coefficient(p.omega_numerator()));
    if (division.remainder_max_abs > budget) {
        throw Error("IllConditionedRoot",
                    "zero approximation too loose: remainder magnitude " +
                        std::to_string(division.remainder_max_abs));
    }
    return StableCore{division.quotient.double_coefficients(),
                      p.omega_denominator().double_coefficients(), zero_point, mu};
}

} // namespace

double stable_piece_integral(const ParametricCurve& p, const IsolatedRoot& root, double t_lo,
                             double t_hi, PieceKind kind, double tol) {
    if (kind == PieceKind::plain) {
        throw Error("InvalidArgument", "stable_piece_integral needs a zero-adjacent piece");
    }
    const int mu = root.multiplicity;
    const double zero_point = kind == PieceKind::left_zero ? t_lo : t_hi;
    const StableCore core = make_stable_core(p, zero_point, mu);
    const double dt = t_hi - t_lo;
    const double scale = std::pow(dt, mu + 1) / (mu + 1);
    auto result = integrate(Integrand{[core](double t) { return core(t); }}, t_lo, t_hi,
                            tol / std::max(1.0, scale));
    return scale * result.value;
}

double piece_L(const ParametricCurve& p, const Partition& T, int i, double tol) {
    const auto iu = static_cast<std::size_t>(i);
    const double t_lo = T.t_points[iu];
    const double t_hi = T.t_points[iu + 1];
    const PieceKind kind = T.piece_kinds[iu];

    if (kind == PieceKind::plain) {
        const auto f = p.omega_numerator().double_coefficients();
        const auto den = p.omega_denominator().double_coefficients();
        const double dt = t_hi - t_lo;
        auto result = integrate(Integrand{[f, den](double t) {
                                    const double d = horner(den, t);
                                    return std::max(0.0, horner(f, t)) / (d * d);
                                }},
                                t_lo, t_hi, tol / std::max(1.0, dt));
        return dt * result.value;
    }

    IsolatedRoot root;
    root.multiplicity = zero_multiplicity(T, i, kind);
    const std::size_t zero_index = kind == PieceKind::left_zero ? iu : iu + 1;
    root.approx = T.exact_points[zero_index];
    root.refined_value = T.t_points[zero_index];
    root.lower = root.upper = root.approx;
    return stable_piece_integral(p, root, t_lo, t_hi, kind, tol);
}

QuadratureResult naive_piece_L(const ParametricCurve& p, const Partition& T, int i, double tol,
                               const QuadratureOptions& options) {
    const auto iu = static_cast<std::size_t>(i);
    const double t_lo = T.t_points[iu];
    const double t_hi = T.t_points[iu + 1];
    const double dt = t_hi - t_lo;
    const PieceKind kind = T.piece_kinds[iu];
    const auto f = p.omega_numerator().double_coefficients();
    const auto den = p.omega_denominator().double_coefficients();

    auto omega_sq = [f, den](double t) {
        const double d = horner(den, t);
        return std::max(0.0, horner(f, t)) / (d * d);
    };

    QuadratureResult result;
    if (kind == PieceKind::plain) {
        result = integrate_detail(Integrand{omega_sq}, t_lo, t_hi, tol / std::max(1.0, dt), options);
    } else {
        const int mu = zero_multiplicity(T, i, kind);
        const bool left = kind == PieceKind::left_zero;
        Integrand integrand{[omega_sq, t_lo, t_hi, dt, mu, left](double t) {
            const double tt = left ? (t - t_lo) / dt : (t_hi - t) / dt;
            return omega_sq(t) / ((mu + 1) * std::pow(tt, mu));
        }};
        result = integrate_detail(integrand, t_lo, t_hi, tol / std::max(1.0, dt), options);
    }
    result.value *= dt;
    result.error_bound *= dt;
    return result;
}

MoebiusPieceIntegrals piece_ABC(const ParametricCurve& p, const Partition& T,
                                std::span<const double> S, int i, double tol) {
    const auto iu = static_cast<std::size_t>(i);
    const double t_lo = T.t_points[iu];
    const double t_hi = T.t_points[iu + 1];
    const double dt = t_hi - t_lo;
    const double ds = S[iu + 1] - S[iu];
    const PieceKind kind = T.piece_kinds[iu];

    const auto f = p.omega_numerator().double_coefficients();
    const auto den = p.omega_denominator().double_coefficients();
    auto omega_sq = [f, den](double t) {
        const double d = horner(den, t);
        return std::max(0.0, horner(f, t)) / (d * d);
    };
    auto tt_of = [t_lo, dt](double t) { return (t - t_lo) / dt; };

    const double piece_tol = tol / std::max(1.0, dt);
    MoebiusPieceIntegrals out{};

    if (kind == PieceKind::plain) {
        const double pref = dt / ds;
        out.A = pref * integrate(Integrand{[omega_sq, tt_of](double t) {
                           const double u = 1.0 - tt_of(t);
                           return omega_sq(t) * u * u;
                       }},
                                 t_lo, t_hi, piece_tol)
                           .value;
        out.B = pref * integrate(Integrand{[omega_sq, tt_of](double t) {
                           const double u = tt_of(t);
                           return omega_sq(t) * 2.0 * u * (1.0 - u);
                       }},
                                 t_lo, t_hi, piece_tol)
                           .value;
        out.C = pref * integrate(Integrand{[omega_sq, tt_of](double t) {
                           const double u = tt_of(t);
                           return omega_sq(t) * u * u;
                       }},
                                 t_lo, t_hi, piece_tol)
                           .value;
        return out;
    }

    if (kind == PieceKind::left_zero) {
        const int mu = zero_multiplicity(T, i, kind);
        const double kd = mu + 1;
        const StableCore core = make_stable_core(p, t_lo, mu);
        const double stable_scale = std::pow(dt, mu + 1) / (kd * ds);
        // A_i carries the 1/tt^mu weight; B_i and C_i only multiply by smooth
        // powers of tt, so the plain omega^2 evaluation is already stable.
        out.A = stable_scale * integrate(Integrand{[core, tt_of, kd](double t) {
                                    const double w = 1.0 - std::pow(tt_of(t), kd);
                                    return core(t) * w * w;
                                }},
                                         t_lo, t_hi, piece_tol)
                                   .value;
        const double pref = dt / (ds * kd);
        out.B = pref * integrate(Integrand{[omega_sq, tt_of, kd](double t) {
                           const double u = tt_of(t);
                           return omega_sq(t) * 2.0 * u * (1.0 - std::pow(u, kd));
                       }},
                                 t_lo, t_hi, piece_tol)
                           .value;
        out.C = pref * integrate(Integrand{[omega_sq, tt_of, mu](double t) {
                           return omega_sq(t) * std::pow(tt_of(t), mu + 2);
                       }},
                                 t_lo, t_hi, piece_tol)
                           .value;
        return out;
    }

    // right_zero
    const int mu = zero_multiplicity(T, i, kind);
    const double kd = mu + 1;
    const StableCore core = make_stable_core(p, t_hi, mu);
    const double pref = dt / (ds * kd);
    out.A = pref * integrate(Integrand{[omega_sq, tt_of, mu](double t) {
                       return omega_sq(t) * std::pow(1.0 - tt_of(t), mu + 2);
                   }},
                             t_lo, t_hi, piece_tol)
                       .value;
    out.B = pref * integrate(Integrand{[omega_sq, tt_of, kd](double t) {
                       const double v = 1.0 - tt_of(t);
                       return omega_sq(t) * 2.0 * (1.0 - std::pow(v, kd)) * v;
                   }},
                             t_lo, t_hi, piece_tol)
                       .value;
    const double stable_scale = std::pow(dt, mu + 1) / (kd * ds);
    out.C = stable_scale * integrate(Integrand{[core, tt_of, kd](double t) {
                                const double w = 1.0 - std::pow(1.0 - tt_of(t), kd);
                                return core(t) * w * w;
                            }},
                                     t_lo, t_hi, piece_tol)
                               .value;
    return out;
}

std::vector<double> optimal_S(const ParametricCurve& p, const Partition& T, double tol) {
    const int n = T.piece_count();
    std::vector<double> sqrt_l(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double l = piece_L(p, T, i, tol);
        if (!(l > 0.0)) {
            throw Error("DegeneratePiece", "nonpositive piece integral L");
        }
        sqrt_l[static_cast<std::size_t>(i)] = std::sqrt(l);
    }
    double total = 0.0;
    for (double v : sqrt_l) total += v;

    std::vector<double> s(static_cast<std::size_t>(n) + 1);
    s[0] = 0.0;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += sqrt_l[static_cast<std::size_t>(i)];
        s[static_cast<std::size_t>(i) + 1] = acc / total;
    }
    s.back() = 1.0;
    return s;
}

PieceIntegrals compute_piece_integrals(const ParametricCurve& p, const Partition& T,
                                       std::span<const double> S, double tol) {
    PieceIntegrals out;
    const int n = T.piece_count();
    out.L.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.L.push_back(piece_L(p, T, i, tol));
        const MoebiusPieceIntegrals abc = piece_ABC(p, T, S, i, tol);
        out.A.push_back(abc.A);
        out.B.push_back(abc.B);
        out.C.push_back(abc.C);
        const double ds = S[static_cast<std::size_t>(i) + 1] - S[static_cast<std::size_t>(i)];
        out.M.push_back(ds * (2.0 * std::sqrt(abc.A * abc.C) + abc.B));
    }
    return out;
}

OptimizationResult optimal_alpha_Z(const PieceIntegrals& integrals, std::span<const double> S,
                                   double mu_p) {
    const std::size_t n = integrals.A.size();
    OptimizationResult out;
    out.S_star.assign(S.begin(), S.end());
    out.alpha_star.reserve(n);

    double sum_sqrt_l = 0.0;
    for (double l : integrals.L) {
        if (!(l > 0.0)) throw Error("DegeneratePiece", "nonpositive piece integral L");
        sum_sqrt_l += std::sqrt(l);
    }

    std::vector<double> sqrt_m(n);
    double sum_sqrt_m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = integrals.A[i];
        const double c = integrals.C[i];
        if (!(a > 0.0) || !(c > 0.0)) {
            throw Error("DegeneratePiece", "nonpositive Moebius piece integral");
        }
        out.alpha_star.push_back(1.0 / (1.0 + std::sqrt(c / a)));
        sqrt_m[i] = std::sqrt(integrals.M[i]);
        sum_sqrt_m += sqrt_m[i];
    }

    out.Z_star.resize(n + 1);
    out.Z_star[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += sqrt_m[i];
        out.Z_star[i + 1] = acc / sum_sqrt_m;
    }
    out.Z_star.back() = 1.0;

    out.eta_phi = sum_sqrt_l * sum_sqrt_l;
    out.eta_m = sum_sqrt_m * sum_sqrt_m;
    out.u_after_phi = mu_p * mu_p / out.eta_phi;
    out.u_after_m = mu_p * mu_p / out.eta_m;
    return out;
}

double eta_phi(std::span<const double> L, std::span<const double> S) {
    double eta = 0.0;
    for (std::size_t i = 0; i < L.size(); ++i) {
        eta += L[i] / (S[i + 1] - S[i]);
    }
    return eta;
}

double eta_moebius(const PieceIntegrals& integrals, std::span<const double> S,
                   std::span<const double> Z, std::span<const double> alpha) {
    double eta = 0.0;
    for (std::size_t i = 0; i < integrals.A.size(); ++i) {
        const double ds = S[i + 1] - S[i];
        const double dz = Z[i + 1] - Z[i];
        const double a = alpha[i];
        const double numerator = (1.0 - a) * (1.0 - a) * integrals.A[i] +
                                 a * (1.0 - a) * integrals.B[i] + a * a * integrals.C[i];
        eta += ds / dz * numerator / (a * (1.0 - a));
    }
    return eta;
}

} // namespace radrep
