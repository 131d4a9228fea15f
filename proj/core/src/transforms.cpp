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

#include "radrep/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace radrep {

namespace {

constexpr double kBreakpointTol = 1e-12;

double radical_eval(const RadicalPiece& piece, double s) {
    if (s <= piece.s_lo) return piece.t_lo;
    if (s >= piece.s_hi) return piece.t_hi;
    const double ds = piece.s_hi - piece.s_lo;
    const double dt = piece.t_hi - piece.t_lo;
    const double st = (s - piece.s_lo) / ds;
    switch (piece.kind) {
        case PieceKind::left_zero:
            return piece.t_lo + dt * std::pow(st, 1.0 / piece.radical_index);
        case PieceKind::right_zero:
            return piece.t_lo + dt * (1.0 - std::pow(1.0 - st, 1.0 / piece.radical_index));
        case PieceKind::plain:
            return piece.t_lo + dt * st;
    }
    return piece.t_lo;
}

double radical_derivative(const RadicalPiece& piece, double s) {
    const double ds = piece.s_hi - piece.s_lo;
    const double dt = piece.t_hi - piece.t_lo;
    const double st = std::clamp((s - piece.s_lo) / ds, 0.0, 1.0);
    const double k = piece.radical_index;
    switch (piece.kind) {
        case PieceKind::left_zero:
            if (st == 0.0) {
                throw Error("SingularDerivative", "radical derivative diverges at the zero endpoint");
            }
            return dt / (k * ds) * std::pow(st, 1.0 / k - 1.0);
        case PieceKind::right_zero:
            if (st == 1.0) {
                throw Error("SingularDerivative", "radical derivative diverges at the zero endpoint");
            }
            return dt / (k * ds) * std::pow(1.0 - st, 1.0 / k - 1.0);
        case PieceKind::plain:
            return dt / ds;
    }
    return dt / ds;
}

double radical_inverse(const RadicalPiece& piece, double t) {
    if (t <= piece.t_lo) return piece.s_lo;
    if (t >= piece.t_hi) return piece.s_hi;
    const double ds = piece.s_hi - piece.s_lo;
    const double dt = piece.t_hi - piece.t_lo;
    const double tt = (t - piece.t_lo) / dt;
    const double k = piece.radical_index;
    switch (piece.kind) {
        case PieceKind::left_zero:
            return piece.s_lo + ds * std::pow(tt, k);
        case PieceKind::right_zero:
            return piece.s_lo + ds * (1.0 - std::pow(1.0 - tt, k));
        case PieceKind::plain:
            return piece.s_lo + ds * tt;
    }
    return piece.s_lo;
}

double moebius_eval(const MoebiusPiece& piece, double z) {
    if (z <= piece.z_lo) return piece.s_lo;
    if (z >= piece.z_hi) return piece.s_hi;
    const double zt = (z - piece.z_lo) / (piece.z_hi - piece.z_lo);
    const double a = piece.alpha;
    const double numerator = (1.0 - a) * zt;
    return piece.s_lo + (piece.s_hi - piece.s_lo) * numerator / (numerator + a * (1.0 - zt));
}

double moebius_derivative(const MoebiusPiece& piece, double z) {
    const double dz = piece.z_hi - piece.z_lo;
    const double ds = piece.s_hi - piece.s_lo;
    const double zt = std::clamp((z - piece.z_lo) / dz, 0.0, 1.0);
    const double a = piece.alpha;
    const double d = (1.0 - a) * zt + a * (1.0 - zt);
    return ds / dz * a * (1.0 - a) / (d * d);
}

double moebius_inverse(const MoebiusPiece& piece, double s) {
    if (s <= piece.s_lo) return piece.z_lo;
    if (s >= piece.s_hi) return piece.z_hi;
    const double st = (s - piece.s_lo) / (piece.s_hi - piece.s_lo);
    const double a = piece.alpha;
    const double e = (1.0 - a) * (1.0 - st) + a * st;
    return piece.z_lo + (piece.z_hi - piece.z_lo) * a * st / e;
}

struct DomainLo {
    double operator()(const RadicalPiece& p) const { return p.s_lo; }
    double operator()(const MoebiusPiece& p) const { return p.z_lo; }
    double operator()(const ComposedPiece& p) const { return p.inner.z_lo; }
};
struct DomainHi {
    double operator()(const RadicalPiece& p) const { return p.s_hi; }
    double operator()(const MoebiusPiece& p) const { return p.z_hi; }
    double operator()(const ComposedPiece& p) const { return p.inner.z_hi; }
};
struct RangeLo {
    double operator()(const RadicalPiece& p) const { return p.t_lo; }
    double operator()(const MoebiusPiece& p) const { return p.s_lo; }
    double operator()(const ComposedPiece& p) const { return p.outer.t_lo; }
};
struct RangeHi {
    double operator()(const RadicalPiece& p) const { return p.t_hi; }
    double operator()(const MoebiusPiece& p) const { return p.s_hi; }
    double operator()(const ComposedPiece& p) const { return p.outer.t_hi; }
};

double eval_piece(const TransformPiece& piece, double x) {
    return std::visit(
        [x](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RadicalPiece>) {
                return radical_eval(p, x);
            } else if constexpr (std::is_same_v<T, MoebiusPiece>) {
                return moebius_eval(p, x);
            } else {
                return radical_eval(p.outer, moebius_eval(p.inner, x));
            }
        },
        piece);
}

double derivative_piece(const TransformPiece& piece, double x) {
    return std::visit(
        [x](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RadicalPiece>) {
                return radical_derivative(p, x);
            } else if constexpr (std::is_same_v<T, MoebiusPiece>) {
                return moebius_derivative(p, x);
            } else {
                const double s = moebius_eval(p.inner, x);
                return radical_derivative(p.outer, s) * moebius_derivative(p.inner, x);
            }
        },
        piece);
}

double inverse_piece(const TransformPiece& piece, double y) {
    return std::visit(
        [y](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RadicalPiece>) {
                return radical_inverse(p, y);
            } else if constexpr (std::is_same_v<T, MoebiusPiece>) {
                return moebius_inverse(p, y);
            } else {
                return moebius_inverse(p.inner, radical_inverse(p.outer, y));
            }
        },
        piece);
}

} // namespace

double piece_domain_lo(const TransformPiece& piece) { return std::visit(DomainLo{}, piece); }
double piece_domain_hi(const TransformPiece& piece) { return std::visit(DomainHi{}, piece); }
double piece_range_lo(const TransformPiece& piece) { return std::visit(RangeLo{}, piece); }
double piece_range_hi(const TransformPiece& piece) { return std::visit(RangeHi{}, piece); }

PiecewiseTransform PiecewiseTransform::identity() {
    return PiecewiseTransform({TransformPiece{RadicalPiece{}}});
}

PiecewiseTransform::PiecewiseTransform(std::vector<TransformPiece> pieces)
    : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw Error("InvalidBreakpoints", "a transform needs at least one piece");
    breakpoints_.push_back(piece_domain_lo(pieces_.front()));
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const double lo = piece_domain_lo(pieces_[i]);
        const double hi = piece_domain_hi(pieces_[i]);
        if (!(lo < hi)) throw Error("InvalidBreakpoints", "piece domain is not increasing");
        if (std::abs(lo - breakpoints_.back()) > kBreakpointTol) {
            throw Error("InvalidBreakpoints", "piece domains do not chain");
        }
        if (i > 0 && std::abs(piece_range_lo(pieces_[i]) - piece_range_hi(pieces_[i - 1])) >
                         kBreakpointTol) {
            throw Error("InvalidBreakpoints", "piece ranges do not chain (transform not continuous)");
        }
        breakpoints_.push_back(hi);
    }
}

std::vector<double> PiecewiseTransform::range_breakpoints() const {
    std::vector<double> out;
    out.reserve(pieces_.size() + 1);
    out.push_back(piece_range_lo(pieces_.front()));
    for (const auto& piece : pieces_) out.push_back(piece_range_hi(piece));
    return out;
}

std::size_t PiecewiseTransform::piece_index(double x) const {
    // Right piece at interior breakpoints, left piece at the last point.
    auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
    return static_cast<std::size_t>(it - (breakpoints_.begin() + 1));
}

double PiecewiseTransform::operator()(double x) const {
    if (x < breakpoints_.front() - kBreakpointTol || x > breakpoints_.back() + kBreakpointTol) {
        throw Error("DomainError", "transform evaluated outside its domain");
    }
    return eval_piece(pieces_[piece_index(x)], x);
}

double PiecewiseTransform::derivative(double x) const {
    if (x < breakpoints_.front() - kBreakpointTol || x > breakpoints_.back() + kBreakpointTol) {
        throw Error("DomainError", "transform derivative outside its domain");
    }
    return derivative_piece(pieces_[piece_index(x)], x);
}

double PiecewiseTransform::derivative(double x, Side side) const {
    if (x < breakpoints_.front() - kBreakpointTol || x > breakpoints_.back() + kBreakpointTol) {
        throw Error("DomainError", "transform derivative outside its domain");
    }
    std::size_t index = piece_index(x);
    if (side == Side::left) {
        for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
            if (x == breakpoints_[i]) {
                index = i - 1;
                break;
            }
        }
    }
    return derivative_piece(pieces_[index], x);
}

double PiecewiseTransform::inverse(double y) const {
    const double range_lo = piece_range_lo(pieces_.front());
    const double range_hi = piece_range_hi(pieces_.back());
    if (y < range_lo - kBreakpointTol || y > range_hi + kBreakpointTol) {
        throw Error("DomainError", "inverse evaluated outside the transform range");
    }
    // Pieces are few; a linear scan keeps the breakpoint conventions simple.
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (y <= piece_range_hi(pieces_[i]) || i + 1 == pieces_.size()) {
            return inverse_piece(pieces_[i], y);
        }
    }
    return inverse_piece(pieces_.back(), y);
}

PiecewiseTransform build_radical(const Partition& T, std::span<const double> S) {
    const std::size_t n = T.t_points.size();
    if (S.size() != n) {
        throw Error("InvalidBreakpoints", "S must have one entry per partition point");
    }
    if (n < 2) throw Error("InvalidBreakpoints", "partition needs at least two points");
    if (S.front() != 0.0 || S.back() != 1.0) {
        throw Error("InvalidBreakpoints", "S must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(S[i] < S[i + 1])) {
            throw Error("InvalidBreakpoints", "S must be strictly increasing");
        }
    }

    std::vector<TransformPiece> pieces;
    pieces.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        RadicalPiece piece;
        piece.kind = T.piece_kinds[i];
        piece.t_lo = T.t_points[i];
        piece.t_hi = T.t_points[i + 1];
        piece.s_lo = S[i];
        piece.s_hi = S[i + 1];
        switch (piece.kind) {
            case PieceKind::left_zero:
                piece.radical_index = T.multiplicities[i] + 1;
                break;
            case PieceKind::right_zero:
                piece.radical_index = T.multiplicities[i + 1] + 1;
                break;
            case PieceKind::plain:
                piece.radical_index = 1;
                break;
        }
        pieces.emplace_back(piece);
    }
    return PiecewiseTransform(std::move(pieces));
}

PiecewiseTransform build_moebius(std::span<const double> S, std::span<const double> Z,
                                 std::span<const double> alpha) {
    const std::size_t n = S.size();
    if (Z.size() != n || n < 2) {
        throw Error("InvalidBreakpoints", "Z must have one entry per S entry");
    }
    if (alpha.size() + 1 != n) {
        throw Error("InvalidBreakpoints", "alpha must have one entry per piece");
    }
    if (Z.front() != 0.0 || Z.back() != 1.0) {
        throw Error("InvalidBreakpoints", "Z must start at 0 and end at 1");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(Z[i] < Z[i + 1]) || !(S[i] < S[i + 1])) {
            throw Error("InvalidBreakpoints", "breakpoints must be strictly increasing");
        }
        if (!(alpha[i] > 0.0 && alpha[i] < 1.0)) {
            throw Error("InvalidAlpha", "alpha entries must lie strictly inside (0, 1)");
        }
    }

    std::vector<TransformPiece> pieces;
    pieces.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        pieces.emplace_back(MoebiusPiece{Z[i], Z[i + 1], S[i], S[i + 1], alpha[i]});
    }
    return PiecewiseTransform(std::move(pieces));
}

PiecewiseTransform compose(const PiecewiseTransform& phi, const PiecewiseTransform& m) {
    if (phi.pieces().size() != m.pieces().size()) {
        throw Error("PieceMismatch", "phi and m have different piece counts");
    }
    std::vector<TransformPiece> pieces;
    pieces.reserve(m.pieces().size());
    for (std::size_t i = 0; i < m.pieces().size(); ++i) {
        const auto* inner = std::get_if<MoebiusPiece>(&m.pieces()[i]);
        const auto* outer = std::get_if<RadicalPiece>(&phi.pieces()[i]);
        if (inner == nullptr || outer == nullptr) {
            throw Error("PieceMismatch", "compose expects a radical phi and a Moebius m");
        }
        if (std::abs(inner->s_lo - outer->s_lo) > kBreakpointTol ||
            std::abs(inner->s_hi - outer->s_hi) > kBreakpointTol) {
            throw Error("PieceMismatch", "m range does not match phi domain piece for piece");
        }
        ComposedPiece piece{*inner, *outer};
        // Snap the shared breakpoints so the chain is bit-exact.
        piece.outer.s_lo = inner->s_lo;
        piece.outer.s_hi = inner->s_hi;
        pieces.emplace_back(piece);
    }
    return PiecewiseTransform(std::move(pieces));
}

double evaluate(const PiecewiseTransform& tr, double x) { return tr(x); }

double evaluate_derivative(const PiecewiseTransform& tr, double x) { return tr.derivative(x); }

double evaluate_derivative(const PiecewiseTransform& tr, double x, Side side) {
    return tr.derivative(x, side);
}

ReparameterizedSpeed::ReparameterizedSpeed(const ParametricCurve& p, const PiecewiseTransform& tr)
    : transform_(&tr),
      f_(p.omega_numerator().double_coefficients()),
      denom_(p.omega_denominator().double_coefficients()) {
    piece_data_.reserve(tr.pieces().size());
    for (const auto& piece : tr.pieces()) {
        PieceSpeed data;
        const RadicalPiece* radical = nullptr;
        if (const auto* r = std::get_if<RadicalPiece>(&piece)) radical = r;
        if (const auto* c = std::get_if<ComposedPiece>(&piece)) radical = &c->outer;

        if (radical != nullptr && radical->kind != PieceKind::plain) {
            const int mu = radical->radical_index - 1;
            const double dt = radical->t_hi - radical->t_lo;
            const double ds = radical->s_hi - radical->s_lo;
            const double t_zero =
                radical->kind == PieceKind::left_zero ? radical->t_lo : radical->t_hi;
            data.scale = std::pow(dt, mu + 1) / ((mu + 1) * ds);
            data.has_zero = true;
            // Stable cofactor: F = (t - t_zero)^(2 mu) Q + R with |R| tiny,
            // so zeta = sqrt(Q)/denom stays evaluable at the zero itself.
            data.q = euclidean_quotient(p.omega_numerator(), rational_from_double(t_zero), 2 * mu)
                         .quotient.double_coefficients();
        } else if (radical != nullptr) {
            const double dt = radical->t_hi - radical->t_lo;
            const double ds = radical->s_hi - radical->s_lo;
            data.scale = dt / ds;
        }
        piece_data_.push_back(std::move(data));
    }
}

double ReparameterizedSpeed::piece_value(std::size_t index, double x) const {
    const TransformPiece& piece = transform_->pieces()[index];
    const PieceSpeed& data = piece_data_[index];

    if (const auto* moebius = std::get_if<MoebiusPiece>(&piece)) {
        const double s = moebius_eval(*moebius, x);
        const double omega =
            std::sqrt(std::max(0.0, horner(f_, s))) / horner(denom_, s);
        return omega * moebius_derivative(*moebius, x);
    }

    const RadicalPiece* radical = nullptr;
    double s = x;
    double inner_derivative = 1.0;
    if (const auto* composed = std::get_if<ComposedPiece>(&piece)) {
        radical = &composed->outer;
        s = moebius_eval(composed->inner, x);
        inner_derivative = moebius_derivative(composed->inner, x);
    } else {
        radical = &std::get<RadicalPiece>(piece);
    }

    const double t = radical_eval(*radical, s);
    if (data.has_zero) {
        const double zeta = std::sqrt(std::max(0.0, horner(data.q, t))) / horner(denom_, t);
        return data.scale * zeta * inner_derivative;
    }
    const double omega = std::sqrt(std::max(0.0, horner(f_, t))) / horner(denom_, t);
    return omega * data.scale * inner_derivative;
}

double ReparameterizedSpeed::operator()(double x) const {
    return piece_value(transform_->piece_index(x), x);
}

double ReparameterizedSpeed::value(double x, Side side) const {
    const auto& breakpoints = transform_->breakpoints();
    std::size_t index = transform_->piece_index(x);
    if (side == Side::left) {
        for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
            if (x == breakpoints[i]) {
                index = i - 1;
                break;
            }
        }
    }
    return piece_value(index, x);
}

double reparameterized_omega(const ParametricCurve& p, const PiecewiseTransform& tr, double x) {
    return ReparameterizedSpeed(p, tr)(x);
}

} // namespace radrep
