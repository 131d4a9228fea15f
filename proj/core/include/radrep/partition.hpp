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

#ifndef RADREP_PARTITION_HPP
#define RADREP_PARTITION_HPP

#include <vector>

#include "radrep/curve.hpp"

namespace radrep {

enum class PieceKind { left_zero, right_zero, plain };

/// Breakpoint sequence T over [0, 1]: the zeros of omega, its interior
/// critical points, and the two interval endpoints. multiplicities[i] is
/// mult(omega, t_i) (zero when omega(t_i) != 0); piece_kinds[i] classifies
/// [t_i, t_{i+1}] by which endpoint, if any, is a zero of omega. Omega never
/// vanishes inside an open piece, and two zero endpoints never share a piece.
struct Partition {
    std::vector<double> t_points;
    std::vector<Rational> exact_points; // rational values backing t_points
    std::vector<int> multiplicities;
    std::vector<PieceKind> piece_kinds;

    int piece_count() const noexcept { return static_cast<int>(piece_kinds.size()); }
};

struct PartitionOptions {
    /// Extra plain breakpoints appended after the extremum rule, widest
    /// pieces split first. Trades radical-piece count against uniformity.
    int extra_breakpoints = 0;
    /// Refined points closer than this merge into one breakpoint.
    double merge_tolerance = 1e-10;
    RootIsolationOptions roots;
};

/// Polynomial whose roots inside (0, 1) are exactly the interior roots of
/// omega * omega': F' * denom - 2 * F * denom'. Derived from the numerator
/// of (omega^2)', so the radical never appears.
Polynomial omega_prime_numerator(const ParametricCurve& p);

/// Breakpoints per the extremum rule: zeros of omega, roots of omega' and
/// the endpoints 0, 1. Error "DegenerateLine" when omega is identically zero.
Partition build_partition(const ParametricCurve& p, const PartitionOptions& options = {});

} // namespace radrep

#endif
