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

#include "radrep/partition.hpp"

#include <algorithm>
#include <cmath>

namespace radrep {

Polynomial omega_prime_numerator(const ParametricCurve& p) {
    const Polynomial& f = p.omega_numerator();
    const Polynomial& d = p.omega_denominator();
    // (omega^2)' = (F' d - 2 F d') / d^3 up to the positive factor d; away
    // from zeros of omega its roots are the roots of omega'.
    return f.derivative() * d - Rational(2) * f * d.derivative();
}

namespace {

struct Point {
    Rational exact;
    double refined;
    int multiplicity;
};

void insert_point(std::vector<Point>& points, Point candidate, double merge_tol) {
    for (auto& existing : points) {
        if (std::abs(existing.refined - candidate.refined) <= merge_tol) {
            existing.multiplicity = std::max(existing.multiplicity, candidate.multiplicity);
            return;
        }
    }
    points.push_back(std::move(candidate));
}

void assign_kinds(Partition& partition) {
    partition.piece_kinds.clear();
    for (std::size_t i = 0; i + 1 < partition.t_points.size(); ++i) {
        const bool left = partition.multiplicities[i] > 0;
        const bool right = partition.multiplicities[i + 1] > 0;
        if (left && right) {
            throw Error("InvalidBreakpoints", "two adjacent zeros of omega in one piece");
        }
        partition.piece_kinds.push_back(left    ? PieceKind::left_zero
                                        : right ? PieceKind::right_zero
                                                : PieceKind::plain);
    }
}

} // namespace

Partition build_partition(const ParametricCurve& p, const PartitionOptions& options) {
    if (p.omega_is_zero()) {
        throw Error("DegenerateLine", "angular speed is identically zero");
    }

    CurveOptions curve_options;
    curve_options.roots = options.roots;
    const AngularSpeedData profile = multiplicity_profile(p, curve_options);

    std::vector<Point> points;
    points.push_back({Rational(0), 0.0, 0});
    points.push_back({Rational(1), 1.0, 0});
    for (const auto& root : profile.zero_factors) {
        insert_point(points, {root.approx, root.refined_value, root.multiplicity},
                     options.merge_tolerance);
    }

    const Polynomial critical = omega_prime_numerator(p);
    if (!critical.is_zero() && !critical.is_constant()) {
        for (const auto& root : isolate_roots(critical, Rational(0), Rational(1), options.roots)) {
            insert_point(points, {root.approx, root.refined_value, 0}, options.merge_tolerance);
        }
    }

    std::sort(points.begin(), points.end(),
              [](const Point& a, const Point& b) { return a.exact < b.exact; });

    // Guard: if two zeros ever end up adjacent (Rolle rules this out for our
    // smooth omega^2, but isolation tolerances are finite), wedge a plain
    // midpoint between them.
    for (std::size_t i = 0; i + 1 < points.size();) {
        if (points[i].multiplicity > 0 && points[i + 1].multiplicity > 0) {
            Rational mid = (points[i].exact + points[i + 1].exact) / 2;
            points.insert(points.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          {mid, to_double(mid), 0});
        } else {
            ++i;
        }
    }

    Partition partition;
    for (auto& point : points) {
        partition.exact_points.push_back(point.exact);
        partition.t_points.push_back(point.refined);
        partition.multiplicities.push_back(point.multiplicity);
    }
    // Pin the endpoints bit-exactly.
    partition.t_points.front() = 0.0;
    partition.t_points.back() = 1.0;

    for (int k = 0; k < options.extra_breakpoints; ++k) {
        std::size_t widest = 0;
        double width = -1.0;
        for (std::size_t i = 0; i + 1 < partition.t_points.size(); ++i) {
            const double w = partition.t_points[i + 1] - partition.t_points[i];
            if (w > width) {
                width = w;
                widest = i;
            }
        }
        Rational mid = (partition.exact_points[widest] + partition.exact_points[widest + 1]) / 2;
        const auto at = static_cast<std::ptrdiff_t>(widest) + 1;
        partition.exact_points.insert(partition.exact_points.begin() + at, mid);
        partition.t_points.insert(partition.t_points.begin() + at, to_double(mid));
        partition.multiplicities.insert(partition.multiplicities.begin() + at, 0);
    }

    assign_kinds(partition);
    return partition;
}

} // namespace radrep
