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

#ifndef RADREP_PIPELINE_HPP
#define RADREP_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "radrep/optimizer.hpp"

namespace radrep {

/// One end-to-end job: a curve given by coordinate expressions in t plus
/// numeric knobs and the set of artifacts to write.
struct JobConfig {
    std::vector<std::string> coordinates;
    double tolerance = 1e-9;             // quadrature tolerance
    double root_tolerance = 1e-12;       // bracket width for root refinement
    int samples = 200;                   // rows in sample/profile tables
    std::set<std::string> emit = {"report", "transform", "samples", "omega_profile"};
    int extra_breakpoints = 0;           // extra plain breakpoints past the extremum rule
};

/// Reads a JobConfig from a JSON document:
///   {"coordinates": ["t", "t^3"], "tolerance": 1e-9, "samples": 200,
///    "emit": [...], "extra_breakpoints": 0}
/// Error "ParseError" on malformed input.
JobConfig load_job_config(const std::filesystem::path& file);

/// Builds and validates the curve from coordinate expressions.
ParametricCurve parse_curve(const std::vector<std::string>& coordinates,
                            double root_tolerance = 1e-12);

struct SampleRow {
    double z = 0.0;             // new parameter
    double t = 0.0;             // original parameter, t = r(z)
    std::vector<double> point;  // p(t)
};

struct PipelineOutput {
    UniformityReport base;        // mu_p, sigma_p^2, u_p
    double u_phi_star = 1.0;      // after the radical stage, closed form
    double u_final = 1.0;         // after the Moebius stage, closed form
    double eta_phi = 0.0;
    double eta_m = 0.0;
    Partition partition;          // T with multiplicities
    std::vector<double> S;
    std::vector<double> Z;
    std::vector<double> alpha;
    // One-sided composed angular speeds per piece of r (the composed speed is
    // discontinuous across breakpoints): value entering the piece from the
    // left end, and leaving at the right end.
    std::vector<double> omega_piece_start;
    std::vector<double> omega_piece_end;
    PieceIntegrals integrals;
    PiecewiseTransform phi = PiecewiseTransform::identity();
    PiecewiseTransform moebius = PiecewiseTransform::identity();
    PiecewiseTransform transform = PiecewiseTransform::identity(); // r = phi o m
    bool degenerate_line = false; // omega == 0: identity transform, u == 1
};

/// Runs the whole optimization: uniformity of p, partition T, optimal S,
/// radical stage phi, optimal alpha/Z, Moebius stage m, and r = phi o m.
/// Straight lines short-circuit to the identity transform with u = 1; curves
/// whose angular speed never vanishes still run with all-plain radical
/// pieces (a pure piecewise-Moebius optimization).
PipelineOutput run_pipeline(const ParametricCurve& p, const JobConfig& cfg);

/// Equal-z samples of p o r: rows (z, t = r(z), p(t)).
std::vector<SampleRow> emit_samples(const ParametricCurve& p, const PiecewiseTransform& r,
                                    int count);

/// Serialization. All reals print with 12 significant digits; output is
/// byte-deterministic for a fixed config.
std::string report_json(const PipelineOutput& out);
std::string transform_json(const PipelineOutput& out);
std::string samples_csv(const ParametricCurve& p, const PiecewiseTransform& r, int count);
std::string omega_profile_csv(const ParametricCurve& p, const PipelineOutput& out, int count);

/// Writes the artifacts selected by cfg.emit into directory:
/// report.json, transform.json, samples_reparam.csv, samples_original.csv,
/// omega_profile.csv.
void write_outputs(const ParametricCurve& p, const PipelineOutput& out, const JobConfig& cfg,
                   const std::filesystem::path& directory);

} // namespace radrep

#endif
