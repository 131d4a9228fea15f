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

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radrep/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

void print_sequence(const char* name, const std::vector<double>& values) {
    std::printf("%s = (", name);
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::printf("%s%.6g", i ? ", " : "", values[i]);
    }
    std::printf(")\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "radrep: optimal piecewise radical + Moebius reparameterization of "
        "rational parametric curves for angular-speed uniformity"};

    std::string input;
    std::string output_dir = ".";
    double tolerance = -1.0;
    double root_tolerance = -1.0;
    int samples = -1;
    int extra_breakpoints = -1;
    std::vector<std::string> emit;

    app.add_option("--input", input, "JSON job description (curve coordinates plus knobs)")
        ->required();
    app.add_option("--output-dir", output_dir, "Directory for emitted artifacts");
    app.add_option("--tolerance", tolerance, "Quadrature tolerance (default 1e-9)");
    app.add_option("--root-tolerance", root_tolerance,
                   "Root refinement tolerance (default 1e-12)");
    app.add_option("--samples", samples, "Rows in sample and profile tables (default 200)");
    app.add_option("--extra-breakpoints", extra_breakpoints,
                   "Extra plain breakpoints beyond the extremum rule");
    app.add_option("--emit", emit,
                   "Artifacts to write: report, transform, samples, omega_profile")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        radrep::JobConfig cfg = radrep::load_job_config(input);
        if (tolerance > 0.0) cfg.tolerance = tolerance;
        if (root_tolerance > 0.0) cfg.root_tolerance = root_tolerance;
        if (samples > 0) cfg.samples = samples;
        if (extra_breakpoints >= 0) cfg.extra_breakpoints = extra_breakpoints;
        if (!emit.empty()) cfg.emit = std::set<std::string>(emit.begin(), emit.end());

        const radrep::ParametricCurve curve =
            radrep::parse_curve(cfg.coordinates, cfg.root_tolerance);
        const radrep::PipelineOutput out = radrep::run_pipeline(curve, cfg);

        std::printf("u_p        = %.6f\n", out.base.uniformity);
        std::printf("u_phi_star = %.6f\n", out.u_phi_star);
        std::printf("u_final    = %.6f\n", out.u_final);
        std::printf("mu_p       = %.9f\n", out.base.mu);
        print_sequence("T", out.partition.t_points);
        print_sequence("S", out.S);
        print_sequence("Z", out.Z);
        print_sequence("alpha", out.alpha);

        radrep::write_outputs(curve, out, cfg, output_dir);
        return kExitOk;
    } catch (const radrep::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code() == "ParseError" ? kExitConfig : kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
}
