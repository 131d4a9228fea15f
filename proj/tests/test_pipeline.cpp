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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "radrep/pipeline.hpp"
#include "support/corpus.hpp"

using radrep::JobConfig;
using radrep::PipelineOutput;
using radrep::testing::make_curve;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("radrep_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("running example end to end") {
    JobConfig cfg;
    cfg.coordinates = {"t", "t^3"};
    const auto p = make_curve(cfg.coordinates);
    const PipelineOutput out = radrep::run_pipeline(p, cfg);

    CHECK(std::abs(out.base.uniformity - 0.846) <= 5e-3);
    CHECK(std::abs(out.u_phi_star - 0.932) <= 5e-3);
    CHECK(std::abs(out.u_final - 0.997) <= 3e-3);

    REQUIRE(out.partition.t_points.size() == 3);
    CHECK(std::abs(out.partition.t_points[1] - 0.439) <= 1e-3);
    CHECK(out.partition.multiplicities == std::vector<int>{1, 0, 0});
    CHECK(std::abs(out.S[1] - 0.406) <= 1e-3);
    CHECK(std::abs(out.Z[1] - 0.419) <= 1e-3);
    REQUIRE(out.alpha.size() == 2);
    CHECK(std::abs(out.alpha[0] - 0.536) <= 5e-3);
    CHECK(std::abs(out.alpha[1] - 0.643) <= 5e-3);

    // r maps [0,1] onto [0,1] and is monotone.
    CHECK(radrep::evaluate(out.transform, 0.0) == 0.0);
    CHECK(radrep::evaluate(out.transform, 1.0) == 1.0);
}

TEST_CASE("straight line short-circuits to the identity with u = 1") {
    JobConfig cfg;
    cfg.coordinates = {"t", "2*t + 1"};
    const auto p = make_curve(cfg.coordinates);
    const PipelineOutput out = radrep::run_pipeline(p, cfg);
    CHECK(out.degenerate_line);
    CHECK(out.base.uniformity == 1.0);
    CHECK(out.u_final == 1.0);
    for (double z : {0.0, 0.25, 0.8, 1.0}) {
        CHECK(radrep::evaluate(out.transform, z) == doctest::Approx(z).epsilon(1e-15));
    }
}

TEST_CASE("curves without zeros still optimize through the Moebius stage") {
    JobConfig cfg;
    cfg.coordinates = {"t", "t^2"};
    const auto p = make_curve(cfg.coordinates);
    const PipelineOutput out = radrep::run_pipeline(p, cfg);
    CHECK_FALSE(out.degenerate_line);
    // All-plain radical stage cannot improve a single piece.
    CHECK(out.u_phi_star == doctest::Approx(out.base.uniformity).epsilon(1e-6));
    CHECK(out.u_final > out.base.uniformity);
    CHECK(out.u_final > 0.99);
}

TEST_CASE("interior-zero curve improves and keeps its invariants") {
    JobConfig cfg;
    cfg.coordinates = {"t", "(t - 2/5)^3"};
    const auto p = make_curve(cfg.coordinates);
    const PipelineOutput out = radrep::run_pipeline(p, cfg);
    CHECK(out.u_final > out.base.uniformity);
    CHECK(out.u_final >= 0.95);
    double prev = -1.0;
    for (int k = 0; k <= 400; ++k) {
        const double z = static_cast<double>(k) / 400.0;
        const double t = radrep::evaluate(out.transform, z);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("emit_samples endpoints and trace") {
    const auto p = make_curve({"t", "t^3"});
    JobConfig cfg;
    cfg.coordinates = {"t", "t^3"};
    const PipelineOutput out = radrep::run_pipeline(p, cfg);

    const auto two = radrep::emit_samples(p, out.transform, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].z == 0.0);
    CHECK(two[0].t == 0.0);
    CHECK(two[0].point == std::vector<double>{0.0, 0.0});
    CHECK(two[1].z == 1.0);
    CHECK(two[1].t == 1.0);
    CHECK(two[1].point == std::vector<double>{1.0, 1.0});

    const auto three = radrep::emit_samples(p, out.transform, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[1].z == 0.5);
    CHECK(three[1].t == doctest::Approx(radrep::evaluate(out.transform, 0.5)).epsilon(1e-15));

    for (const auto& row : radrep::emit_samples(p, out.transform, 50)) {
        CHECK(std::abs(row.point[1] - row.point[0] * row.point[0] * row.point[0]) <= 1e-9);
    }
}

TEST_CASE("equi-sampled p o r spreads angular progress more evenly than p") {
    // Discrete proxy: variance of per-step angular increments.
    for (const char* name : {"cubic", "interior-cubic"}) {
        CAPTURE(name);
        const radrep::testing::CorpusEntry* entry = nullptr;
        for (const auto& e : radrep::testing::zero_corpus()) {
            if (e.name == name) entry = &e;
        }
        REQUIRE(entry != nullptr);
        const auto p = make_curve(entry->coordinates);
        JobConfig cfg;
        cfg.coordinates = entry->coordinates;
        const PipelineOutput out = radrep::run_pipeline(p, cfg);

        auto increment_variance = [&p](const radrep::PiecewiseTransform& tr) {
            const int n = 400;
            radrep::ReparameterizedSpeed speed(p, tr);
            double mean = 0.0;
            std::vector<double> w(n + 1);
            for (int i = 0; i <= n; ++i) {
                w[static_cast<std::size_t>(i)] = speed(static_cast<double>(i) / n);
                mean += w[static_cast<std::size_t>(i)];
            }
            mean /= (n + 1);
            double var = 0.0;
            for (double v : w) var += (v - mean) * (v - mean);
            return var / (n + 1);
        };
        const double var_orig = increment_variance(radrep::PiecewiseTransform::identity());
        const double var_reparam = increment_variance(out.transform);
        CHECK(var_reparam < var_orig);
    }
}

TEST_CASE("report and transform serialization") {
    const auto p = make_curve({"t", "t^3"});
    JobConfig cfg;
    cfg.coordinates = {"t", "t^3"};
    const PipelineOutput out = radrep::run_pipeline(p, cfg);

    const std::string report = radrep::report_json(out);
    CHECK(report.find("\"u_p\"") != std::string::npos);
    CHECK(report.find("\"u_phi_star\"") != std::string::npos);
    CHECK(report.find("\"u_final\"") != std::string::npos);
    CHECK(report.find("\"multiplicities\": [1, 0, 0]") != std::string::npos);

    const std::string transform = radrep::transform_json(out);
    CHECK(transform.find("\"radical-moebius\"") != std::string::npos);
    CHECK(transform.find("\"moebius-affine\"") != std::string::npos);
    CHECK(transform.find("\"radical_index\": 2") != std::string::npos);

    const std::string csv = radrep::samples_csv(p, out.transform, 5);
    CHECK(csv.rfind("z,t,x1,x2\n", 0) == 0);
    int lines = 0;
    for (char c : csv) lines += c == '\n' ? 1 : 0;
    CHECK(lines == 6);
}

TEST_CASE("write_outputs is deterministic byte for byte") {
    JobConfig cfg;
    cfg.coordinates = {"t", "t^3"};
    cfg.samples = 64;
    const auto p = make_curve(cfg.coordinates);

    const auto dir1 = fresh_dir("det1");
    const auto dir2 = fresh_dir("det2");
    {
        const PipelineOutput out = radrep::run_pipeline(p, cfg);
        radrep::write_outputs(p, out, cfg, dir1);
    }
    {
        const PipelineOutput out = radrep::run_pipeline(p, cfg);
        radrep::write_outputs(p, out, cfg, dir2);
    }
    for (const char* name : {"report.json", "transform.json", "samples_reparam.csv",
                             "samples_original.csv", "omega_profile.csv"}) {
        CAPTURE(name);
        CHECK(slurp(dir1 / name) == slurp(dir2 / name));
    }
    std::filesystem::remove_all(dir1);
    std::filesystem::remove_all(dir2);
}

TEST_CASE("job config loading and validation") {
    const auto dir = fresh_dir("cfg");
    const auto file = dir / "job.json";
    {
        std::ofstream out(file);
        out << R"({"coordinates": ["t", "t^3"], "tolerance": 1e-8, "samples": 32,)"
            << R"( "emit": ["report"], "extra_breakpoints": 1})";
    }
    const JobConfig cfg = radrep::load_job_config(file);
    CHECK(cfg.coordinates == std::vector<std::string>{"t", "t^3"});
    CHECK(cfg.tolerance == 1e-8);
    CHECK(cfg.samples == 32);
    CHECK(cfg.emit == std::set<std::string>{"report"});
    CHECK(cfg.extra_breakpoints == 1);

    {
        std::ofstream out(file, std::ios::trunc);
        out << R"({"tolerance": 1e-8})";
    }
    CHECK_THROWS_WITH_AS(radrep::load_job_config(file), doctest::Contains("ParseError"),
                         radrep::Error);
    CHECK_THROWS_WITH_AS(radrep::load_job_config(dir / "missing.json"),
                         doctest::Contains("ParseError"), radrep::Error);
    {
        std::ofstream out(file, std::ios::trunc);
        out << R"({"coordinates": ["t"]})";
    }
    const JobConfig single = radrep::load_job_config(file);
    CHECK_THROWS_WITH_AS(radrep::parse_curve(single.coordinates),
                         doctest::Contains("ParseError"), radrep::Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("uniformity chain regression across the corpus") {
    // Not a theorem (the radical family excludes the identity on zero
    // pieces), but it holds on the shipped corpus and guards regressions.
    for (const auto& entry : radrep::testing::zero_corpus()) {
        CAPTURE(entry.name);
        JobConfig cfg;
        cfg.coordinates = entry.coordinates;
        const auto p = make_curve(entry.coordinates);
        const PipelineOutput out = radrep::run_pipeline(p, cfg);
        CHECK(out.u_phi_star >= out.base.uniformity - 1e-9);
        CHECK(out.u_final >= out.u_phi_star - 1e-12);
    }
}

TEST_CASE("report records both one-sided speeds at breakpoints") {
    JobConfig cfg;
    cfg.coordinates = {"t", "t^3"};
    const auto p = make_curve(cfg.coordinates);
    const PipelineOutput out = radrep::run_pipeline(p, cfg);
    REQUIRE(out.omega_piece_start.size() == 2);
    REQUIRE(out.omega_piece_end.size() == 2);
    // The composed speed is discontinuous at the interior breakpoint.
    CHECK(out.omega_piece_end[0] != out.omega_piece_start[1]);
    for (double w : out.omega_piece_start) CHECK(w > 0.0);
    for (double w : out.omega_piece_end) CHECK(w > 0.0);
    const std::string report = radrep::report_json(out);
    CHECK(report.find("\"omega_piece_start\"") != std::string::npos);
}

TEST_CASE("extra breakpoints flow through the pipeline") {
    JobConfig cfg;
    cfg.coordinates = {"t", "t^3"};
    cfg.extra_breakpoints = 2;
    const auto p = make_curve(cfg.coordinates);
    const PipelineOutput out = radrep::run_pipeline(p, cfg);
    CHECK(out.partition.t_points.size() == 5);
    CHECK(out.u_final >= 0.995); // more pieces cannot hurt the closed form
    CHECK(radrep::evaluate(out.transform, 1.0) == 1.0);
}

TEST_SUITE_END();
