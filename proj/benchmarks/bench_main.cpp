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

#include <benchmark/benchmark.h>

#include "radrep/expression.hpp"
#include "radrep/optimizer.hpp"
#include "radrep/pipeline.hpp"

namespace {

radrep::ParametricCurve curve(const std::vector<std::string>& coords) {
    return radrep::parse_curve(coords);
}

void BM_PipelineCubic(benchmark::State& state) {
    const auto p = curve({"t", "t^3"});
    radrep::JobConfig cfg;
    cfg.coordinates = {"t", "t^3"};
    for (auto _ : state) {
        auto out = radrep::run_pipeline(p, cfg);
        benchmark::DoNotOptimize(out.u_final);
    }
}
BENCHMARK(BM_PipelineCubic)->Unit(benchmark::kMillisecond);

void BM_PipelineIrrationalZero(benchmark::State& state) {
    const auto p = curve({"t", "t^4/12 - t^2/4"});
    radrep::JobConfig cfg;
    cfg.coordinates = {"t", "t^4/12 - t^2/4"};
    for (auto _ : state) {
        auto out = radrep::run_pipeline(p, cfg);
        benchmark::DoNotOptimize(out.u_final);
    }
}
BENCHMARK(BM_PipelineIrrationalZero)->Unit(benchmark::kMillisecond);

void BM_RootIsolation(benchmark::State& state) {
    // Chebyshev-like oscillator: all roots in [0, 1], degree scales.
    const int degree = static_cast<int>(state.range(0));
    radrep::Polynomial f{radrep::Rational(1)};
    for (int k = 1; k <= degree; ++k) {
        f *= radrep::Polynomial(std::vector<radrep::Rational>{
            radrep::Rational(-k, degree + 1), radrep::Rational(1)});
    }
    for (auto _ : state) {
        auto roots = radrep::isolate_roots(f, radrep::Rational(0), radrep::Rational(1));
        benchmark::DoNotOptimize(roots.size());
    }
}
BENCHMARK(BM_RootIsolation)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_AdaptiveQuadrature(benchmark::State& state) {
    const auto p = curve({"t", "t^3"});
    const auto f = p.omega_numerator().double_coefficients();
    const auto d = p.omega_denominator().double_coefficients();
    radrep::Integrand omega_sq{[&f, &d](double t) {
        const double den = radrep::horner(d, t);
        return radrep::horner(f, t) / (den * den);
    }};
    for (auto _ : state) {
        auto r = radrep::integrate(omega_sq, 0.0, 1.0, 1e-12);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_AdaptiveQuadrature);

void BM_StablePieceIntegral(benchmark::State& state) {
    const auto p = curve({"t", "t^4/12 - t^2/4"});
    const auto T = radrep::build_partition(p);
    int zero_piece = 0;
    for (int i = 0; i < T.piece_count(); ++i) {
        if (T.piece_kinds[static_cast<std::size_t>(i)] == radrep::PieceKind::left_zero) {
            zero_piece = i;
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(radrep::piece_L(p, T, zero_piece));
    }
}
BENCHMARK(BM_StablePieceIntegral)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
