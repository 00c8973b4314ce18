// Copyright 2026 The contactscatter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "contact/limits.hpp"
#include "contact/observables.hpp"
#include "contact/oracle.hpp"
#include "contact/phase_shifts.hpp"
#include "contact/special_functions.hpp"

namespace {

using namespace contact;

void BM_SphericalBessel(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::spherical_j(l, x) + special::spherical_n(l, x));
    x = x < 40.0 ? x * 1.013 : 0.37;
  }
}
BENCHMARK(BM_SphericalBessel)->Arg(0)->Arg(5)->Arg(40);

void BM_CylindricalBessel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(special::bessel_j(m, x) + special::bessel_n(m, x));
    x = x < 40.0 ? x * 1.013 : 0.37;
  }
}
BENCHMARK(BM_CylindricalBessel)->Arg(0)->Arg(5)->Arg(40);

void BM_BuildTable(benchmark::State& state) {
  const PotentialSpec spec{static_cast<Family>(state.range(0)), -2.0, 1.0, 1.0, 3.0, 12.0};
  for (auto _ : state) {
    auto table = build_table(spec, {1.0});
    benchmark::DoNotOptimize(table.entries.data());
  }
}
BENCHMARK(BM_BuildTable)
    ->Arg(static_cast<int>(Family::kShell3D))
    ->Arg(static_cast<int>(Family::kWell3D))
    ->Arg(static_cast<int>(Family::kRing2D))
    ->Arg(static_cast<int>(Family::kWell2D));

void BM_CrossSection3D(benchmark::State& state) {
  const auto table = build_table({Family::kShell3D, -2.0, 1.0, 0.0, 10.0}, {1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_total_3d(table));
    benchmark::DoNotOptimize(amplitude_3d(table, 0.7));
  }
}
BENCHMARK(BM_CrossSection3D);

void BM_ClassifyLimit(benchmark::State& state) {
  const PotentialSpec spec{static_cast<Family>(state.range(0)), -1.0, 1.0, 1.0, 0.5, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(classify_limit(spec, {1.0}).verdict);
}
BENCHMARK(BM_ClassifyLimit)
    ->Arg(static_cast<int>(Family::kShell3D))
    ->Arg(static_cast<int>(Family::kRing2D))
    ->Arg(static_cast<int>(Family::kDoubleDelta1D));

void BM_Audit(benchmark::State& state) {
  const auto grid = default_audit_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_audit(grid, {1.0}, static_cast<unsigned>(state.range(0))).failures);
  }
}
BENCHMARK(BM_Audit)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OracleWell(benchmark::State& state) {
  const PotentialSpec spec{static_cast<Family>(state.range(0)), -3.0, 1.0, 0.0, 0.5, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_phase_shift(spec, {1.0}, 0));
}
BENCHMARK(BM_OracleWell)
    ->Arg(static_cast<int>(Family::kWell3D))
    ->Arg(static_cast<int>(Family::kWell2D))
    ->Arg(static_cast<int>(Family::kWell1D))
    ->Unit(benchmark::kMicrosecond);

void BM_OracleRegularized(benchmark::State& state) {
  const PotentialSpec spec{Family::kShell3D, -1.0, 1.0, 0.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(oracle_shell_regularized(spec, {1.0}, 0, spec.a / 50).delta);
}
BENCHMARK(BM_OracleRegularized)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
