// Copyright 2026 The gbd Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <variant>

#include "gbd/benders_2ssmilp.h"
#include "gbd/benders_lp.h"
#include "gbd/benders_miblp.h"
#include "gbd/branch_bound.h"
#include "gbd/instance_io.h"
#include "gbd/random_instances.h"
#include "gbd/simplex.h"

namespace {

using namespace gbd;

template <typename T>
T Load(const std::string& name) {
  return std::get<T>(LoadInstance(std::string(GBD_FIXTURES_DIR) + "/" + name));
}

// Dense random LP with m rows and 2m columns, feasible at x = 1.
LpProblem RandomLp(int m) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = 2 * m;
  LpProblem p;
  p.constraints = Matrix(m, n);
  for (int i = 0; i < m; ++i) {
    double row = 0;
    for (int j = 0; j < n; ++j) row += p.constraints(i, j) = u(rng);
    p.rhs.push_back(row - 0.5);
    p.senses.push_back(RowSense::kGreaterEqual);
  }
  for (int j = 0; j < n; ++j) p.objective.push_back(1.0 + u(rng));
  p.lower.assign(n, 0.0);
  p.upper.assign(n, 10.0);
  return p;
}

void BM_Simplex(benchmark::State& state) {
  const LpProblem p = RandomLp(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveLp(p).objective);
}
BENCHMARK(BM_Simplex)->Arg(10)->Arg(40)->Arg(120);

void BM_BranchBoundFixture(benchmark::State& state) {
  MilpProblem p = Load<MilpInstance>("ip.json").problem;
  p.lp.rhs[0] = 9.5;
  for (auto _ : state) benchmark::DoNotOptimize(SolveMilp(p).value);
}
BENCHMARK(BM_BranchBoundFixture);

void BM_EvaluateReaction(benchmark::State& state) {
  const auto inst = Load<MiblpInstance>("toy_ref.json");
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvaluateReaction(inst, {}, {8.0}).rho_value);
  }
}
BENCHMARK(BM_EvaluateReaction);

void BM_LpBenders(benchmark::State& state) {
  const auto inst = RandomLpBenders(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveLpBenders(inst).value);
}
BENCHMARK(BM_LpBenders)->Arg(5)->Arg(33);

void BM_TwoStage(benchmark::State& state) {
  const auto inst = RandomTwoStage(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveTwoStage(inst).value);
}
BENCHMARK(BM_TwoStage)->Arg(14)->Arg(18);

void BM_MiblpToy(benchmark::State& state) {
  const auto inst = Load<MiblpInstance>("miblp_toy.json");
  for (auto _ : state) benchmark::DoNotOptimize(SolveMiblp(inst).value);
}
BENCHMARK(BM_MiblpToy)->Unit(benchmark::kMillisecond);

void BM_MiblpRandom(benchmark::State& state) {
  const auto inst = RandomMiblp(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(SolveMiblp(inst).value);
}
BENCHMARK(BM_MiblpRandom)->Arg(1)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
