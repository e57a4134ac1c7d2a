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

#include "gbd/benders_lp.h"

#include <gtest/gtest.h>

#include <cmath>

#include "gbd/errors.h"
#include "gbd/oracle.h"
#include "gbd/random_instances.h"

namespace gbd {
namespace {

// Optimal values of RandomLpBenders(1..50), solved as one LP by an
// independent solver and frozen.
constexpr double kRandomLp[] = {
    1.22222222222, 0.5, 13.8333333333, 21.5, 23.6994818653, 10.4666666667, 3,
    -0.666666666667, -31.6923076923, 41.6820987654, -2.53846153846,
    20.568627451, 20.8333333333, 21, -1.75, 9, 0, -8.25, 2, 14,
    -15.2222222222, 17, 20, 41.7368421053, -8.47058823529, 14, 38.6666666667,
    6.60869565217, -5, -8.5, -4.57142857143, 31.1666666667, 48.5806451613, -8,
    37.3571428571, -21.3333333333, 38.985915493, 11, 24.5, 37.3333333333,
    -25.3636363636, 16.7083333333, -7.19565217391, 10.2222222222, 38.6, 6.5,
    7.33333333333, 0, 2.16666666667, 37.6875};

void ExpectTraceInvariants(const BendersTrace& trace, double tol) {
  EXPECT_TRUE(trace.LowerBoundsNondecreasing());
  EXPECT_TRUE(trace.UpperAboveLower());
  ASSERT_FALSE(trace.rows.empty());
  const TraceRow& last = trace.rows.back();
  ASSERT_TRUE(last.upper_bound.is_finite());
  EXPECT_LE(last.upper_bound.finite() - last.lower_bound.finite(), tol);
}

TEST(LpBenders, VacuousSecondStageTakesOneIteration) {
  LpBendersInstance inst;
  inst.c = {1, -2};
  inst.d = {0};
  inst.a = Matrix{{1, 1}};
  inst.g = Matrix{{0}};
  inst.b = {-5};
  inst.x_upper = {3, 3};
  const auto r = SolveLpBenders(inst);
  ASSERT_EQ(r.status, BendersStatus::kOptimal);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_NEAR(r.value, -6.0, 1e-9);
  EXPECT_NEAR(r.x[0], 0.0, 1e-9);
  EXPECT_NEAR(r.x[1], 3.0, 1e-9);
}

TEST(LpBenders, RandomInstancesMatchFrozenValues) {
  for (int seed = 1; seed <= 50; ++seed) {
    const auto inst = RandomLpBenders(seed);
    const auto r = SolveLpBenders(inst);
    ASSERT_EQ(r.status, BendersStatus::kOptimal) << "seed " << seed;
    EXPECT_NEAR(r.value, kRandomLp[seed - 1], 1e-6) << "seed " << seed;
    EXPECT_NEAR(OracleLpDirect(inst).objective, kRandomLp[seed - 1], 1e-6);
    ExpectTraceInvariants(r.trace, 1e-6);
    // Reported solution is feasible and attains the value.
    const auto ax = inst.a.Multiply(r.x);
    const auto gy = inst.g.Multiply(r.y);
    for (std::size_t i = 0; i < inst.m(); ++i) {
      EXPECT_GE(ax[i] + gy[i], inst.b[i] - 1e-7) << "seed " << seed;
    }
    EXPECT_NEAR(Dot(inst.c, r.x) + Dot(inst.d, r.y), r.value, 1e-7);
  }
}

// x >= 2 is only enforced through the second stage, and the master's first
// guess x = 0 leaves it empty.
LpBendersInstance NeedsFeasibilityCut() {
  LpBendersInstance inst;
  inst.c = {1};
  inst.d = {1};
  inst.a = Matrix{{1}, {1}};
  inst.g = Matrix{{0}, {1}};
  inst.b = {2, 3};
  inst.x_upper = {10};
  return inst;
}

TEST(LpBenders, FeasibilityCutIsGeneratedAndValid) {
  const auto inst = NeedsFeasibilityCut();
  const auto r = SolveLpBenders(inst);
  ASSERT_EQ(r.status, BendersStatus::kOptimal);
  EXPECT_NEAR(r.value, 3.0, 1e-9);
  ASSERT_FALSE(r.trace.rows.empty());
  EXPECT_EQ(r.trace.rows.front().cut, CutKind::kFeasibility);
  int feas = 0;
  for (const LinearCut& cut : r.cuts) {
    if (cut.kind != CutKind::kFeasibility) continue;
    ++feas;
    EXPECT_EQ(cut.z_coeff, 0.0);
    // Every x with a feasible second stage satisfies the cut.
    for (double x = 0; x <= 10; x += 0.5) {
      const double rhs[] = {2 - x, 3 - x};
      const bool feasible = SolveLp(LpSubproblem(inst, {rhs[0], rhs[1]})).status ==
                            LpStatus::kOptimal;
      const double lhs = cut.x_coeffs[0] * x;
      if (feasible) {
        EXPECT_GE(lhs, cut.rhs - 1e-9) << "x " << x;
      }
    }
    // and x = 0 violates it.
    EXPECT_LT(0.0, cut.rhs);
  }
  EXPECT_GE(feas, 1);
}

TEST(LpBenders, OptimalityCutsAreValidOnGrid) {
  for (int seed = 1; seed <= 10; ++seed) {
    const auto inst = RandomLpBenders(seed);
    ASSERT_EQ(inst.n1(), 3u);
    const auto r = SolveLpBenders(inst);
    ASSERT_EQ(r.status, BendersStatus::kOptimal);
    for (const LinearCut& cut : r.cuts) {
      if (cut.kind != CutKind::kOptimality) continue;
      for (double x0 = 0; x0 <= 10; x0 += 2.5) {
        for (double x1 = 0; x1 <= 10; x1 += 2.5) {
          for (double x2 = 0; x2 <= 10; x2 += 2.5) {
            const std::vector<double> x = {x0, x1, x2};
            std::vector<double> rhs = inst.b;
            const auto ax = inst.a.Multiply(x);
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= ax[i];
            const auto sub = SolveLp(LpSubproblem(inst, rhs));
            if (sub.status != LpStatus::kOptimal) continue;
            EXPECT_GE(sub.objective, cut.rhs - Dot(cut.x_coeffs, x) - 1e-7)
                << "seed " << seed;
          }
        }
      }
    }
  }
}

TEST(LpBenders, Infeasible) {
  LpBendersInstance inst;
  inst.c = {1};
  inst.d = {1};
  inst.a = Matrix{{0}};
  inst.g = Matrix{{0}};
  inst.b = {5};
  inst.x_upper = {10};
  EXPECT_EQ(SolveLpBenders(inst).status, BendersStatus::kInfeasible);
}

TEST(LpBenders, Unbounded) {
  LpBendersInstance inst;
  inst.c = {1};
  inst.d = {-1};
  inst.a = Matrix{{0}};
  inst.g = Matrix{{1}};
  inst.b = {0};
  inst.x_upper = {10};
  EXPECT_EQ(SolveLpBenders(inst).status, BendersStatus::kUnbounded);
}

TEST(LpBenders, IterationLimit) {
  // Seed 5 needs several cuts.
  const auto full = SolveLpBenders(RandomLpBenders(5));
  ASSERT_GT(full.iterations, 1);
  const auto r = SolveLpBenders(RandomLpBenders(5), {.max_iters = 1});
  EXPECT_EQ(r.status, BendersStatus::kIterationLimit);
}

TEST(LpBenders, DimensionErrors) {
  auto inst = NeedsFeasibilityCut();
  inst.b.push_back(1);
  EXPECT_THROW(SolveLpBenders(inst), InputError);
}

}  // namespace
}  // namespace gbd
