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

#include "gbd/branch_bound.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <variant>

#include "gbd/errors.h"
#include "gbd/instance_io.h"

namespace gbd {
namespace {

MilpInstance Ip() {
  return std::get<MilpInstance>(
      LoadInstance(std::string(GBD_FIXTURES_DIR) + "/ip.json"));
}

MilpProblem IpAt(double beta) {
  MilpProblem p = Ip().problem;
  p.lp.rhs[0] = beta;
  return p;
}

// Value function of the fixture on -2, -1.75, ..., 10, computed once with
// an independent MILP solver and frozen here.
constexpr double kIpPhi[] = {
    0, 0, 0, 0, 0, 0, 0, 0, 0, 0.5, 1, 1.5, 2, 2, 2, 2, 2,
    2.5, 3, 3.5, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4.5, 5, 5.5, 6,
    6, 6, 6, 6, 6.5, 7, 7.5, 8, 8, 8, 8, 8, 8, 8, 8, 8};

double GridBeta(int k) { return -2.0 + 0.25 * k; }

TEST(BranchBound, FixtureValueFunction) {
  for (int k = 0; k < 49; ++k) {
    const auto r = SolveMilp(IpAt(GridBeta(k)));
    ASSERT_EQ(r.status, MilpStatus::kOptimal) << GridBeta(k);
    EXPECT_NEAR(r.value, kIpPhi[k], 1e-7) << "beta " << GridBeta(k);
  }
}

TEST(BranchBound, DualFunctionStrongAndWeak) {
  for (double anchor : {0.0, 2.0, 5.0, 8.0, 9.5}) {
    for (double lambda : {0.0, 1e4}) {
      const auto r = SolveMilp(IpAt(anchor), {.infeasible_lambda = lambda});
      ASSERT_EQ(r.status, MilpStatus::kOptimal);
      const MinAffineDual d = ExtractDualFunction(r.tree);
      const std::vector<double> none;
      const double b0[] = {anchor};
      EXPECT_NEAR(EvalDual(d, none, b0).finite(), r.value, 1e-7)
          << "anchor " << anchor << " lambda " << lambda;
      for (int k = 0; k < 49; ++k) {
        const double b[] = {GridBeta(k)};
        EXPECT_LE(EvalDual(d, none, b).ToDouble(), kIpPhi[k] + 1e-7)
            << "anchor " << anchor << " beta " << b[0];
      }
    }
  }
}

TEST(BranchBound, LeafTermMatchesDual) {
  const auto r = SolveMilp(IpAt(5.0));
  const double b[] = {3.0};
  double best = kInfinity;
  for (const auto& leaf : r.tree.leaves) best = std::min(best, LeafTerm(leaf, b));
  EXPECT_NEAR(EvalDual(ExtractDualFunction(r.tree), {}, b).finite(), best,
              1e-12);
}

TEST(BranchBound, InfeasibleLeavesCarryRays) {
  // 2y1 + 2y2 = 3 has no integer solution in any box.
  MilpProblem p;
  p.lp.objective = {1, 1};
  p.lp.constraints = Matrix{{2, 2}};
  p.lp.rhs = {3};
  p.lp.senses = {RowSense::kEqual};
  p.lp.lower = {0, 0};
  p.lp.upper = {3, 3};
  p.integer = {true, true};
  const auto r = SolveMilp(p);
  EXPECT_EQ(r.status, MilpStatus::kInfeasible);
  ASSERT_FALSE(r.tree.leaves.empty());
  for (const auto& leaf : r.tree.leaves) {
    EXPECT_EQ(leaf.status, LpStatus::kInfeasible);
  }
}

TEST(BranchBound, Unbounded) {
  MilpProblem p;
  p.lp.objective = {-1, 0};
  p.lp.constraints = Matrix{{1, -1}};
  p.lp.rhs = {0};
  p.lp.senses = {RowSense::kLessEqual};
  p.lp.lower = {0, 0};
  p.lp.upper = {kInfinity, kInfinity};
  p.integer = {true, false};
  EXPECT_EQ(SolveMilp(p).status, MilpStatus::kUnbounded);
}

TEST(BranchBound, NodeLimit) {
  const auto r = SolveMilp(IpAt(5.5), {.node_limit = 1});
  EXPECT_EQ(r.status, MilpStatus::kNodeLimit);
}

TEST(BranchBound, CutoffBelowOptimumPrunesEverything) {
  const auto r = SolveMilp(IpAt(5.0), {.cutoff = 3.5});
  EXPECT_EQ(r.status, MilpStatus::kInfeasible);
  const auto ok = SolveMilp(IpAt(5.0), {.cutoff = 4.5});
  EXPECT_EQ(ok.status, MilpStatus::kOptimal);
  EXPECT_NEAR(ok.value, 4.0, 1e-9);
}

TEST(BranchBound, EmptyTreeThrows) {
  EXPECT_THROW(ExtractDualFunction(BnbTree{}), EmptyTree);
}

TEST(BranchBound, IntegerCountMustMatch) {
  MilpProblem p = IpAt(1.0);
  p.integer.pop_back();
  EXPECT_THROW(SolveMilp(p), DimensionMismatch);
}

// Random small MILPs checked by enumerating the integer columns. The
// continuous column has a positive cost, so it sits at its lowest feasible
// value.
struct RandomMilp {
  MilpProblem p;
  double brute = kInfinity;
};

RandomMilp MakeRandom(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 4);
  RandomMilp out;
  MilpProblem& p = out.p;
  const std::size_t m = 1 + rng() % 3;
  const std::size_t n = 3;  // two integer columns and one continuous
  p.lp.objective = {double(coef(rng)), double(coef(rng)),
                    double(1 + rng() % 3)};
  p.lp.constraints = Matrix(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) p.lp.constraints(i, j) = coef(rng);
    p.lp.rhs.push_back(coef(rng));
    p.lp.senses.push_back(rng() % 2 ? RowSense::kGreaterEqual
                                    : RowSense::kLessEqual);
  }
  p.lp.lower = {0, 0, 0};
  p.lp.upper = {4, 4, 10};
  p.integer = {true, true, false};
  for (int y0 = 0; y0 <= 4; ++y0) {
    for (int y1 = 0; y1 <= 4; ++y1) {
      // Interval of feasible continuous values.
      double lo = 0, hi = 10;
      for (std::size_t i = 0; i < m; ++i) {
        const double a = p.lp.constraints(i, 2);
        const double r = p.lp.rhs[i] - p.lp.constraints(i, 0) * y0 -
                         p.lp.constraints(i, 1) * y1;
        const bool ge = p.lp.senses[i] == RowSense::kGreaterEqual;
        if (a == 0) {
          if (ge ? r > 0 : r < 0) hi = -1;
        } else if ((a > 0) == ge) {
          lo = std::max(lo, r / a);
        } else {
          hi = std::min(hi, r / a);
        }
      }
      if (lo > hi + 1e-12) continue;
      out.brute = std::min(out.brute, p.lp.objective[0] * y0 +
                                          p.lp.objective[1] * y1 +
                                          p.lp.objective[2] * lo);
    }
  }
  return out;
}

TEST(BranchBound, RandomAgainstEnumeration) {
  std::mt19937_64 rng(11);
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RandomMilp rm = MakeRandom(rng);
    for (bool propagate : {false, true}) {
      const auto r = SolveMilp(rm.p, {.propagate = propagate});
      if (std::isinf(rm.brute)) {
        EXPECT_EQ(r.status, MilpStatus::kInfeasible) << "trial " << trial;
        continue;
      }
      ASSERT_EQ(r.status, MilpStatus::kOptimal) << "trial " << trial;
      EXPECT_NEAR(r.value, rm.brute, 1e-7)
          << "trial " << trial << " propagate " << propagate;
      EXPECT_LE(r.tree.lower_bound, r.value + 1e-9);
    }
    if (!std::isinf(rm.brute)) ++feasible;
  }
  EXPECT_GT(feasible, 60);
}

// Without propagation every tree is a dual certificate: strong at its own
// rhs and below the value function elsewhere.
TEST(BranchBound, RandomDualFunctionsAreValid) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    RandomMilp rm = MakeRandom(rng);
    const auto r = SolveMilp(rm.p);
    if (r.status != MilpStatus::kOptimal) continue;
    const MinAffineDual d = ExtractDualFunction(r.tree);
    EXPECT_NEAR(EvalDual(d, {}, rm.p.lp.rhs).finite(), r.value, 1e-6);
    std::mt19937_64 shift(trial);
    for (int k = 0; k < 10; ++k) {
      MilpProblem q = rm.p;
      for (double& b : q.lp.rhs) b += double(int(shift() % 7) - 3);
      const auto s = SolveMilp(q);
      if (s.status != MilpStatus::kOptimal) continue;
      EXPECT_LE(EvalDual(d, {}, q.lp.rhs).ToDouble(), s.value + 1e-6)
          << "trial " << trial;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace gbd
