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

#include "gbd/benders_miblp.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>
#include <variant>

#include "gbd/errors.h"
#include "gbd/instance_io.h"
#include "gbd/oracle.h"
#include "gbd/random_instances.h"

namespace gbd {
namespace {

MiblpInstance Load(const std::string& name) {
  return std::get<MiblpInstance>(
      LoadInstance(std::string(GBD_FIXTURES_DIR) + "/" + name));
}

ReactionCertificate RefAt(double beta) {
  const auto inst = Load("toy_ref.json");
  return EvaluateReaction(inst, {}, {beta});
}

void ExpectY(const std::vector<double>& y, std::vector<double> want) {
  ASSERT_EQ(y.size(), want.size());
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(y[i], want[i], 1e-9);
}

TEST(Reaction, CheckpointValues) {
  auto r = RefAt(5);
  ASSERT_EQ(r.status, ReactionStatus::kOptimal);
  EXPECT_NEAR(r.phi_value, 4, 1e-9);
  EXPECT_NEAR(r.rho_value, 1, 1e-9);
  ExpectY(r.y, {0, 1, 0, 0});
  r = RefAt(2);
  EXPECT_NEAR(r.rho_value, -1, 1e-9);
  ExpectY(r.y, {1, 0, 0, 0});
  r = RefAt(0);
  EXPECT_NEAR(r.rho_value, 0, 1e-9);
  ExpectY(r.y, {0, 0, 0, 0});
  r = RefAt(8);
  EXPECT_NEAR(r.phi_value, 8, 1e-9);
}

TEST(Reaction, LexicographicInvariants) {
  const auto inst = Load("toy_ref.json");
  for (double b = 0; b <= 10; b += 0.5) {
    const auto r = EvaluateReaction(inst, {}, {b});
    ASSERT_EQ(r.status, ReactionStatus::kOptimal);
    EXPECT_LE(Dot(inst.d2, r.y), r.phi_value + 1e-6) << b;
    EXPECT_NEAR(Dot(inst.d1, r.y), r.rho_value, 1e-9) << b;
  }
}

TEST(Reaction, PrimalFunctionsAtCheckpoints) {
  auto at = [](const ReactionCertificate& r, double b) {
    const double v[] = {b};
    return EvalPrimal(*r.primal, v);
  };
  const auto five = RefAt(5);
  ASSERT_TRUE(five.primal.has_value());
  EXPECT_EQ(at(five, 5), ExtendedReal(4.0));
  EXPECT_EQ(at(five, 0), ExtendedReal(4.0));
  EXPECT_TRUE(at(five, 5.5).is_pos_inf());
  const auto two = RefAt(2);
  EXPECT_EQ(at(two, 1), ExtendedReal(2.0));
  EXPECT_TRUE(at(two, 2.25).is_pos_inf());
  const auto zero = RefAt(0);
  EXPECT_EQ(at(zero, -3), ExtendedReal(0.0));
  EXPECT_TRUE(at(zero, 0.25).is_pos_inf());
}

// Reaction duals with their own primal are below the oracle reaction
// function on the grid and exact at the anchor.
TEST(Reaction, DualValidOnGrid) {
  const auto inst = Load("toy_ref.json");
  std::vector<double> betas;
  for (int k = 0; k <= 40; ++k) betas.push_back(0.25 * k);
  const auto rho = OracleReactionGrid(inst, {}, {}, {0}, {1}, betas);
  for (double anchor = 0; anchor <= 10; anchor += 1) {
    const auto r = EvaluateReaction(inst, {}, {anchor});
    ASSERT_TRUE(r.dual.has_value());
    ASSERT_TRUE(r.primal.has_value());
    GlobalDual g;
    g.members.push_back({*r.dual, r.primal});
    const double a[] = {anchor};
    EXPECT_NEAR(EvalGlobal(g, {}, a).finite(), r.rho_value, 1e-6) << anchor;
    for (std::size_t k = 0; k < betas.size(); ++k) {
      const double b[] = {betas[k]};
      EXPECT_LE(EvalGlobal(g, {}, b), rho[k].value + 1e-6)
          << "anchor " << anchor << " beta " << betas[k];
      // Primal above the value function on its domain.
      const auto phi = EvaluateReaction(inst, {}, {betas[k]}).phi_value;
      const ExtendedReal up = EvalPrimal(*r.primal, b);
      if (up.is_finite()) {
        EXPECT_GE(up.finite(), phi - 1e-6);
      }
    }
  }
}

TEST(Reaction, FollowerInfeasibleAndLinkInfeasible) {
  auto inst = Load("toy_ref.json");
  inst.g2 = Matrix{{-2, -5, -2, -2}};
  EXPECT_EQ(EvaluateReaction(inst, {}, {1}).status,
            ReactionStatus::kSecondStageInfeasible);

  // Leader row y1 >= 1 excludes the follower's unique optimum y = 0.
  auto linked = Load("toy_ref.json");
  linked.a1 = Matrix{{0}};
  linked.g1 = Matrix{{1, 0, 0, 0}};
  linked.b1 = {1};
  const auto r = EvaluateReaction(linked, {1}, {0});
  EXPECT_EQ(r.status, ReactionStatus::kLinkInfeasible);
  EXPECT_TRUE(std::isinf(r.rho_value));
}

TEST(Miblp, ToySolution) {
  const auto inst = Load("miblp_toy.json");
  const auto r = SolveMiblp(inst);
  ASSERT_EQ(r.status, BendersStatus::kOptimal);
  EXPECT_NEAR(r.value, -3, 1e-6);
  ExpectY(r.x, {1, 1});
  ExpectY(r.y, {1, 0, 0, 0});
  EXPECT_TRUE(r.trace.LowerBoundsNondecreasing());
  EXPECT_TRUE(r.trace.UpperAboveLower());
  // Iteration count depends on master tie-breaking; only a sanity bound.
  EXPECT_LE(r.iterations, 12);
  ASSERT_FALSE(r.trace.rows.empty());
  ExpectY(r.trace.rows.front().x, {3, 2});
  EXPECT_TRUE(r.trace.rows.front().lower_bound.is_neg_inf());
}

const ReactionCut* CutAt(const MiblpResult& r, double x1, double x2) {
  for (const auto& c : r.cuts) {
    if (c.anchor_x[0] == x1 && c.anchor_x[1] == x2) return &c;
  }
  return nullptr;
}

TEST(Miblp, ToyCutsKeyedByAnchor) {
  const auto r = SolveMiblp(Load("miblp_toy.json"));
  const ReactionCut* first = CutAt(r, 3, 2);
  ASSERT_NE(first, nullptr);
  ASSERT_EQ(first->dual.terms.size(), 1u);
  const AffineTerm& t = first->dual.terms[0];
  EXPECT_NEAR(t.beta2[0], 23.0 / 7.0, 1e-9);
  EXPECT_NEAR(t.phi, -27.0 / 7.0, 1e-9);
  EXPECT_NEAR(t.constant, 0.0, 1e-9);
  // Two-decimal anchors.
  EXPECT_NEAR(t.beta2[0], 3.29, 0.005);
  EXPECT_NEAR(t.phi, -3.86, 0.005);
  ASSERT_TRUE(first->primal.has_value());
  EXPECT_NEAR(first->primal->integer_cost, 4, 1e-9);
  const double five[] = {5}, six[] = {6};
  EXPECT_EQ(EvalPrimal(*first->primal, five), ExtendedReal(4.0));
  EXPECT_TRUE(EvalPrimal(*first->primal, six).is_pos_inf());

  const ReactionCut* origin = CutAt(r, 0, 0);
  ASSERT_NE(origin, nullptr);
  ASSERT_EQ(origin->dual.terms.size(), 1u);
  EXPECT_NEAR(origin->dual.terms[0].phi, -5.0 / 3.0, 1e-9);
  EXPECT_NEAR(origin->dual.terms[0].beta2[0], 0.0, 1e-9);

  const ReactionCut* mid = CutAt(r, 1, 1);
  ASSERT_NE(mid, nullptr);
  const double two[] = {2}, three[] = {3};
  EXPECT_EQ(EvalPrimal(*mid->primal, two), ExtendedReal(2.0));
  EXPECT_TRUE(EvalPrimal(*mid->primal, three).is_pos_inf());
}

// Every cut is exact at its anchor and below rho over the whole box.
TEST(Miblp, ToyCutsStrongAndValid) {
  const auto inst = Load("miblp_toy.json");
  const auto r = SolveMiblp(inst);
  for (const auto& cut : r.cuts) {
    for (double x1 = 0; x1 <= 3; ++x1) {
      for (double x2 = 0; x2 <= 2; ++x2) {
        const std::vector<double> x = {x1, x2};
        const auto rc = EvaluateReaction(inst, LeaderRhs(inst, x),
                                         FollowerRhs(inst, x));
        const ExtendedReal lo = EvalReactionCut(inst, cut, x);
        EXPECT_LE(lo, ExtendedReal(rc.rho_value) + 1e-6)
            << "cut " << cut.iteration << " at " << x1 << "," << x2;
        if (x == cut.anchor_x) {
          EXPECT_NEAR(lo.finite(), rc.rho_value, 1e-6);
        }
      }
    }
  }
}

// A point is only proposed again once the bounds have met.
TEST(Miblp, IteratesDoNotRepeatBeforeConvergence) {
  for (const auto& inst : {Load("miblp_toy.json"), RandomMiblp(3), RandomMiblp(7)}) {
    const auto r = SolveMiblp(inst);
    std::map<std::vector<double>, int> seen;
    for (std::size_t k = 0; k < r.trace.rows.size(); ++k) {
      const auto& row = r.trace.rows[k];
      if (row.x.empty()) continue;
      if (seen.count(row.x)) {
        EXPECT_EQ(k + 1, r.trace.rows.size());
      }
      seen[row.x] = row.iteration;
    }
  }
}

// d1 = d2 and no leader rows: the problem is min c x + phi(b2 - A2 x).
TEST(Miblp, CollapsesToTwoStage) {
  auto inst = Load("toy_ref.json");
  inst.c = {-1};
  inst.d1 = inst.d2;
  double best = kInfinity;
  for (int x = 0; x <= 10; ++x) {
    best = std::min(best, -x + SolveMilp(FollowerProblem(inst, {double(x)})).value);
  }
  const auto r = SolveMiblp(inst);
  ASSERT_EQ(r.status, BendersStatus::kOptimal);
  EXPECT_NEAR(r.value, best, 1e-6);
  EXPECT_NEAR(best, -2.0, 1e-9);
}

TEST(Miblp, SinglePointBox) {
  auto inst = Load("miblp_toy.json");
  inst.x_lower = {2, 1};
  inst.x_upper = {2, 1};
  const std::vector<double> x = {2, 1};
  const auto rc =
      EvaluateReaction(inst, LeaderRhs(inst, x), FollowerRhs(inst, x));
  const auto r = SolveMiblp(inst);
  ASSERT_EQ(r.status, BendersStatus::kOptimal);
  EXPECT_NEAR(r.value, Dot(inst.c, x) + rc.rho_value, 1e-6);
  // The bound is closed by the master re-proposing the point.
  EXPECT_LE(r.iterations, 2);
}

TEST(Miblp, ContinuousLinkingVariablesRejected) {
  auto inst = Load("miblp_toy.json");
  inst.x_integer = {true, false};
  try {
    SolveMiblp(inst);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("integer"), std::string::npos);
  }
}

TEST(Miblp, UnboundedBoxRejected) {
  auto inst = Load("miblp_toy.json");
  inst.x_upper = {3, kInfinity};
  EXPECT_THROW(SolveMiblp(inst), InputError);
}

// Brute-force optima of RandomMiblp(1..25) from an independent MILP solver;
// NaN marks instances without a bilevel feasible point.
constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
constexpr double kRandomMiblp[] = {
    -20, 2,  kNone, -24, 1,  -3.5, -8,  -12, -8,  0,   -21, kNone, -1.75,
    -21, 2,  -7,    -18, -4, -5,   -15, 6,   0,   -20, kNone, -8};

TEST(Miblp, RandomInstancesMatchFrozenValues) {
  for (int seed = 1; seed <= 25; ++seed) {
    const auto r = SolveMiblp(RandomMiblp(seed));
    const double want = kRandomMiblp[seed - 1];
    if (std::isnan(want)) {
      EXPECT_EQ(r.status, BendersStatus::kInfeasible) << "seed " << seed;
      continue;
    }
    ASSERT_EQ(r.status, BendersStatus::kOptimal) << "seed " << seed;
    EXPECT_NEAR(r.value, want, 1e-6) << "seed " << seed;
    EXPECT_TRUE(r.trace.LowerBoundsNondecreasing()) << "seed " << seed;
  }
}

}  // namespace
}  // namespace gbd
