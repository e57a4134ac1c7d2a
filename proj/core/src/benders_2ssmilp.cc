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

#include "gbd/benders_2ssmilp.h"

#include <algorithm>
#include <cmath>

#include "gbd/big_m.h"
#include "gbd/errors.h"
#include "master_model.h"

namespace gbd {

using internal::MasterModel;

MilpProblem ScenarioSubproblem(const TwoStageInstance& inst,
                               const std::vector<double>& rhs) {
  MilpProblem p;
  p.lp.objective = inst.d2;
  p.lp.constraints = inst.m2() > 0 ? inst.g2 : Matrix(0, inst.n2());
  p.lp.rhs = rhs;
  p.lp.senses.assign(inst.m2(), RowSense::kGreaterEqual);
  p.lp.lower.assign(inst.n2(), 0.0);
  p.lp.upper.assign(inst.n2(), kInfinity);
  p.integer = inst.y_integer;
  return p;
}

std::vector<double> ScenarioRhs(const TwoStageInstance& inst, std::size_t w,
                                const std::vector<double>& x) {
  const Scenario& s = inst.scenarios[w];
  std::vector<double> r = s.b2;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) r[i] -= s.a2(i, j) * x[j];
  }
  return r;
}

namespace {

// Componentwise minimum of b2_w - A2_w x over the x-box.
std::vector<double> LowestRhs(const TwoStageInstance& inst, std::size_t w) {
  const Scenario& s = inst.scenarios[w];
  std::vector<double> r(inst.m2());
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<double> neg(s.a2.Row(i).begin(), s.a2.Row(i).end());
    for (double& v : neg) v = -v;
    r[i] = LinearRange(neg, s.b2[i], inst.x_lower, inst.x_upper).lo;
  }
  return r;
}

// Affine pieces of a scenario cut as functions of x:
//   D_t(b2 - A2 x) = kappa_t - g_t^T x.
struct XAffine {
  std::vector<double> g;
  double kappa = 0.0;
};

std::vector<XAffine> ToXSpace(const MinAffineDual& d, const Scenario& s) {
  std::vector<XAffine> out;
  for (const AffineTerm& t : d.terms) {
    XAffine a;
    a.kappa = Dot(t.beta2, s.b2) + t.constant;
    a.g.assign(s.a2.cols(), 0.0);
    for (std::size_t i = 0; i < t.beta2.size(); ++i) {
      for (std::size_t j = 0; j < a.g.size(); ++j) {
        a.g[j] += t.beta2[i] * s.a2(i, j);
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<double> RoundIntegers(std::vector<double> x,
                                  const std::vector<bool>& integer) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (integer[j]) x[j] = std::round(x[j]);
  }
  return x;
}

}  // namespace

TwoStageResult SolveTwoStage(const TwoStageInstance& inst,
                             const BendersOptions& options) {
  inst.Validate();
  const std::size_t n1 = inst.n1();
  const std::size_t nscen = inst.scenarios.size();
  TwoStageResult result;

  // z floors from the LP relaxation at the lowest reachable rhs; the value
  // function is nondecreasing in the rhs.
  std::vector<double> floors(nscen, 0.0);
  for (std::size_t w = 0; w < nscen; ++w) {
    MilpProblem sub = ScenarioSubproblem(inst, LowestRhs(inst, w));
    const LpCertificate c = SolveLp(sub.lp, options.subproblem.lp);
    if (c.status == LpStatus::kInfeasible) {
      result.status = BendersStatus::kInfeasible;
      result.warnings.push_back("scenario " + std::to_string(w + 1) +
                                " is infeasible for every x in the box");
      return result;
    }
    if (c.status == LpStatus::kUnbounded) {
      result.status = BendersStatus::kUnbounded;
      result.value = -kInfinity;
      return result;
    }
    floors[w] = c.objective;
  }

  MasterModel model;
  std::vector<int> x_cols(n1);
  for (std::size_t j = 0; j < n1; ++j) {
    x_cols[j] = model.AddColumn(inst.c[j], inst.x_lower[j], inst.x_upper[j],
                                inst.x_integer[j]);
  }
  std::vector<int> z_cols(nscen, -1);
  for (std::size_t w = 0; w < nscen; ++w) {
    if (inst.scenarios[w].probability > 0.0) {
      z_cols[w] = model.AddColumn(inst.scenarios[w].probability, floors[w],
                                  kInfinity, false);
    }
  }
  for (std::size_t i = 0; i < inst.m1(); ++i) {
    MasterModel::Coeffs row;
    for (std::size_t j = 0; j < n1; ++j) row.push_back({x_cols[j], inst.a1(i, j)});
    model.AddRow(row, RowSense::kGreaterEqual, inst.b1[i]);
  }

  // Exact value of the current master objective at x.
  auto master_value = [&](const std::vector<double>& x) {
    double v = Dot(inst.c, x);
    for (std::size_t w = 0; w < nscen; ++w) {
      if (z_cols[w] < 0) continue;
      double z = floors[w];
      const std::vector<double> rhs = ScenarioRhs(inst, w, x);
      for (const ScenarioCut& cut : result.cuts) {
        if (cut.scenario != static_cast<int>(w)) continue;
        z = std::max(z, EvalDual(cut.dual, {}, rhs).finite());
      }
      v += inst.scenarios[w].probability * z;
    }
    return v;
  };

  double lb = -kInfinity;
  double ub = kInfinity;
  for (int k = 1; k <= options.max_iters; ++k) {
    result.iterations = k;
    TraceRow row;
    row.iteration = k;
    const MilpResult mr = SolveMilp(model.Build(), options.master);
    if (mr.status == MilpStatus::kUnbounded) {
      throw NumericalBreakdown("two-stage master unbounded");
    }
    if (mr.status == MilpStatus::kNodeLimit) {
      result.status = BendersStatus::kIterationLimit;
      result.warnings.push_back("master node limit reached");
      return result;
    }
    if (mr.status == MilpStatus::kInfeasible) {
      result.status = std::isfinite(ub) ? BendersStatus::kOptimal
                                        : BendersStatus::kInfeasible;
      row.lower_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
      row.upper_bound = row.lower_bound;
      result.trace.rows.push_back(row);
      return result;
    }
    std::vector<double> x(mr.solution.begin(), mr.solution.begin() + n1);
    x = RoundIntegers(std::move(x), inst.x_integer);
    lb = std::max(lb, master_value(x));
    row.x = x;
    row.lower_bound = lb;
    if (ub - lb <= options.tol) {
      row.upper_bound = ub;
      result.trace.rows.push_back(row);
      result.status = BendersStatus::kOptimal;
      return result;
    }

    bool all_feasible = true;
    double total = Dot(inst.c, x);
    std::vector<std::vector<double>> ys(nscen);
    CutKind emitted = CutKind::kOptimality;
    bool nogood_needed = false;
    for (std::size_t w = 0; w < nscen; ++w) {
      const std::vector<double> rhs = ScenarioRhs(inst, w, x);
      const MilpProblem sub = ScenarioSubproblem(inst, rhs);
      const MilpResult sr = SolveMilp(sub, options.subproblem);
      if (sr.status == MilpStatus::kUnbounded) {
        result.status = BendersStatus::kUnbounded;
        result.value = -kInfinity;
        return result;
      }
      if (sr.status == MilpStatus::kNodeLimit) {
        result.status = BendersStatus::kIterationLimit;
        result.warnings.push_back("subproblem node limit reached");
        return result;
      }
      if (sr.status == MilpStatus::kInfeasible) {
        all_feasible = false;
        row.scenario_values.push_back(ExtendedReal::PosInf());
        const LpCertificate lc = SolveLp(sub.lp, options.subproblem.lp);
        if (lc.status == LpStatus::kInfeasible) {
          // sigma^T (b2 - A2 x) <= 0 for every feasible x.
          LinearCut cut;
          cut.kind = CutKind::kFeasibility;
          cut.iteration = k;
          cut.scenario = static_cast<int>(w);
          cut.multipliers = lc.farkas;
          cut.x_coeffs.assign(n1, 0.0);
          const Scenario& s = inst.scenarios[w];
          for (std::size_t i = 0; i < inst.m2(); ++i) {
            for (std::size_t j = 0; j < n1; ++j) {
              cut.x_coeffs[j] += lc.farkas[i] * s.a2(i, j);
            }
          }
          cut.rhs = Dot(lc.farkas, s.b2);
          MasterModel::Coeffs coeffs;
          for (std::size_t j = 0; j < n1; ++j) {
            coeffs.push_back({x_cols[j], cut.x_coeffs[j]});
          }
          model.AddRow(coeffs, RowSense::kGreaterEqual, cut.rhs);
          result.feasibility_cuts.push_back(std::move(cut));
          if (emitted != CutKind::kNoGood) emitted = CutKind::kFeasibility;
        } else {
          nogood_needed = true;
        }
        continue;
      }
      row.scenario_values.push_back(sr.value);
      ys[w] = sr.solution;
      total += inst.scenarios[w].probability * sr.value;
      if (z_cols[w] < 0) continue;

      ScenarioCut cut;
      cut.iteration = k;
      cut.scenario = static_cast<int>(w);
      cut.dual = ExtractDualFunction(sr.tree);
      const std::vector<XAffine> pieces = ToXSpace(cut.dual, inst.scenarios[w]);
      double top = -kInfinity;
      for (const XAffine& a : pieces) {
        std::vector<double> neg = a.g;
        for (double& v : neg) v = -v;
        top = std::max(top, LinearRange(neg, a.kappa, inst.x_lower, inst.x_upper).hi);
      }
      cut.big_m = inst.big_m.value_or(PadBigM(top - floors[w]));
      if (pieces.size() == 1) {
        MasterModel::Coeffs coeffs{{z_cols[w], 1.0}};
        for (std::size_t j = 0; j < n1; ++j) {
          coeffs.push_back({x_cols[j], pieces[0].g[j]});
        }
        model.AddRow(coeffs, RowSense::kGreaterEqual, pieces[0].kappa);
      } else {
        MasterModel::Coeffs pick;
        for (const XAffine& a : pieces) {
          const int u = model.AddColumn(0.0, 0.0, 1.0, true);
          pick.push_back({u, 1.0});
          MasterModel::Coeffs coeffs{{z_cols[w], 1.0}, {u, -cut.big_m}};
          for (std::size_t j = 0; j < n1; ++j) coeffs.push_back({x_cols[j], a.g[j]});
          model.AddRow(coeffs, RowSense::kGreaterEqual, a.kappa - cut.big_m);
        }
        model.AddRow(pick, RowSense::kEqual, 1.0);
      }
      result.cuts.push_back(std::move(cut));
    }

    if (nogood_needed) {
      for (std::size_t j = 0; j < n1; ++j) {
        if (!inst.x_integer[j]) {
          result.status = BendersStatus::kAssumptionViolated;
          result.warnings.push_back(
              "integer-infeasible scenario at a point with continuous x");
          return result;
        }
      }
      if (!model.AddNoGood(x_cols, x, inst.x_lower, inst.x_upper)) {
        result.status = std::isfinite(ub) ? BendersStatus::kOptimal
                                          : BendersStatus::kInfeasible;
        row.upper_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
        row.cut = CutKind::kNoGood;
        result.trace.rows.push_back(row);
        return result;
      }
      emitted = CutKind::kNoGood;
    }
    if (all_feasible && total < ub) {
      ub = total;
      result.x = x;
      result.y = ys;
      result.value = total;
    }
    row.cut = all_feasible ? CutKind::kOptimality : emitted;
    row.upper_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
    result.trace.rows.push_back(row);
    if (ub - lb <= options.tol) {
      result.status = BendersStatus::kOptimal;
      return result;
    }
  }
  result.status = BendersStatus::kIterationLimit;
  return result;
}

}  // namespace gbd
