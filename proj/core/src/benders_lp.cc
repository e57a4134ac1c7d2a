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

#include <algorithm>
#include <cmath>

namespace gbd {

const char* ToString(BendersStatus status) {
  switch (status) {
    case BendersStatus::kOptimal:
      return "optimal";
    case BendersStatus::kInfeasible:
      return "infeasible";
    case BendersStatus::kUnbounded:
      return "unbounded";
    case BendersStatus::kAssumptionViolated:
      return "assumption_violated";
    case BendersStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

LpProblem LpSubproblem(const LpBendersInstance& inst,
                       const std::vector<double>& rhs) {
  LpProblem p;
  p.objective = inst.d;
  p.constraints = inst.m() > 0 ? inst.g : Matrix(0, inst.n2());
  p.rhs = rhs;
  p.senses.assign(inst.m(), RowSense::kGreaterEqual);
  p.lower.assign(inst.n2(), 0.0);
  p.upper.assign(inst.n2(), kInfinity);
  return p;
}

namespace {

// min d^T y over the joint region; a valid floor for z at every feasible x.
LpCertificate JointFloor(const LpBendersInstance& inst) {
  const std::size_t n1 = inst.n1();
  const std::size_t n2 = inst.n2();
  LpProblem p;
  p.objective.assign(n1, 0.0);
  p.objective.insert(p.objective.end(), inst.d.begin(), inst.d.end());
  p.constraints = Matrix(inst.m(), n1 + n2);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    for (std::size_t j = 0; j < n1; ++j) p.constraints(i, j) = inst.a(i, j);
    for (std::size_t j = 0; j < n2; ++j) p.constraints(i, n1 + j) = inst.g(i, j);
  }
  p.rhs = inst.b;
  p.senses.assign(inst.m(), RowSense::kGreaterEqual);
  p.lower.assign(n1 + n2, 0.0);
  p.upper = inst.x_upper;
  p.upper.resize(n1 + n2, kInfinity);
  return SolveLp(p);
}

}  // namespace

LpBendersResult SolveLpBenders(const LpBendersInstance& inst,
                               const BendersOptions& options) {
  inst.Validate();
  const std::size_t n1 = inst.n1();
  const std::size_t m = inst.m();
  LpBendersResult result;

  const LpCertificate floor_cert = JointFloor(inst);
  if (floor_cert.status == LpStatus::kInfeasible) {
    result.status = BendersStatus::kInfeasible;
    return result;
  }
  if (floor_cert.status == LpStatus::kUnbounded) {
    result.status = BendersStatus::kUnbounded;
    result.value = -kInfinity;
    return result;
  }
  const double floor = floor_cert.objective;

  // Master columns: x (n1), z.
  LpProblem master;
  master.objective = inst.c;
  master.objective.push_back(1.0);
  master.constraints = Matrix(0, n1 + 1);
  master.lower.assign(n1, 0.0);
  master.lower.push_back(floor);
  master.upper = inst.x_upper;
  master.upper.push_back(kInfinity);

  double lb = -kInfinity;
  double ub = kInfinity;
  for (int k = 1; k <= options.max_iters; ++k) {
    result.iterations = k;
    const LpCertificate mc = SolveLp(master, options.subproblem.lp);
    TraceRow row;
    row.iteration = k;
    if (mc.status != LpStatus::kOptimal) {
      // Only feasibility cuts can empty the master.
      result.status = std::isfinite(ub) ? BendersStatus::kOptimal
                                        : BendersStatus::kInfeasible;
      row.lower_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
      row.upper_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
      result.trace.rows.push_back(row);
      return result;
    }
    std::vector<double> x(mc.primal.begin(), mc.primal.begin() + n1);
    lb = std::max(lb, mc.objective);
    row.x = x;
    row.lower_bound = lb;

    std::vector<double> rhs = inst.b;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n1; ++j) rhs[i] -= inst.a(i, j) * x[j];
    }
    const LpProblem sub = LpSubproblem(inst, rhs);
    const LpCertificate sc = SolveLp(sub, options.subproblem.lp);
    LinearCut cut;
    cut.iteration = k;
    cut.x_coeffs.assign(n1, 0.0);
    if (sc.status == LpStatus::kUnbounded) {
      result.status = BendersStatus::kUnbounded;
      result.value = -kInfinity;
      row.upper_bound = ExtendedReal::NegInf();
      result.trace.rows.push_back(row);
      return result;
    }
    const std::vector<double>& mult =
        sc.status == LpStatus::kOptimal ? sc.duals : sc.farkas;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n1; ++j) {
        cut.x_coeffs[j] += mult[i] * inst.a(i, j);
      }
    }
    cut.rhs = Dot(mult, inst.b);
    cut.multipliers = mult;
    if (sc.status == LpStatus::kOptimal) {
      cut.kind = CutKind::kOptimality;
      cut.z_coeff = 1.0;
      const double value = Dot(inst.c, x) + sc.objective;
      if (value < ub) {
        ub = value;
        result.x = x;
        result.y = sc.primal;
        result.value = value;
      }
    } else {
      cut.kind = CutKind::kFeasibility;
    }
    row.cut = cut.kind;
    row.upper_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
    result.trace.rows.push_back(row);
    if (ub - lb <= options.tol) {
      result.status = BendersStatus::kOptimal;
      return result;
    }
    std::vector<double> coeffs = cut.x_coeffs;
    coeffs.push_back(cut.z_coeff);
    master.constraints.AppendRow(coeffs);
    master.rhs.push_back(cut.rhs);
    master.senses.push_back(RowSense::kGreaterEqual);
    result.cuts.push_back(std::move(cut));
  }
  result.status = BendersStatus::kIterationLimit;
  return result;
}

}  // namespace gbd
