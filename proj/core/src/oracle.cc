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

#include "gbd/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gbd/errors.h"

namespace gbd {

BranchBoundOptions OracleOptions() {
  BranchBoundOptions o;
  o.integrality_tol = 1e-8;
  o.warm_start = false;
  o.infeasible_lambda = 0.0;
  return o;
}

LpCertificate OracleLpDirect(const LpBendersInstance& inst) {
  inst.Validate();
  const std::size_t n1 = inst.n1();
  const std::size_t n2 = inst.n2();
  LpProblem p;
  p.objective = inst.c;
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

MilpProblem TwoStageExtensiveForm(const TwoStageInstance& inst) {
  inst.Validate();
  const std::size_t n1 = inst.n1();
  const std::size_t n2 = inst.n2();
  const std::size_t s = inst.scenarios.size();
  const std::size_t cols = n1 + s * n2;
  MilpProblem p;
  p.lp.objective = inst.c;
  p.lp.lower = inst.x_lower;
  p.lp.upper = inst.x_upper;
  p.integer = inst.x_integer;
  for (std::size_t w = 0; w < s; ++w) {
    for (std::size_t j = 0; j < n2; ++j) {
      p.lp.objective.push_back(inst.scenarios[w].probability * inst.d2[j]);
      p.lp.lower.push_back(0.0);
      p.lp.upper.push_back(kInfinity);
      p.integer.push_back(inst.y_integer[j]);
    }
  }
  p.lp.constraints = Matrix(0, cols);
  std::vector<double> row(cols);
  for (std::size_t i = 0; i < inst.m1(); ++i) {
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t j = 0; j < n1; ++j) row[j] = inst.a1(i, j);
    p.lp.constraints.AppendRow(row);
    p.lp.rhs.push_back(inst.b1[i]);
  }
  for (std::size_t w = 0; w < s; ++w) {
    const Scenario& sc = inst.scenarios[w];
    for (std::size_t i = 0; i < inst.m2(); ++i) {
      std::fill(row.begin(), row.end(), 0.0);
      for (std::size_t j = 0; j < n1; ++j) row[j] = sc.a2(i, j);
      for (std::size_t j = 0; j < n2; ++j) row[n1 + w * n2 + j] = inst.g2(i, j);
      p.lp.constraints.AppendRow(row);
      p.lp.rhs.push_back(sc.b2[i]);
    }
  }
  p.lp.senses.assign(p.lp.rhs.size(), RowSense::kGreaterEqual);
  return p;
}

MilpResult OracleTwoStage(const TwoStageInstance& inst) {
  return SolveMilp(TwoStageExtensiveForm(inst), OracleOptions());
}

MiblpOracleResult OracleMiblp(const MiblpInstance& inst, long max_points) {
  inst.Validate();
  const std::size_t n1 = inst.n1();
  double count = 1.0;
  for (std::size_t j = 0; j < n1; ++j) {
    count *= std::floor(inst.x_upper[j]) - std::ceil(inst.x_lower[j]) + 1.0;
  }
  if (count > static_cast<double>(max_points)) {
    throw BoxTooLarge(std::to_string(static_cast<long long>(count)) +
                      " points exceed the cap of " + std::to_string(max_points));
  }
  MiblpOracleResult out;
  if (count < 1.0) return out;
  std::vector<double> x(n1);
  for (std::size_t j = 0; j < n1; ++j) x[j] = std::ceil(inst.x_lower[j]);
  const BranchBoundOptions opts = OracleOptions();
  while (true) {
    ++out.points;
    const ReactionCertificate cert =
        EvaluateReaction(inst, LeaderRhs(inst, x), FollowerRhs(inst, x), opts);
    if (cert.status == ReactionStatus::kUnbounded) {
      throw std::runtime_error("reaction unbounded at an x-box point");
    }
    if (cert.status == ReactionStatus::kOptimal) {
      const double v = Dot(inst.c, x) + cert.rho_value;
      if (!out.feasible || v < out.value - 1e-9) {
        out.feasible = true;
        out.value = v;
        out.x = x;
        out.y = cert.y;
      }
    }
    // Odometer with the last coordinate fastest.
    std::size_t j = n1;
    while (j > 0) {
      --j;
      if (x[j] + 1 <= inst.x_upper[j]) {
        x[j] += 1;
        for (std::size_t k = j + 1; k < n1; ++k) x[k] = std::ceil(inst.x_lower[k]);
        break;
      }
      if (j == 0) return out;
    }
    if (n1 == 0) return out;
  }
}

std::vector<Sample> OracleValueFunctionGrid(const MilpProblem& problem,
                                            const std::vector<double>& direction,
                                            const std::vector<double>& betas) {
  if (direction.size() != problem.lp.num_rows()) {
    throw DimensionMismatch("rhs direction");
  }
  const BranchBoundOptions opts = OracleOptions();
  std::vector<Sample> out;
  for (double b : betas) {
    MilpProblem p = problem;
    for (std::size_t i = 0; i < direction.size(); ++i) {
      p.lp.rhs[i] += b * direction[i];
    }
    const MilpResult r = SolveMilp(p, opts);
    ExtendedReal v = r.value;
    if (r.status == MilpStatus::kInfeasible) v = ExtendedReal::PosInf();
    if (r.status == MilpStatus::kUnbounded) v = ExtendedReal::NegInf();
    if (r.status == MilpStatus::kNodeLimit) {
      throw std::runtime_error("node limit in value-function oracle");
    }
    out.push_back({b, v});
  }
  return out;
}

std::vector<Sample> OracleReactionGrid(const MiblpInstance& inst,
                                       const std::vector<double>& beta1_base,
                                       const std::vector<double>& beta1_dir,
                                       const std::vector<double>& beta2_base,
                                       const std::vector<double>& beta2_dir,
                                       const std::vector<double>& betas) {
  const BranchBoundOptions opts = OracleOptions();
  std::vector<Sample> out;
  for (double b : betas) {
    std::vector<double> b1 = beta1_base;
    std::vector<double> b2 = beta2_base;
    for (std::size_t i = 0; i < b1.size(); ++i) b1[i] += b * beta1_dir[i];
    for (std::size_t i = 0; i < b2.size(); ++i) b2[i] += b * beta2_dir[i];
    const ReactionCertificate c = EvaluateReaction(inst, b1, b2, opts);
    ExtendedReal v = c.rho_value;
    if (c.status == ReactionStatus::kSecondStageInfeasible ||
        c.status == ReactionStatus::kLinkInfeasible) {
      v = ExtendedReal::PosInf();
    }
    if (c.status == ReactionStatus::kUnbounded) v = ExtendedReal::NegInf();
    out.push_back({b, v});
  }
  return out;
}

}  // namespace gbd
