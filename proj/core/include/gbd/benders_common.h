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

#ifndef GBD_BENDERS_COMMON_H_
#define GBD_BENDERS_COMMON_H_

#include <string>
#include <vector>

#include "gbd/branch_bound.h"
#include "gbd/simplex.h"
#include "gbd/trace.h"

namespace gbd {

enum class BendersStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  // A modelling assumption failed, e.g. an unbounded second stage.
  kAssumptionViolated,
  kIterationLimit,
};
const char* ToString(BendersStatus status);

struct BendersOptions {
  double tol = 1e-6;
  int max_iters = 200;
  // Subproblem trees. Infeasible leaves use the smallest strong multiplier
  // so master big-M constants stay moderate.
  BranchBoundOptions subproblem{.infeasible_lambda = 0.0};
  // Master MILPs need a tight integrality tolerance because binaries are
  // multiplied by big-M constants.
  BranchBoundOptions master{.integrality_tol = 1e-9, .propagate = true};
};

// One linear master row: z_coeff * z + x_coeffs^T x >= rhs.
struct LinearCut {
  CutKind kind = CutKind::kOptimality;
  std::vector<double> x_coeffs;
  double z_coeff = 0.0;
  double rhs = 0.0;
  // Row multipliers that generated the cut (dual or Farkas).
  std::vector<double> multipliers;
  int iteration = 0;
  int scenario = -1;
};

}  // namespace gbd

#endif  // GBD_BENDERS_COMMON_H_
