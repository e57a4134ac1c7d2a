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

#ifndef GBD_ORACLE_H_
#define GBD_ORACLE_H_

#include <vector>

#include "gbd/benders_miblp.h"
#include "gbd/branch_bound.h"
#include "gbd/instances.h"
#include "gbd/piecewise.h"

namespace gbd {

// Independent settings for ground-truth solves: cold-started LPs and a
// tighter integrality tolerance than the drivers use.
BranchBoundOptions OracleOptions();

// Direct solve of min c^T x + d^T y over the joint region.
LpCertificate OracleLpDirect(const LpBendersInstance& inst);

// Deterministic equivalent with one y-block per scenario. Columns are x
// followed by the y-blocks in scenario order.
MilpProblem TwoStageExtensiveForm(const TwoStageInstance& inst);
MilpResult OracleTwoStage(const TwoStageInstance& inst);

struct MiblpOracleResult {
  bool feasible = false;
  double value = kInfinity;
  std::vector<double> x;
  std::vector<double> y;
  int points = 0;
};

// min over the integer x-box of c^T x + rho(b1 - A1 x, b2 - A2 x), scanning
// points in lexicographic order and keeping the first minimizer. Throws
// BoxTooLarge when the box holds more than max_points points.
MiblpOracleResult OracleMiblp(const MiblpInstance& inst,
                              long max_points = 10000);

// phi_IP(base_rhs + beta * direction) for each beta.
std::vector<Sample> OracleValueFunctionGrid(const MilpProblem& problem,
                                            const std::vector<double>& direction,
                                            const std::vector<double>& betas);

// rho on the line (beta1, beta2) = (b1_base, b2_base) + beta * (dir1, dir2).
std::vector<Sample> OracleReactionGrid(const MiblpInstance& inst,
                                       const std::vector<double>& beta1_base,
                                       const std::vector<double>& beta1_dir,
                                       const std::vector<double>& beta2_base,
                                       const std::vector<double>& beta2_dir,
                                       const std::vector<double>& betas);

}  // namespace gbd

#endif  // GBD_ORACLE_H_
