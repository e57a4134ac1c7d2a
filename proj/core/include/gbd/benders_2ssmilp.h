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

#ifndef GBD_BENDERS_2SSMILP_H_
#define GBD_BENDERS_2SSMILP_H_

#include <string>
#include <vector>

#include "gbd/benders_common.h"
#include "gbd/instances.h"
#include "gbd/piecewise.h"

namespace gbd {

// Value-function cut for one scenario: z_w >= min_t D_t(b2_w - A2_w x).
struct ScenarioCut {
  int iteration = 0;
  int scenario = 0;
  MinAffineDual dual;
  double big_m = 0.0;
};

struct TwoStageResult {
  BendersStatus status = BendersStatus::kInfeasible;
  std::vector<double> x;
  std::vector<std::vector<double>> y;
  double value = kInfinity;
  int iterations = 0;
  BendersTrace trace;
  std::vector<ScenarioCut> cuts;
  std::vector<LinearCut> feasibility_cuts;
  std::vector<std::string> warnings;
};

TwoStageResult SolveTwoStage(const TwoStageInstance& inst,
                             const BendersOptions& options = {});

// Scenario second stage at right-hand side `rhs`.
MilpProblem ScenarioSubproblem(const TwoStageInstance& inst,
                               const std::vector<double>& rhs);

// b2_w - A2_w x.
std::vector<double> ScenarioRhs(const TwoStageInstance& inst, std::size_t w,
                                const std::vector<double>& x);

}  // namespace gbd

#endif  // GBD_BENDERS_2SSMILP_H_
