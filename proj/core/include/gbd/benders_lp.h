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

#ifndef GBD_BENDERS_LP_H_
#define GBD_BENDERS_LP_H_

#include <string>
#include <vector>

#include "gbd/benders_common.h"
#include "gbd/instances.h"

namespace gbd {

struct LpBendersResult {
  BendersStatus status = BendersStatus::kInfeasible;
  std::vector<double> x;
  std::vector<double> y;
  double value = kInfinity;
  int iterations = 0;
  BendersTrace trace;
  std::vector<LinearCut> cuts;
  std::vector<std::string> warnings;
};

// Classical Benders: LP master over (x, z) with optimality cuts
// z >= eta^T (b - A x) and feasibility cuts 0 >= sigma^T (b - A x).
LpBendersResult SolveLpBenders(const LpBendersInstance& inst,
                               const BendersOptions& options = {});

// min d^T y  s.t.  G y >= rhs, y >= 0.
LpProblem LpSubproblem(const LpBendersInstance& inst,
                       const std::vector<double>& rhs);

}  // namespace gbd

#endif  // GBD_BENDERS_LP_H_
