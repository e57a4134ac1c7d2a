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

#ifndef GBD_RANDOM_INSTANCES_H_
#define GBD_RANDOM_INSTANCES_H_

#include <cstdint>

#include "gbd/instances.h"

namespace gbd {

// Seeded generators for the oracle-equivalence suites. Same seed, same
// instance, on every platform (mt19937_64 with integer draws only).

// m=5, n1=n2=3, x in [0,10]^3, d > 0. Row 0 of G is zero. Feasible by
// construction.
LpBendersInstance RandomLpBenders(std::uint64_t seed);

// Two integer x in [0,4]^2, three y (first two integer), two second-stage
// rows, 1 to 3 scenarios. Every G2 row has a positive entry, so each
// scenario is feasible for all x.
TwoStageInstance RandomTwoStage(std::uint64_t seed);

// Two integer x in [0,4]^2, three or four y with mixed integrality, one
// leader row, two follower rows, d2 > 0. The leader row can make some x
// (or all of them) infeasible.
MiblpInstance RandomMiblp(std::uint64_t seed);

}  // namespace gbd

#endif  // GBD_RANDOM_INSTANCES_H_
