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

#ifndef GBD_INSTANCE_IO_H_
#define GBD_INSTANCE_IO_H_

#include <string>
#include <variant>
#include <vector>

#include "gbd/branch_bound.h"
#include "gbd/instances.h"

namespace gbd {

// A plain MILP plus the rhs direction used for value-function sampling:
// rhs(beta) = rhs + beta * direction.
struct MilpInstance {
  MilpProblem problem;
  std::vector<double> direction;
};

using Instance =
    std::variant<LpBendersInstance, TwoStageInstance, MiblpInstance, MilpInstance>;

// "lp-benders", "2ssmilp", "miblp" or "milp".
std::string KindOf(const Instance& inst);

// Parses and validates a JSON instance document. Throws InputError naming
// the offending field, or the line and column of a syntax error.
Instance ParseInstance(const std::string& text);
Instance LoadInstance(const std::string& path);

// Canonical JSON (two-space indent); ParseInstance(SerializeInstance(i))
// reproduces i exactly.
std::string SerializeInstance(const Instance& inst);

// Warnings raised while parsing (e.g. a defaulted bound); cleared by every
// ParseInstance call on this thread.
const std::vector<std::string>& LastParseWarnings();

}  // namespace gbd

#endif  // GBD_INSTANCE_IO_H_
