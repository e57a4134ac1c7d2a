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

#ifndef GBD_TRACE_H_
#define GBD_TRACE_H_

#include <ostream>
#include <string>
#include <vector>

#include "gbd/extended_real.h"

namespace gbd {

enum class CutKind { kNone, kOptimality, kFeasibility, kNoGood };
const char* ToString(CutKind kind);

struct TraceRow {
  int iteration = 0;
  std::vector<double> x;
  ExtendedReal lower_bound = ExtendedReal::NegInf();
  ExtendedReal upper_bound = ExtendedReal::PosInf();
  CutKind cut = CutKind::kNone;
  // Per-scenario subproblem values (two-stage driver only).
  std::vector<ExtendedReal> scenario_values;
  // Bilevel driver only.
  ExtendedReal phi = 0.0;
  ExtendedReal rho = 0.0;
  int terms = 0;
};

struct BendersTrace {
  std::vector<TraceRow> rows;

  bool LowerBoundsNondecreasing(double tol = 1e-9) const;
  bool UpperAboveLower(double tol = 1e-9) const;
};

// iter,LB,UB,cut_type
void WriteLpTraceCsv(std::ostream& out, const BendersTrace& trace);
// iter,LB,UB,cut_type,x,sub_1..sub_S
void WriteTwoStageTraceCsv(std::ostream& out, const BendersTrace& trace);
// iter,LB,UB,x,phi,rho,terms,cut_kind
void WriteMiblpTraceCsv(std::ostream& out, const BendersTrace& trace);

// Space-separated vector, numbers formatted like ExtendedReal::ToString.
std::string FormatVector(const std::vector<double>& v);

}  // namespace gbd

#endif  // GBD_TRACE_H_
