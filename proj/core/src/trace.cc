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

#include "gbd/trace.h"

#include <algorithm>

namespace gbd {

const char* ToString(CutKind kind) {
  switch (kind) {
    case CutKind::kNone:
      return "none";
    case CutKind::kOptimality:
      return "optimality";
    case CutKind::kFeasibility:
      return "feasibility";
    case CutKind::kNoGood:
      return "nogood";
  }
  return "unknown";
}

bool BendersTrace::LowerBoundsNondecreasing(double tol) const {
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const ExtendedReal prev = rows[k - 1].lower_bound;
    const ExtendedReal cur = rows[k].lower_bound;
    if (prev.is_neg_inf()) continue;
    if (cur.is_neg_inf()) return false;
    if (prev.is_pos_inf()) {
      if (!cur.is_pos_inf()) return false;
      continue;
    }
    if (cur.is_finite() && cur.finite() < prev.finite() - tol) return false;
  }
  return true;
}

bool BendersTrace::UpperAboveLower(double tol) const {
  for (const TraceRow& r : rows) {
    if (r.lower_bound.is_neg_inf() || r.upper_bound.is_pos_inf()) continue;
    if (r.lower_bound.is_pos_inf()) {
      if (!r.upper_bound.is_pos_inf()) return false;
      continue;
    }
    if (r.upper_bound.finite() < r.lower_bound.finite() - tol) return false;
  }
  return true;
}

std::string FormatVector(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ' ';
    s += ExtendedReal(v[i]).ToString();
  }
  return s;
}

void WriteLpTraceCsv(std::ostream& out, const BendersTrace& trace) {
  out << "iter,LB,UB,cut_type\n";
  for (const TraceRow& r : trace.rows) {
    out << r.iteration << ',' << r.lower_bound.ToString() << ','
        << r.upper_bound.ToString() << ',' << ToString(r.cut) << '\n';
  }
}

void WriteTwoStageTraceCsv(std::ostream& out, const BendersTrace& trace) {
  std::size_t s = 0;
  for (const TraceRow& r : trace.rows) s = std::max(s, r.scenario_values.size());
  out << "iter,LB,UB,cut_type,x";
  for (std::size_t i = 1; i <= s; ++i) out << ",sub_" << i;
  out << '\n';
  for (const TraceRow& r : trace.rows) {
    out << r.iteration << ',' << r.lower_bound.ToString() << ','
        << r.upper_bound.ToString() << ',' << ToString(r.cut) << ','
        << FormatVector(r.x);
    for (std::size_t i = 0; i < s; ++i) {
      out << ',';
      if (i < r.scenario_values.size()) out << r.scenario_values[i].ToString();
    }
    out << '\n';
  }
}

void WriteMiblpTraceCsv(std::ostream& out, const BendersTrace& trace) {
  out << "iter,LB,UB,x,phi,rho,terms,cut_kind\n";
  for (const TraceRow& r : trace.rows) {
    out << r.iteration << ',' << r.lower_bound.ToString() << ','
        << r.upper_bound.ToString() << ',' << FormatVector(r.x) << ',';
    // Converged before the reaction was evaluated.
    if (r.cut == CutKind::kNone) {
      out << ",,";
    } else {
      out << r.phi.ToString() << ',' << r.rho.ToString() << ',' << r.terms;
    }
    out << ',' << ToString(r.cut) << '\n';
  }
}

}  // namespace gbd
