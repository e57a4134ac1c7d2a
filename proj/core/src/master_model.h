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

#ifndef GBD_SRC_MASTER_MODEL_H_
#define GBD_SRC_MASTER_MODEL_H_

#include <utility>
#include <vector>

#include "gbd/branch_bound.h"

namespace gbd::internal {

// Incrementally assembled MILP used by the Benders masters.
class MasterModel {
 public:
  using Coeffs = std::vector<std::pair<int, double>>;

  int AddColumn(double objective, double lower, double upper, bool integer) {
    objective_.push_back(objective);
    lower_.push_back(lower);
    upper_.push_back(upper);
    integer_.push_back(integer);
    for (auto& row : rows_) row.resize(objective_.size(), 0.0);
    return static_cast<int>(objective_.size()) - 1;
  }

  void AddRow(const Coeffs& coeffs, RowSense sense, double rhs) {
    std::vector<double> row(objective_.size(), 0.0);
    for (const auto& [col, v] : coeffs) row[col] += v;
    rows_.push_back(std::move(row));
    senses_.push_back(sense);
    rhs_.push_back(rhs);
  }

  // Excludes the integer point `point` of the columns `cols` (box [lo, hi])
  // with one binary per admissible direction:
  //   w+_j = 1  =>  x_j >= point_j + 1,   w-_j = 1  =>  x_j <= point_j - 1,
  //   sum w >= 1.
  // Returns false when the box is the single point (nothing else remains).
  bool AddNoGood(const std::vector<int>& cols, const std::vector<double>& point,
                 const std::vector<double>& lo, const std::vector<double>& hi) {
    Coeffs pick;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (point[j] + 1 <= hi[j]) {
        const int w = AddColumn(0.0, 0.0, 1.0, true);
        // x_j - (point_j + 1 - lo_j) w >= lo_j
        AddRow({{cols[j], 1.0}, {w, -(point[j] + 1 - lo[j])}},
               RowSense::kGreaterEqual, lo[j]);
        pick.push_back({w, 1.0});
      }
      if (point[j] - 1 >= lo[j]) {
        const int w = AddColumn(0.0, 0.0, 1.0, true);
        // x_j + (hi_j - point_j + 1) w <= hi_j
        AddRow({{cols[j], 1.0}, {w, hi[j] - point[j] + 1}},
               RowSense::kLessEqual, hi[j]);
        pick.push_back({w, 1.0});
      }
    }
    if (pick.empty()) return false;
    AddRow(pick, RowSense::kGreaterEqual, 1.0);
    return true;
  }

  MilpProblem Build() const {
    MilpProblem p;
    p.lp.objective = objective_;
    p.lp.constraints = Matrix(rows_.size(), objective_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < objective_.size(); ++j) {
        p.lp.constraints(i, j) = rows_[i][j];
      }
    }
    p.lp.rhs = rhs_;
    p.lp.senses = senses_;
    p.lp.lower = lower_;
    p.lp.upper = upper_;
    p.integer = integer_;
    return p;
  }

  std::size_t num_cols() const { return objective_.size(); }
  std::size_t num_rows() const { return rows_.size(); }

 private:
  std::vector<double> objective_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<bool> integer_;
  std::vector<std::vector<double>> rows_;
  std::vector<RowSense> senses_;
  std::vector<double> rhs_;
};

}  // namespace gbd::internal

#endif  // GBD_SRC_MASTER_MODEL_H_
