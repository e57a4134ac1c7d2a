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

#ifndef GBD_SIMPLEX_H_
#define GBD_SIMPLEX_H_

#include <limits>
#include <vector>

#include "gbd/matrix.h"

namespace gbd {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kGreaterEqual, kLessEqual, kEqual };

// min c^T x  s.t.  A_i x (sense_i) b_i,  lower <= x <= upper.
// Bounds may be +-kInfinity; they are handled implicitly by the solver and
// never become rows.
struct LpProblem {
  std::vector<double> objective;
  Matrix constraints;
  std::vector<double> rhs;
  std::vector<RowSense> senses;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_rows() const { return rhs.size(); }
  std::size_t num_cols() const { return objective.size(); }

  // Throws DimensionMismatch or std::invalid_argument (lower > upper).
  void Validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct LpCertificate {
  LpStatus status = LpStatus::kInfeasible;

  // Filled at kOptimal.
  std::vector<double> primal;
  double objective = 0.0;
  // Row duals eta; >= 0 on >= rows, <= 0 on <= rows.
  std::vector<double> duals;
  // Split reduced costs c - A^T eta = reduced_lower + reduced_upper, with
  // reduced_lower >= 0 only where the lower bound is finite and
  // reduced_upper <= 0 only where the upper bound is finite.
  std::vector<double> reduced_lower;
  std::vector<double> reduced_upper;

  // Basic column per basis position: j < n structural, n <= j < n + m the
  // surplus of row j - n (column -e_i), j >= n + m the artificial of row
  // j - n - m (column artificial_sign[row] * e_row).
  std::vector<int> basis;
  std::vector<double> artificial_sign;

  // At kInfeasible: row multipliers sigma whose implied bound multipliers
  // prove emptiness; see FarkasViolation().
  std::vector<double> farkas;
  // At kUnbounded: a primal direction r with A r (sense) 0, within the
  // recession cone of the bounds, and c^T r < 0.
  std::vector<double> primal_ray;

  int iterations = 0;
};

struct SimplexOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-9;
  int max_iterations = 50000;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int stall_limit = 50;
  int refactor_interval = 100;
};

// Optional starting basis, typically the optimal basis of a parent node in a
// branch-and-bound tree whose bounds differ from `problem` only by tightening.
struct WarmStart {
  std::vector<int> basis;
};

// Dense bounded-variable primal simplex (two phases) with Dantzig pricing,
// a Bland fallback after stalls, and lowest-index tie-breaking. A warm start
// is reoptimized with the bounded dual simplex when it is dual feasible.
// Throws DimensionMismatch on malformed input and NumericalBreakdown when a
// basis cannot be factorized.
LpCertificate SolveLp(const LpProblem& problem,
                      const SimplexOptions& options = {},
                      const WarmStart* warm_start = nullptr);

// Inverse of the optimal basis matrix, rows ordered by basis position.
// Throws NotOptimal unless cert.status == kOptimal.
Matrix BasisInverseRows(const LpCertificate& cert, const LpProblem& problem);

// eta^T b + sum_i reduced_lower_i l_i + sum_i reduced_upper_i u_i, skipping
// infinite bounds.
double DualObjective(const LpCertificate& cert, const LpProblem& problem);

// Amount by which the row multipliers `sigma` certify infeasibility of
// `problem`: sigma^T b + sum of the implied bound terms. Positive means a
// valid certificate. Returns -kInfinity when sigma has the wrong sign on
// some row or implies a multiplier on an infinite bound beyond `tol`.
double FarkasViolation(const LpProblem& problem,
                       const std::vector<double>& sigma, double tol = 1e-9);

}  // namespace gbd

#endif  // GBD_SIMPLEX_H_
