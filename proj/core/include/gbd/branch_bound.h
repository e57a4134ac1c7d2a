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

#ifndef GBD_BRANCH_BOUND_H_
#define GBD_BRANCH_BOUND_H_

#include <vector>

#include "gbd/piecewise.h"
#include "gbd/simplex.h"

namespace gbd {

struct MilpProblem {
  LpProblem lp;
  // One flag per column; true marks an integer variable.
  std::vector<bool> integer;

  void Validate() const;
};

enum class MilpStatus { kOptimal, kInfeasible, kUnbounded, kNodeLimit };
const char* ToString(MilpStatus status);

struct BnbLeaf {
  std::vector<double> lower;
  std::vector<double> upper;
  // kOptimal for leaves whose LP solved; kInfeasible otherwise. Infeasible
  // leaves carry the parent's dual plus lambda times their Farkas ray.
  LpStatus status = LpStatus::kOptimal;
  std::vector<double> duals;
  std::vector<double> reduced_lower;
  std::vector<double> reduced_upper;
  double alpha = 0.0;
  // LP value at the leaf (optimal leaves) or the Farkas violation
  // (infeasible leaves); informational.
  double lp_value = 0.0;
  // Ray multiplier used for an infeasible leaf.
  double lambda = 0.0;
  int depth = 0;
};

struct BnbTree {
  std::vector<BnbLeaf> leaves;
  std::vector<double> incumbent;
  double incumbent_value = kInfinity;
  double lower_bound = -kInfinity;
  // Right-hand side of the solved problem.
  std::vector<double> rhs;
};

struct BranchBoundOptions {
  double integrality_tol = 1e-6;
  int node_limit = 100000;
  // Ray multiplier for infeasible leaves. It is raised when needed to keep
  // the dual function strong at the solved rhs; a value <= 0 means "use the
  // smallest multiplier that does so".
  double infeasible_lambda = 1e4;
  bool warm_start = true;
  // Tighten integer bounds from row activities before each node LP. The
  // tightening depends on the rhs, so the resulting tree is NOT a valid dual
  // certificate for other right-hand sides; only use it when the tree is
  // thrown away (master problems).
  bool propagate = false;
  // Known upper bound on the optimum (a MIP start value). Nodes that cannot
  // beat it are pruned; the solve reports infeasible if nothing does.
  double cutoff = kInfinity;
  SimplexOptions lp{};
};

struct MilpResult {
  MilpStatus status = MilpStatus::kInfeasible;
  std::vector<double> solution;
  double value = kInfinity;
  BnbTree tree;
  int nodes = 0;
};

// LP-based branch and bound. Lowest-index fractional branching (down child
// first), best-bound node selection with ties broken by creation order.
// Children are solved when created so every leaf owns a certificate.
MilpResult SolveMilp(const MilpProblem& problem,
                     const BranchBoundOptions& options = {});

// Dual function min_t (beta^T eta^t + alpha^t) over the leaves, returned
// with every coefficient in AffineTerm::beta2 and anchor2 = tree.rhs.
// Throws EmptyTree for a tree without leaves.
MinAffineDual ExtractDualFunction(const BnbTree& tree);

// beta^T eta + sum of bound terms of one leaf, using the leaf's own bounds.
double LeafTerm(const BnbLeaf& leaf, std::span<const double> beta);

}  // namespace gbd

#endif  // GBD_BRANCH_BOUND_H_
