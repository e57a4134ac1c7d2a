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

#ifndef GBD_BENDERS_MIBLP_H_
#define GBD_BENDERS_MIBLP_H_

#include <optional>
#include <string>
#include <vector>

#include "gbd/benders_common.h"
#include "gbd/instances.h"
#include "gbd/piecewise.h"

namespace gbd {

enum class ReactionStatus {
  kOptimal,
  // phi_IP(beta2) = +inf.
  kSecondStageInfeasible,
  // The follower has optimal solutions but none satisfies the leader rows.
  kLinkInfeasible,
  kUnbounded,
};
const char* ToString(ReactionStatus status);

struct ReactionCertificate {
  ReactionStatus status = ReactionStatus::kOptimal;
  std::vector<double> beta1;
  std::vector<double> beta2;
  double phi_value = kInfinity;
  double rho_value = kInfinity;
  // Optimal y of the follower problem (step 1) and of the lexicographic
  // problem (step 2).
  std::vector<double> follower_y;
  std::vector<double> y;
  BnbTree tree;
  std::optional<RestrictedPrimal> primal;
  std::optional<MinAffineDual> dual;
};

// phi_IP(beta2) by branch and bound, then
// min d1^T y s.t. G1 y >= beta1, G2 y >= beta2, d2^T y <= phi_IP(beta2).
// The tree of the second solve is kept and, when both steps succeed, the
// primal and reaction dual are built.
ReactionCertificate EvaluateReaction(const MiblpInstance& inst,
                                     const std::vector<double>& beta1,
                                     const std::vector<double>& beta2,
                                     const BranchBoundOptions& options = {.infeasible_lambda = 0.0});

// beta1 = b1 - A1 x, beta2 = b2 - A2 x.
std::vector<double> LeaderRhs(const MiblpInstance& inst, const std::vector<double>& x);
std::vector<double> FollowerRhs(const MiblpInstance& inst, const std::vector<double>& x);

// Follower MILP  min d2^T y  s.t.  G2 y >= beta2, y >= 0.
MilpProblem FollowerProblem(const MiblpInstance& inst,
                            const std::vector<double>& beta2);
// The lexicographic MILP; its last row is -d2^T y >= -phi.
MilpProblem LexicographicProblem(const MiblpInstance& inst,
                                 const std::vector<double>& beta1,
                                 const std::vector<double>& beta2, double phi);

// Restricted-domain primal function from the continuous restriction at
// the follower solution y_star.
RestrictedPrimal BuildPrimal(const MiblpInstance& inst,
                             const std::vector<double>& beta2,
                             const std::vector<double>& y_star,
                             const SimplexOptions& lp = {});

// Leaf terms of the lexicographic tree: beta1 and beta2 parts of each leaf
// dual, phi coefficient = minus the multiplier of the -d2^T y >= -phi row.
MinAffineDual BuildReactionDual(const BnbTree& tree, std::size_t m1,
                                std::size_t m2);

// One iteration's contribution to the master.
struct ReactionCut {
  int iteration = 0;
  std::vector<double> anchor_x;
  MinAffineDual dual;
  // Absent when every phi coefficient is zero.
  std::optional<RestrictedPrimal> primal;
  double m_dual = 0.0;
  double m_primal = 0.0;
  std::vector<double> m_domain_lo;
  std::vector<double> m_domain_hi;
  double epsilon = 1e-5;
};

// Value of a reaction cut at x with the master's semantics: phi-bar is the
// primal affine part on its domain and that value plus m_primal off it.
ExtendedReal EvalReactionCut(const MiblpInstance& inst, const ReactionCut& cut,
                             const std::vector<double>& x);

// Big-M constants of a cut over the x-box.
void ComputeCutConstants(const MiblpInstance& inst, double z_floor,
                         ReactionCut& cut);


struct MiblpResult {
  BendersStatus status = BendersStatus::kInfeasible;
  std::vector<double> x;
  std::vector<double> y;
  double value = kInfinity;
  int iterations = 0;
  BendersTrace trace;
  std::vector<ReactionCut> cuts;
  std::vector<LinearCut> feasibility_cuts;
  std::vector<std::vector<double>> excluded_points;
  double z_floor = 0.0;
  std::vector<std::string> warnings;

  // The accumulated lower-bounding function max_i rho_i.
  GlobalDual Global() const;
};

MiblpResult SolveMiblp(const MiblpInstance& inst,
                       const BendersOptions& options = {});

// Lower bound on d1^T y over every follower-feasible y reachable from the
// x-box; the initial floor for z. Sets *ok = false when the bound cannot
// be computed (an unbounded relaxation); the returned value is then a
// fallback.
double ReactionFloor(const MiblpInstance& inst, bool* ok,
                     const BranchBoundOptions& options = {});

// Master MILP: columns x, z, then per cut u_t (when |T| > 1), phi-bar, v and
// v1_j; then no-good binaries. Rows: A1 rows with zero G1 rows, cut blocks,
// feasibility cuts, no-good exclusions.
MilpProblem BuildMaster(const MiblpInstance& inst, double z_floor,
                        const std::vector<ReactionCut>& cuts,
                        const std::vector<LinearCut>& feasibility_cuts,
                        const std::vector<std::vector<double>>& excluded_points);

}  // namespace gbd

#endif  // GBD_BENDERS_MIBLP_H_
