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

#include "gbd/branch_bound.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>
#include <span>
#include <string>

#include "gbd/errors.h"

namespace gbd {

void MilpProblem::Validate() const {
  lp.Validate();
  if (integer.size() != lp.num_cols()) {
    throw DimensionMismatch("integrality mask has " +
                            std::to_string(integer.size()) + " entries, expected " +
                            std::to_string(lp.num_cols()));
  }
}

const char* ToString(MilpStatus status) {
  switch (status) {
    case MilpStatus::kOptimal:
      return "optimal";
    case MilpStatus::kInfeasible:
      return "infeasible";
    case MilpStatus::kUnbounded:
      return "unbounded";
    case MilpStatus::kNodeLimit:
      return "node_limit";
  }
  return "unknown";
}

double LeafTerm(const BnbLeaf& leaf, std::span<const double> beta) {
  return Dot(leaf.duals, beta) + leaf.alpha;
}

namespace {

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  LpCertificate cert;
  int id = 0;
  int depth = 0;
};

struct NodeOrder {
  bool operator()(const Node* a, const Node* b) const {
    if (a->cert.objective != b->cert.objective) {
      return a->cert.objective > b->cert.objective;
    }
    return a->id > b->id;
  }
};

// sum_j min over [l_j, u_j] of d_j y_j; reduced costs on infinite bounds
// (only possible within tolerance) are dropped.
double BoundTerms(const std::vector<double>& d, const std::vector<double>& lo,
                  const std::vector<double>& hi, std::vector<double>* rl,
                  std::vector<double>* ru) {
  double s = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    double pos = 0.0;
    double neg = 0.0;
    if (d[j] > 0 && std::isfinite(lo[j])) pos = d[j];
    if (d[j] < 0 && std::isfinite(hi[j])) neg = d[j];
    if (pos != 0.0) s += pos * lo[j];
    if (neg != 0.0) s += neg * hi[j];
    if (rl != nullptr) (*rl)[j] = pos;
    if (ru != nullptr) (*ru)[j] = neg;
  }
  return s;
}

BnbLeaf OptimalLeaf(const Node& node) {
  BnbLeaf leaf;
  leaf.lower = node.lower;
  leaf.upper = node.upper;
  leaf.status = LpStatus::kOptimal;
  leaf.duals = node.cert.duals;
  leaf.reduced_lower = node.cert.reduced_lower;
  leaf.reduced_upper = node.cert.reduced_upper;
  leaf.alpha = 0.0;
  for (std::size_t j = 0; j < leaf.lower.size(); ++j) {
    if (std::isfinite(leaf.lower[j])) {
      leaf.alpha += leaf.reduced_lower[j] * leaf.lower[j];
    }
    if (std::isfinite(leaf.upper[j])) {
      leaf.alpha += leaf.reduced_upper[j] * leaf.upper[j];
    }
  }
  leaf.lp_value = node.cert.objective;
  leaf.depth = node.depth;
  return leaf;
}

// An infeasible child before its multiplier is chosen.
struct PendingInfeasible {
  std::size_t leaf_index;
  std::vector<double> parent_duals;
  std::vector<double> parent_reduced;
  std::vector<double> sigma;
  std::vector<double> ray_reduced;
};

// Fills duals, reduced costs and alpha of an infeasible leaf for a given
// multiplier and returns its value at `rhs`.
double ApplyLambda(const PendingInfeasible& p, double lambda,
                   const std::vector<double>& rhs, BnbLeaf& leaf) {
  const std::size_t m = p.sigma.size();
  const std::size_t n = p.parent_reduced.size();
  leaf.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    leaf.duals[i] = p.parent_duals[i] + lambda * p.sigma[i];
  }
  std::vector<double> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = p.parent_reduced[j] + lambda * p.ray_reduced[j];
  }
  leaf.reduced_lower.assign(n, 0.0);
  leaf.reduced_upper.assign(n, 0.0);
  leaf.alpha = BoundTerms(d, leaf.lower, leaf.upper, &leaf.reduced_lower,
                          &leaf.reduced_upper);
  leaf.lambda = lambda;
  return Dot(leaf.duals, rhs) + leaf.alpha;
}

void ChooseLambda(const PendingInfeasible& p, double configured, double target,
                  const std::vector<double>& rhs, BnbLeaf& leaf) {
  const double slack = 1e-9 * (1.0 + std::abs(target));
  auto enough = [&](double lambda) {
    return ApplyLambda(p, lambda, rhs, leaf) >= target - slack;
  };
  double lambda = std::max(configured, 0.0);
  if (!std::isfinite(target) || enough(lambda)) {
    ApplyLambda(p, lambda, rhs, leaf);
    return;
  }
  // The leaf value is concave in lambda with a positive limiting slope (the
  // Farkas violation), hence nondecreasing: double, then bisect.
  double lo = lambda;
  double hi = std::max(1.0, 2.0 * lambda);
  int guard = 0;
  while (!enough(hi)) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 200) throw NumericalBreakdown("infeasible leaf multiplier");
  }
  for (int it = 0; it < 100 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (enough(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  ApplyLambda(p, hi, rhs, leaf);
}

bool IsIntegral(double v, double tol) {
  return std::abs(v - std::round(v)) <= tol;
}

// Activity-based bound tightening. Continuous bounds are tightened only
// internally (with slack) to feed inference; only integer bounds are written
// back. With a finite cutoff the row c^T x <= cutoff joins the pass. Returns
// false when the box is shown to be empty.
bool Propagate(const LpProblem& p, const std::vector<bool>& integer,
               double cutoff, std::vector<double>& lo, std::vector<double>& hi) {
  const std::size_t n = p.num_cols();
  const double eps = 1e-9;
  std::vector<double> wlo = lo;
  std::vector<double> whi = hi;
  // Visits a.x >= b. Returns false on proven emptiness.
  auto visit = [&](std::span<const double> row, double sign, double b,
                   bool& changed) {
    double max_act = 0.0;
    int inf_count = 0;
    int inf_col = -1;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = sign * row[j];
      if (a == 0.0) continue;
      const double bound = a > 0 ? whi[j] : wlo[j];
      if (!std::isfinite(bound)) {
        if (++inf_count > 1) return true;
        inf_col = static_cast<int>(j);
      } else {
        max_act += a * bound;
      }
    }
    if (inf_count == 0 && max_act < b - 1e-7 * (1.0 + std::abs(b))) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = sign * row[j];
      if (a == 0.0) continue;
      if (inf_count == 1 && inf_col != static_cast<int>(j)) continue;
      const double own = a > 0 ? whi[j] : wlo[j];
      const double rest = inf_count == 1 ? max_act : max_act - a * own;
      const double bound = (b - rest) / a;  // a x_j >= b - rest
      const double pad = eps * (1.0 + std::abs(bound));
      if (a > 0) {
        const double t = integer[j] ? std::ceil(bound - pad) : bound - pad;
        if (t > wlo[j] + (integer[j] ? 0.0 : 1e-7 * (1.0 + std::abs(t)))) {
          wlo[j] = t;
          changed = true;
        }
      } else {
        const double t = integer[j] ? std::floor(bound + pad) : bound + pad;
        if (t < whi[j] - (integer[j] ? 0.0 : 1e-7 * (1.0 + std::abs(t)))) {
          whi[j] = t;
          changed = true;
        }
      }
      if (wlo[j] > whi[j] + (integer[j] ? 0.0 : 1e-7)) return false;
    }
    return true;
  };
  for (int round = 0; round < 8; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
      const RowSense sense = p.senses[i];
      if (sense != RowSense::kLessEqual &&
          !visit(p.constraints.Row(i), 1.0, p.rhs[i], changed)) {
        return false;
      }
      if (sense != RowSense::kGreaterEqual &&
          !visit(p.constraints.Row(i), -1.0, -p.rhs[i], changed)) {
        return false;
      }
    }
    if (std::isfinite(cutoff) && !visit(p.objective, -1.0, -cutoff, changed)) {
      return false;
    }
    if (!changed) break;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!integer[j]) continue;
    lo[j] = wlo[j];
    hi[j] = whi[j];
  }
  return true;
}

}  // namespace

MilpResult SolveMilp(const MilpProblem& problem,
                     const BranchBoundOptions& options) {
  problem.Validate();
  const LpProblem& base = problem.lp;
  const std::size_t n = base.num_cols();
  const std::size_t m = base.num_rows();

  MilpResult result;
  result.tree.rhs = base.rhs;

  LpProblem work = base;
  auto solve_node = [&](Node& node, const LpCertificate* parent) {
    work.lower = node.lower;
    work.upper = node.upper;
    ++result.nodes;
    if (options.warm_start && parent != nullptr &&
        parent->status == LpStatus::kOptimal) {
      WarmStart ws{parent->basis};
      node.cert = SolveLp(work, options.lp, &ws);
    } else {
      node.cert = SolveLp(work, options.lp);
    }
  };

  std::vector<std::unique_ptr<Node>> storage;
  std::priority_queue<Node*, std::vector<Node*>, NodeOrder> open;
  std::vector<PendingInfeasible> pending;
  int next_id = 0;

  auto root = std::make_unique<Node>();
  root->lower = base.lower;
  root->upper = base.upper;
  root->id = next_id++;
  if (options.propagate &&
      !Propagate(base, problem.integer, options.cutoff, root->lower,
                 root->upper)) {
    result.status = MilpStatus::kInfeasible;
    return result;
  }
  solve_node(*root, nullptr);
  if (root->cert.status == LpStatus::kUnbounded) {
    result.status = MilpStatus::kUnbounded;
    result.value = -kInfinity;
    return result;
  }
  if (root->cert.status == LpStatus::kInfeasible) {
    BnbLeaf leaf;
    leaf.lower = root->lower;
    leaf.upper = root->upper;
    leaf.status = LpStatus::kInfeasible;
    leaf.duals = root->cert.farkas;
    leaf.lp_value = FarkasViolation(base, root->cert.farkas);
    result.tree.leaves.push_back(std::move(leaf));
    result.status = MilpStatus::kInfeasible;
    return result;
  }
  open.push(root.get());
  storage.push_back(std::move(root));

  double incumbent = kInfinity;
  std::vector<double> best;

  bool hit_limit = false;
  auto prune_tol = [&]() { return 1e-9 * (1.0 + std::abs(incumbent)); };
  // Nodes strictly above the caller's cutoff cannot be optimal either.
  auto dominated = [&](double bound) {
    return bound >= incumbent - prune_tol() || bound > options.cutoff;
  };
  auto propagation_cutoff = [&]() {
    return std::min(incumbent - prune_tol(), options.cutoff);
  };

  while (!open.empty()) {
    Node* node = open.top();
    open.pop();
    const LpCertificate& cert = node->cert;
    if (dominated(cert.objective)) {
      result.tree.leaves.push_back(OptimalLeaf(*node));
      continue;
    }
    int branch = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (problem.integer[j] && !IsIntegral(cert.primal[j], options.integrality_tol)) {
        branch = static_cast<int>(j);
        break;
      }
    }
    if (branch < 0) {
      incumbent = cert.objective;
      best = cert.primal;
      for (std::size_t j = 0; j < n; ++j) {
        if (problem.integer[j]) best[j] = std::round(best[j]);
      }
      result.tree.leaves.push_back(OptimalLeaf(*node));
      continue;
    }
    if (result.nodes + 2 > options.node_limit) {
      hit_limit = true;
      result.tree.leaves.push_back(OptimalLeaf(*node));
      break;
    }
    const double v = cert.primal[branch];
    for (int side = 0; side < 2; ++side) {
      auto child = std::make_unique<Node>();
      child->lower = node->lower;
      child->upper = node->upper;
      if (side == 0) {
        child->upper[branch] = std::floor(v);
      } else {
        child->lower[branch] = std::ceil(v);
      }
      child->id = next_id++;
      child->depth = node->depth + 1;
      if (options.propagate &&
          !Propagate(base, problem.integer, propagation_cutoff(), child->lower,
                     child->upper)) {
        continue;
      }
      solve_node(*child, &cert);
      if (child->cert.status == LpStatus::kUnbounded) {
        result.status = MilpStatus::kUnbounded;
        result.value = -kInfinity;
        return result;
      }
      if (child->cert.status == LpStatus::kInfeasible) {
        BnbLeaf leaf;
        leaf.lower = child->lower;
        leaf.upper = child->upper;
        leaf.status = LpStatus::kInfeasible;
        leaf.depth = child->depth;
        work.lower = child->lower;
        work.upper = child->upper;
        leaf.lp_value = FarkasViolation(work, child->cert.farkas);
        PendingInfeasible p;
        p.leaf_index = result.tree.leaves.size();
        p.parent_duals = cert.duals;
        p.parent_reduced.resize(n);
        p.ray_reduced.resize(n);
        p.sigma = child->cert.farkas;
        for (std::size_t j = 0; j < n; ++j) {
          p.parent_reduced[j] = cert.reduced_lower[j] + cert.reduced_upper[j];
          double r = 0.0;
          for (std::size_t i = 0; i < m; ++i) {
            r -= p.sigma[i] * base.constraints(i, j);
          }
          p.ray_reduced[j] = r;
        }
        result.tree.leaves.push_back(std::move(leaf));
        pending.push_back(std::move(p));
        continue;
      }
      open.push(child.get());
      storage.push_back(std::move(child));
    }
  }

  double global_lb = incumbent;
  while (!open.empty()) {
    Node* node = open.top();
    open.pop();
    global_lb = std::min(global_lb, node->cert.objective);
    result.tree.leaves.push_back(OptimalLeaf(*node));
  }

  for (const PendingInfeasible& p : pending) {
    ChooseLambda(p, options.infeasible_lambda, incumbent, base.rhs,
                 result.tree.leaves[p.leaf_index]);
  }

  result.tree.incumbent = best;
  result.tree.incumbent_value = incumbent;
  result.value = incumbent;
  result.solution = best;
  if (hit_limit) {
    result.status = MilpStatus::kNodeLimit;
    result.tree.lower_bound = global_lb;
  } else if (std::isfinite(incumbent)) {
    result.status = MilpStatus::kOptimal;
    result.tree.lower_bound = incumbent;
  } else {
    result.status = MilpStatus::kInfeasible;
    result.tree.lower_bound = kInfinity;
  }
  return result;
}

MinAffineDual ExtractDualFunction(const BnbTree& tree) {
  if (tree.leaves.empty()) throw EmptyTree("no leaves to build a dual from");
  MinAffineDual d;
  d.anchor2 = tree.rhs;
  for (const BnbLeaf& leaf : tree.leaves) {
    AffineTerm t;
    t.beta2 = leaf.duals;
    t.constant = leaf.alpha;
    d.terms.push_back(std::move(t));
  }
  return d;
}

}  // namespace gbd
