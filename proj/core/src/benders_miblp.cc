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

#include "gbd/benders_miblp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbd/big_m.h"
#include "gbd/errors.h"
#include "master_model.h"

namespace gbd {

using internal::MasterModel;

const char* ToString(ReactionStatus status) {
  switch (status) {
    case ReactionStatus::kOptimal:
      return "optimal";
    case ReactionStatus::kSecondStageInfeasible:
      return "second_stage_infeasible";
    case ReactionStatus::kLinkInfeasible:
      return "link_infeasible";
    case ReactionStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

std::vector<double> Residual(const std::vector<double>& b, const Matrix& a,
                             const std::vector<double>& x) {
  std::vector<double> r = b;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) r[i] -= a(i, j) * x[j];
  }
  return r;
}

bool RowIsZero(const Matrix& m, std::size_t i) {
  if (m.rows() == 0) return true;
  for (double v : m.Row(i)) {
    if (v != 0.0) return false;
  }
  return true;
}

// coeffs^T A (a row vector over x).
std::vector<double> LeftMultiply(std::span<const double> coeffs, const Matrix& a,
                                 std::size_t n1) {
  std::vector<double> out(n1, 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0.0) continue;
    for (std::size_t j = 0; j < n1; ++j) out[j] += coeffs[i] * a(i, j);
  }
  return out;
}

// kappa - g^T x.
struct XAffine {
  std::vector<double> g;
  double kappa = 0.0;

  double At(const std::vector<double>& x) const { return kappa - Dot(g, x); }
  Interval Range(const MiblpInstance& inst) const {
    std::vector<double> neg = g;
    for (double& v : neg) v = -v;
    return LinearRange(neg, kappa, inst.x_lower, inst.x_upper);
  }
};

XAffine TermInX(const MiblpInstance& inst, const AffineTerm& t) {
  XAffine a;
  a.kappa = Dot(t.beta1, inst.b1) + Dot(t.beta2, inst.b2) + t.constant;
  a.g = LeftMultiply(t.beta1, inst.a1, inst.n1());
  const std::vector<double> g2 = LeftMultiply(t.beta2, inst.a2, inst.n1());
  for (std::size_t j = 0; j < a.g.size(); ++j) a.g[j] += g2[j];
  return a;
}

XAffine PrimalInX(const MiblpInstance& inst, const RestrictedPrimal& p) {
  XAffine a;
  std::vector<double> r = inst.b2;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p.offset[i];
  a.kappa = Dot(p.eta, r) + p.integer_cost;
  a.g = LeftMultiply(p.eta, inst.a2, inst.n1());
  return a;
}

// Domain row j as h_j(x) = kappa - g^T x; in the domain iff all h_j >= 0.
std::vector<XAffine> DomainInX(const MiblpInstance& inst,
                               const RestrictedPrimal& p) {
  std::vector<XAffine> out;
  std::vector<double> r = inst.b2;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p.offset[i];
  for (std::size_t j = 0; j < p.domain.rows(); ++j) {
    XAffine a;
    a.kappa = Dot(p.domain.Row(j), r);
    a.g = LeftMultiply(p.domain.Row(j), inst.a2, inst.n1());
    out.push_back(std::move(a));
  }
  return out;
}

constexpr double kDomainTol = 1e-9;
constexpr double kFallbackFloor = -1e6;

}  // namespace

std::vector<double> LeaderRhs(const MiblpInstance& inst,
                              const std::vector<double>& x) {
  return Residual(inst.b1, inst.a1, x);
}

std::vector<double> FollowerRhs(const MiblpInstance& inst,
                                const std::vector<double>& x) {
  return Residual(inst.b2, inst.a2, x);
}

MilpProblem FollowerProblem(const MiblpInstance& inst,
                            const std::vector<double>& beta2) {
  MilpProblem p;
  p.lp.objective = inst.d2;
  p.lp.constraints = inst.m2() > 0 ? inst.g2 : Matrix(0, inst.n2());
  p.lp.rhs = beta2;
  p.lp.senses.assign(inst.m2(), RowSense::kGreaterEqual);
  p.lp.lower.assign(inst.n2(), 0.0);
  p.lp.upper.assign(inst.n2(), kInfinity);
  p.integer = inst.y_integer;
  return p;
}

MilpProblem LexicographicProblem(const MiblpInstance& inst,
                                 const std::vector<double>& beta1,
                                 const std::vector<double>& beta2, double phi) {
  const std::size_t n2 = inst.n2();
  MilpProblem p;
  p.lp.objective = inst.d1;
  p.lp.constraints = Matrix(0, n2);
  for (std::size_t i = 0; i < inst.m1(); ++i) p.lp.constraints.AppendRow(inst.g1.Row(i));
  for (std::size_t i = 0; i < inst.m2(); ++i) p.lp.constraints.AppendRow(inst.g2.Row(i));
  std::vector<double> cap(inst.d2);
  for (double& v : cap) v = -v;
  p.lp.constraints.AppendRow(cap);
  p.lp.rhs = beta1;
  p.lp.rhs.insert(p.lp.rhs.end(), beta2.begin(), beta2.end());
  p.lp.rhs.push_back(-phi);
  p.lp.senses.assign(p.lp.rhs.size(), RowSense::kGreaterEqual);
  p.lp.lower.assign(n2, 0.0);
  p.lp.upper.assign(n2, kInfinity);
  p.integer = inst.y_integer;
  return p;
}

RestrictedPrimal BuildPrimal(const MiblpInstance& inst,
                             const std::vector<double>& beta2,
                             const std::vector<double>& y_star,
                             const SimplexOptions& lp) {
  const std::size_t m2 = inst.m2();
  RestrictedPrimal p;
  p.anchor = beta2;
  p.offset.assign(m2, 0.0);
  p.integer_part.assign(inst.n2(), 0.0);
  std::vector<std::size_t> cont;
  for (std::size_t j = 0; j < inst.n2(); ++j) {
    if (!inst.y_integer[j]) {
      cont.push_back(j);
      continue;
    }
    const double v = std::round(y_star[j]);
    p.integer_part[j] = v;
    p.integer_cost += inst.d2[j] * v;
    for (std::size_t i = 0; i < m2; ++i) p.offset[i] += inst.g2(i, j) * v;
  }
  LpProblem r;
  r.objective.resize(cont.size());
  r.constraints = Matrix(m2, cont.size());
  for (std::size_t k = 0; k < cont.size(); ++k) {
    r.objective[k] = inst.d2[cont[k]];
    for (std::size_t i = 0; i < m2; ++i) r.constraints(i, k) = inst.g2(i, cont[k]);
  }
  r.rhs.resize(m2);
  for (std::size_t i = 0; i < m2; ++i) r.rhs[i] = beta2[i] - p.offset[i];
  r.senses.assign(m2, RowSense::kGreaterEqual);
  r.lower.assign(cont.size(), 0.0);
  r.upper.assign(cont.size(), kInfinity);
  const LpCertificate c = SolveLp(r, lp);
  if (c.status != LpStatus::kOptimal) {
    throw NotOptimal("continuous restriction at the follower optimum");
  }
  p.eta = c.duals;
  p.domain = BasisInverseRows(c, r);
  return p;
}

MinAffineDual BuildReactionDual(const BnbTree& tree, std::size_t m1,
                                std::size_t m2) {
  if (tree.leaves.empty()) throw EmptyTree("lexicographic tree");
  MinAffineDual d;
  d.anchor1.assign(tree.rhs.begin(), tree.rhs.begin() + m1);
  d.anchor2.assign(tree.rhs.begin() + m1, tree.rhs.begin() + m1 + m2);
  for (const BnbLeaf& leaf : tree.leaves) {
    if (leaf.duals.size() != m1 + m2 + 1) throw DimensionMismatch("leaf duals");
    AffineTerm t;
    t.beta1.assign(leaf.duals.begin(), leaf.duals.begin() + m1);
    t.beta2.assign(leaf.duals.begin() + m1, leaf.duals.begin() + m1 + m2);
    t.phi = leaf.duals[m1 + m2] == 0.0 ? 0.0 : -leaf.duals[m1 + m2];
    t.constant = leaf.alpha;
    d.terms.push_back(std::move(t));
  }
  return d;
}

ReactionCertificate EvaluateReaction(const MiblpInstance& inst,
                                     const std::vector<double>& beta1,
                                     const std::vector<double>& beta2,
                                     const BranchBoundOptions& options) {
  if (beta1.size() != inst.m1() || beta2.size() != inst.m2()) {
    throw DimensionMismatch("reaction arguments");
  }
  ReactionCertificate cert;
  cert.beta1 = beta1;
  cert.beta2 = beta2;
  const MilpResult follower = SolveMilp(FollowerProblem(inst, beta2), options);
  if (follower.status == MilpStatus::kNodeLimit) {
    throw std::runtime_error("follower problem hit the node limit");
  }
  if (follower.status == MilpStatus::kUnbounded) {
    cert.status = ReactionStatus::kUnbounded;
    cert.phi_value = -kInfinity;
    cert.rho_value = -kInfinity;
    return cert;
  }
  if (follower.status == MilpStatus::kInfeasible) {
    cert.status = ReactionStatus::kSecondStageInfeasible;
    return cert;
  }
  cert.phi_value = follower.value;
  cert.follower_y = follower.solution;

  MilpResult lex = SolveMilp(
      LexicographicProblem(inst, beta1, beta2, cert.phi_value), options);
  if (lex.status == MilpStatus::kNodeLimit) {
    throw std::runtime_error("lexicographic problem hit the node limit");
  }
  if (lex.status == MilpStatus::kUnbounded) {
    cert.status = ReactionStatus::kUnbounded;
    cert.rho_value = -kInfinity;
    return cert;
  }
  cert.tree = std::move(lex.tree);
  if (lex.status == MilpStatus::kInfeasible) {
    cert.status = ReactionStatus::kLinkInfeasible;
    return cert;
  }
  cert.rho_value = lex.value;
  cert.y = lex.solution;
  cert.primal = BuildPrimal(inst, beta2, cert.follower_y, options.lp);
  cert.dual = BuildReactionDual(cert.tree, inst.m1(), inst.m2());
  return cert;
}

ExtendedReal EvalReactionCut(const MiblpInstance& inst, const ReactionCut& cut,
                             const std::vector<double>& x) {
  double phi_bar = 0.0;
  if (cut.primal.has_value()) {
    phi_bar = PrimalInX(inst, *cut.primal).At(x);
    for (const XAffine& h : DomainInX(inst, *cut.primal)) {
      if (h.At(x) < -kDomainTol) {
        phi_bar += cut.m_primal;
        break;
      }
    }
  }
  double best = kInfinity;
  for (const AffineTerm& t : cut.dual.terms) {
    best = std::min(best, TermInX(inst, t).At(x) + t.phi * phi_bar);
  }
  return best;
}

void ComputeCutConstants(const MiblpInstance& inst, double z_floor,
                         ReactionCut& cut) {
  cut.epsilon = inst.epsilon.value_or(1e-5);
  const std::size_t domain_rows =
      cut.primal.has_value() ? cut.primal->domain.rows() : 0;
  if (inst.big_m.has_value()) {
    cut.m_dual = cut.m_primal = *inst.big_m;
    cut.m_domain_lo.assign(domain_rows, *inst.big_m);
    cut.m_domain_hi.assign(domain_rows, *inst.big_m);
    return;
  }
  // q_t = term_t with phi-bar replaced by the primal affine part.
  std::vector<double> q_hi;
  XAffine prim;
  if (cut.primal.has_value()) prim = PrimalInX(inst, *cut.primal);
  for (const AffineTerm& t : cut.dual.terms) {
    XAffine q = TermInX(inst, t);
    if (cut.primal.has_value() && t.phi != 0.0) {
      q.kappa += t.phi * prim.kappa;
      for (std::size_t j = 0; j < q.g.size(); ++j) q.g[j] += t.phi * prim.g[j];
    }
    q_hi.push_back(q.Range(inst).hi);
  }
  cut.m_primal = 1.0;
  if (cut.primal.has_value()) {
    double need = 0.0;
    for (std::size_t t = 0; t < q_hi.size(); ++t) {
      const double c = cut.dual.terms[t].phi;
      if (c < 0.0) need = std::max(need, (q_hi[t] - z_floor) / -c);
    }
    cut.m_primal = PadBigM(need);
  }
  double top = -kInfinity;
  for (std::size_t t = 0; t < q_hi.size(); ++t) {
    const double c = cut.primal.has_value() ? cut.dual.terms[t].phi : 0.0;
    top = std::max(top, q_hi[t] + std::max(0.0, c) * cut.m_primal);
  }
  cut.m_dual = PadBigM(top - z_floor);
  cut.m_domain_lo.clear();
  cut.m_domain_hi.clear();
  if (cut.primal.has_value()) {
    for (const XAffine& h : DomainInX(inst, *cut.primal)) {
      const Interval r = h.Range(inst);
      cut.m_domain_lo.push_back(PadBigM(-r.lo));
      cut.m_domain_hi.push_back(PadBigM(r.hi) + cut.epsilon);
    }
  }
}

MilpProblem BuildMaster(const MiblpInstance& inst, double z_floor,
                        const std::vector<ReactionCut>& cuts,
                        const std::vector<LinearCut>& feasibility_cuts,
                        const std::vector<std::vector<double>>& excluded_points) {
  const std::size_t n1 = inst.n1();
  MasterModel model;
  std::vector<int> x_cols(n1);
  for (std::size_t j = 0; j < n1; ++j) {
    x_cols[j] = model.AddColumn(inst.c[j], inst.x_lower[j], inst.x_upper[j], true);
  }
  const int z = model.AddColumn(1.0, z_floor, kInfinity, false);
  auto x_terms = [&](const std::vector<double>& coeffs, double scale) {
    MasterModel::Coeffs out;
    for (std::size_t j = 0; j < n1; ++j) {
      if (coeffs[j] != 0.0) out.push_back({x_cols[j], scale * coeffs[j]});
    }
    return out;
  };

  for (std::size_t i = 0; i < inst.m1(); ++i) {
    if (!RowIsZero(inst.g1, i)) continue;
    std::vector<double> row(inst.a1.Row(i).begin(), inst.a1.Row(i).end());
    model.AddRow(x_terms(row, 1.0), RowSense::kGreaterEqual, inst.b1[i]);
  }

  for (const ReactionCut& cut : cuts) {
    const std::size_t nt = cut.dual.terms.size();
    std::vector<int> u(nt, -1);
    if (nt > 1) {
      MasterModel::Coeffs pick;
      for (std::size_t t = 0; t < nt; ++t) {
        u[t] = model.AddColumn(0.0, 0.0, 1.0, true);
        pick.push_back({u[t], 1.0});
      }
      model.AddRow(pick, RowSense::kEqual, 1.0);
    }
    int phi_col = -1;
    if (cut.primal.has_value()) {
      phi_col = model.AddColumn(0.0, -kInfinity, kInfinity, false);
      const int v = model.AddColumn(0.0, 0.0, 1.0, true);
      // phi-bar + pg^T x - M_P v = p_kappa
      const XAffine prim = PrimalInX(inst, *cut.primal);
      MasterModel::Coeffs row = x_terms(prim.g, 1.0);
      row.push_back({phi_col, 1.0});
      row.push_back({v, -cut.m_primal});
      model.AddRow(row, RowSense::kEqual, prim.kappa);
      const std::vector<XAffine> dom = DomainInX(inst, *cut.primal);
      MasterModel::Coeffs any{{v, static_cast<double>(dom.size())}};
      MasterModel::Coeffs none{{v, 1.0}};
      for (std::size_t j = 0; j < dom.size(); ++j) {
        const int v1 = model.AddColumn(0.0, 0.0, 1.0, true);
        // h_j + M_lo v1 >= 0
        MasterModel::Coeffs lo = x_terms(dom[j].g, -1.0);
        lo.push_back({v1, cut.m_domain_lo[j]});
        model.AddRow(lo, RowSense::kGreaterEqual, -dom[j].kappa);
        // h_j + M_hi v1 <= M_hi - eps
        MasterModel::Coeffs hi = x_terms(dom[j].g, -1.0);
        hi.push_back({v1, cut.m_domain_hi[j]});
        model.AddRow(hi, RowSense::kLessEqual,
                     cut.m_domain_hi[j] - cut.epsilon - dom[j].kappa);
        any.push_back({v1, -1.0});
        none.push_back({v1, -1.0});
      }
      model.AddRow(any, RowSense::kGreaterEqual, 0.0);
      model.AddRow(none, RowSense::kLessEqual, 0.0);
    }
    for (std::size_t t = 0; t < nt; ++t) {
      const AffineTerm& term = cut.dual.terms[t];
      const XAffine a = TermInX(inst, term);
      // z + g^T x - c phi-bar - M_D u >= kappa - M_D
      MasterModel::Coeffs row = x_terms(a.g, 1.0);
      row.push_back({z, 1.0});
      if (phi_col >= 0 && term.phi != 0.0) row.push_back({phi_col, -term.phi});
      double rhs = a.kappa;
      if (nt > 1) {
        row.push_back({u[t], -cut.m_dual});
        rhs -= cut.m_dual;
      }
      model.AddRow(row, RowSense::kGreaterEqual, rhs);
    }
  }

  for (const LinearCut& f : feasibility_cuts) {
    model.AddRow(x_terms(f.x_coeffs, 1.0), RowSense::kGreaterEqual, f.rhs);
  }
  for (const std::vector<double>& point : excluded_points) {
    if (!model.AddNoGood(x_cols, point, inst.x_lower, inst.x_upper)) {
      model.AddRow({}, RowSense::kGreaterEqual, 1.0);  // nothing left
    }
  }
  return model.Build();
}

double ReactionFloor(const MiblpInstance& inst, bool* ok,
                     const BranchBoundOptions& options) {
  *ok = true;
  const std::size_t n1 = inst.n1();
  auto rhs_range = [&](const Matrix& a, const std::vector<double>& b,
                       std::size_t i) {
    std::vector<double> neg(a.Row(i).begin(), a.Row(i).end());
    for (double& v : neg) v = -v;
    (void)n1;
    return LinearRange(neg, b[i], inst.x_lower, inst.x_upper);
  };
  std::vector<double> lo2(inst.m2());
  std::vector<double> hi2(inst.m2());
  for (std::size_t i = 0; i < inst.m2(); ++i) {
    const Interval r = rhs_range(inst.a2, inst.b2, i);
    lo2[i] = r.lo;
    hi2[i] = r.hi;
  }
  const MilpResult top = SolveMilp(FollowerProblem(inst, hi2), options);
  if (top.status == MilpStatus::kUnbounded) {
    *ok = false;
    return kFallbackFloor;
  }

  LpProblem p;
  p.objective = inst.d1;
  p.constraints = Matrix(0, inst.n2());
  for (std::size_t i = 0; i < inst.m2(); ++i) {
    p.constraints.AppendRow(inst.g2.Row(i));
    p.rhs.push_back(lo2[i]);
  }
  for (std::size_t i = 0; i < inst.m1(); ++i) {
    if (RowIsZero(inst.g1, i)) continue;
    p.constraints.AppendRow(inst.g1.Row(i));
    p.rhs.push_back(rhs_range(inst.a1, inst.b1, i).lo);
  }
  if (top.status == MilpStatus::kOptimal) {
    std::vector<double> cap(inst.d2);
    for (double& v : cap) v = -v;
    p.constraints.AppendRow(cap);
    p.rhs.push_back(-top.value);
  }
  p.senses.assign(p.rhs.size(), RowSense::kGreaterEqual);
  p.lower.assign(inst.n2(), 0.0);
  p.upper.assign(inst.n2(), kInfinity);
  const LpCertificate c = SolveLp(p, options.lp);
  if (c.status == LpStatus::kInfeasible) return kInfinity;
  if (c.status == LpStatus::kUnbounded) {
    *ok = false;
    return kFallbackFloor;
  }
  return c.objective;
}

GlobalDual MiblpResult::Global() const {
  GlobalDual g;
  for (const ReactionCut& c : cuts) g.members.push_back({c.dual, c.primal});
  return g;
}

MiblpResult SolveMiblp(const MiblpInstance& inst,
                       const BendersOptions& options) {
  inst.Validate();
  const std::size_t n1 = inst.n1();
  MiblpResult result;
  bool floor_ok = true;
  const double z_floor = ReactionFloor(inst, &floor_ok, options.subproblem);
  if (z_floor == kInfinity) {
    result.status = BendersStatus::kInfeasible;
    result.warnings.push_back("no follower-feasible point for any x in the box");
    return result;
  }
  if (!floor_ok) {
    result.warnings.push_back(
        "could not bound the leader objective over the follower region; "
        "using a fallback floor");
  }
  result.z_floor = z_floor;

  auto lower_value = [&](const std::vector<double>& x) {
    double z = z_floor;
    for (const ReactionCut& cut : result.cuts) {
      const ExtendedReal v = EvalReactionCut(inst, cut, x);
      if (v.is_finite()) z = std::max(z, v.finite());
    }
    return Dot(inst.c, x) + z;
  };

  double lb = -kInfinity;
  double ub = kInfinity;
  for (int k = 1; k <= options.max_iters; ++k) {
    result.iterations = k;
    TraceRow row;
    row.iteration = k;
    const MilpResult mr =
        SolveMilp(BuildMaster(inst, z_floor, result.cuts,
                              result.feasibility_cuts, result.excluded_points),
                  options.master);
    if (mr.status == MilpStatus::kNodeLimit) {
      result.status = BendersStatus::kIterationLimit;
      result.warnings.push_back("master node limit reached");
      return result;
    }
    if (mr.status == MilpStatus::kUnbounded) {
      throw NumericalBreakdown("bilevel master unbounded");
    }
    if (mr.status == MilpStatus::kInfeasible) {
      result.status = std::isfinite(ub) ? BendersStatus::kOptimal
                                        : BendersStatus::kInfeasible;
      row.lower_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
      row.upper_bound = row.lower_bound;
      result.trace.rows.push_back(row);
      return result;
    }
    std::vector<double> x(mr.solution.begin(), mr.solution.begin() + n1);
    for (double& v : x) v = std::round(v);
    lb = std::max(lb, lower_value(x));
    row.x = x;
    // No dual function exists yet in the first iteration.
    row.lower_bound = k == 1 ? ExtendedReal::NegInf() : ExtendedReal(lb);
    if (ub - lb <= options.tol) {
      row.lower_bound = lb;
      row.upper_bound = ub;
      result.trace.rows.push_back(row);
      result.status = BendersStatus::kOptimal;
      return result;
    }

    const std::vector<double> beta1 = LeaderRhs(inst, x);
    const std::vector<double> beta2 = FollowerRhs(inst, x);
    ReactionCertificate cert =
        EvaluateReaction(inst, beta1, beta2, options.subproblem);
    row.phi = cert.status == ReactionStatus::kSecondStageInfeasible
                  ? ExtendedReal::PosInf()
                  : ExtendedReal(cert.phi_value);
    if (cert.status == ReactionStatus::kUnbounded) {
      result.status = BendersStatus::kAssumptionViolated;
      result.warnings.push_back("unbounded follower or lexicographic problem");
      row.rho = ExtendedReal::NegInf();
      result.trace.rows.push_back(row);
      return result;
    }
    if (cert.status == ReactionStatus::kOptimal) {
      row.rho = cert.rho_value;
      const double value = Dot(inst.c, x) + cert.rho_value;
      if (value < ub) {
        ub = value;
        result.x = x;
        result.y = cert.y;
        result.value = value;
      }
      ReactionCut cut;
      cut.iteration = k;
      cut.anchor_x = x;
      cut.dual = std::move(*cert.dual);
      if (cut.dual.HasPhi()) cut.primal = std::move(cert.primal);
      ComputeCutConstants(inst, z_floor, cut);
      row.terms = static_cast<int>(cut.dual.terms.size());
      row.cut = CutKind::kOptimality;
      result.cuts.push_back(std::move(cut));
    } else {
      row.rho = ExtendedReal::PosInf();
      // Farkas cut from the LP relaxation of the rows that failed, if it
      // is already infeasible; otherwise exclude the point.
      LpProblem relax;
      std::vector<double> rhs;
      if (cert.status == ReactionStatus::kSecondStageInfeasible) {
        relax = FollowerProblem(inst, beta2).lp;
      } else {
        relax = LexicographicProblem(inst, beta1, beta2, 0.0).lp;
        relax.constraints = Matrix(0, inst.n2());
        for (std::size_t i = 0; i < inst.m1(); ++i) relax.constraints.AppendRow(inst.g1.Row(i));
        for (std::size_t i = 0; i < inst.m2(); ++i) relax.constraints.AppendRow(inst.g2.Row(i));
        relax.rhs.pop_back();
        relax.senses.pop_back();
      }
      const LpCertificate lc = SolveLp(relax, options.subproblem.lp);
      if (lc.status == LpStatus::kInfeasible) {
        LinearCut f;
        f.kind = CutKind::kFeasibility;
        f.iteration = k;
        f.multipliers = lc.farkas;
        std::vector<double> s1, s2;
        if (cert.status == ReactionStatus::kSecondStageInfeasible) {
          s2 = lc.farkas;
          s1.assign(inst.m1(), 0.0);
        } else {
          s1.assign(lc.farkas.begin(), lc.farkas.begin() + inst.m1());
          s2.assign(lc.farkas.begin() + inst.m1(), lc.farkas.end());
        }
        f.x_coeffs = LeftMultiply(s1, inst.a1, n1);
        const std::vector<double> g2 = LeftMultiply(s2, inst.a2, n1);
        for (std::size_t j = 0; j < n1; ++j) f.x_coeffs[j] += g2[j];
        f.rhs = Dot(s1, inst.b1) + Dot(s2, inst.b2);
        row.cut = CutKind::kFeasibility;
        result.feasibility_cuts.push_back(std::move(f));
      } else {
        row.cut = CutKind::kNoGood;
        result.excluded_points.push_back(x);
      }
    }
    row.lower_bound = k == 1 ? ExtendedReal::NegInf() : ExtendedReal(lb);
    row.upper_bound = std::isfinite(ub) ? ExtendedReal(ub) : ExtendedReal::PosInf();
    result.trace.rows.push_back(row);
    if (ub - lb <= options.tol) {
      result.trace.rows.back().lower_bound = lb;
      result.status = BendersStatus::kOptimal;
      return result;
    }
  }
  result.status = BendersStatus::kIterationLimit;
  return result;
}

}  // namespace gbd
