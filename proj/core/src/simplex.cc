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

#include "gbd/simplex.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "gbd/errors.h"

namespace gbd {

void LpProblem::Validate() const {
  const std::size_t m = num_rows();
  const std::size_t n = num_cols();
  if (senses.size() != m) throw DimensionMismatch("senses vs rhs");
  if (lower.size() != n || upper.size() != n) {
    throw DimensionMismatch("bounds vs objective");
  }
  if (m > 0 && (constraints.rows() != m || constraints.cols() != n)) {
    throw DimensionMismatch("constraint matrix is " +
                            std::to_string(constraints.rows()) + "x" +
                            std::to_string(constraints.cols()) +
                            ", expected " + std::to_string(m) + "x" +
                            std::to_string(n));
  }
  if (m == 0 && constraints.rows() != 0) {
    throw DimensionMismatch("constraint rows without rhs");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j]) {
      throw std::invalid_argument("variable " + std::to_string(j) +
                                  " has lower > upper");
    }
    if (lower[j] == kInfinity || upper[j] == -kInfinity) {
      throw std::invalid_argument("variable " + std::to_string(j) +
                                  " has an empty bound interval");
    }
  }
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Column layout: [0, n) structurals, [n, n+m) surpluses (column -e_i, so
// every row reads A_i x - s_i = b_i), [n+m, n+2m) artificials.
class SimplexSolver {
 public:
  SimplexSolver(const LpProblem& p, const SimplexOptions& o)
      : p_(p),
        opt_(o),
        m_(p.num_rows()),
        n_(p.num_cols()),
        total_(n_ + 2 * m_),
        lo_(total_, 0.0),
        hi_(total_, 0.0),
        cost_(total_, 0.0),
        x_(total_, 0.0),
        pos_(total_, -1),
        head_(m_, -1),
        art_sign_(m_, 0.0),
        binv_(m_, m_) {}

  LpCertificate Solve(const WarmStart* ws) {
    if (ws != nullptr && TryWarmStart(*ws)) {
      if (warm_result_.has_value()) return *std::move(warm_result_);
      return Finish(RunPrimal());
    }
    return ColdSolve();
  }

 private:
  enum class Outcome { kOptimal, kUnbounded };

  bool IsArtificial(int j) const { return j >= static_cast<int>(n_ + m_); }
  bool IsFixed(int j) const { return lo_[j] == hi_[j]; }

  void SetStructuralData() {
    for (std::size_t j = 0; j < n_; ++j) {
      lo_[j] = p_.lower[j];
      hi_[j] = p_.upper[j];
      cost_[j] = p_.objective[j];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t s = n_ + i;
      switch (p_.senses[i]) {
        case RowSense::kGreaterEqual:
          lo_[s] = 0.0;
          hi_[s] = kInfinity;
          break;
        case RowSense::kLessEqual:
          lo_[s] = -kInfinity;
          hi_[s] = 0.0;
          break;
        case RowSense::kEqual:
          lo_[s] = 0.0;
          hi_[s] = 0.0;
          break;
      }
      lo_[n_ + m_ + i] = 0.0;
      hi_[n_ + m_ + i] = 0.0;
    }
  }

  static double DefaultValue(double lo, double hi) {
    if (std::isfinite(lo)) return lo;
    if (std::isfinite(hi)) return hi;
    return 0.0;
  }

  // pi^T a_j
  double ColumnDot(std::span<const double> pi, int j) const {
    if (j < static_cast<int>(n_)) {
      double s = 0.0;
      for (std::size_t i = 0; i < m_; ++i) s += pi[i] * p_.constraints(i, j);
      return s;
    }
    if (!IsArtificial(j)) return -pi[j - n_];
    const std::size_t row = j - n_ - m_;
    return art_sign_[row] * pi[row];
  }

  // B^{-1} a_j
  std::vector<double> Ftran(int j) const {
    std::vector<double> out(m_, 0.0);
    if (j < static_cast<int>(n_)) {
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = p_.constraints(i, j);
        if (a == 0.0) continue;
        for (std::size_t k = 0; k < m_; ++k) out[k] += binv_(k, i) * a;
      }
      return out;
    }
    std::size_t row;
    double sign;
    if (!IsArtificial(j)) {
      row = j - n_;
      sign = -1.0;
    } else {
      row = j - n_ - m_;
      sign = art_sign_[row];
    }
    for (std::size_t k = 0; k < m_; ++k) out[k] = sign * binv_(k, row);
    return out;
  }

  std::vector<double> Duals() const {
    std::vector<double> pi(m_, 0.0);
    for (std::size_t k = 0; k < m_; ++k) {
      const double c = cost_[head_[k]];
      if (c == 0.0) continue;
      for (std::size_t i = 0; i < m_; ++i) pi[i] += c * binv_(k, i);
    }
    return pi;
  }

  // Rebuilds B^{-1} from the basis columns by Gauss-Jordan elimination with
  // partial pivoting, then recomputes the basic values.
  void Refactor() {
    Matrix b(m_, m_);
    for (std::size_t k = 0; k < m_; ++k) {
      const int j = head_[k];
      if (j < static_cast<int>(n_)) {
        for (std::size_t i = 0; i < m_; ++i) b(i, k) = p_.constraints(i, j);
      } else if (!IsArtificial(j)) {
        b(j - n_, k) = -1.0;
      } else {
        b(j - n_ - m_, k) = art_sign_[j - n_ - m_];
      }
    }
    Matrix inv = Matrix::Identity(m_);
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < m_; ++r) {
        if (std::abs(b(r, c)) > std::abs(b(piv, c))) piv = r;
      }
      if (std::abs(b(piv, c)) < 1e-12) {
        throw NumericalBreakdown("singular basis matrix");
      }
      if (piv != c) {
        for (std::size_t k = 0; k < m_; ++k) {
          std::swap(b(piv, k), b(c, k));
          std::swap(inv(piv, k), inv(c, k));
        }
      }
      const double d = b(c, c);
      // Bases are mostly unit columns; only touch the pivot row's nonzeros.
      nz_b_.clear();
      nz_inv_.clear();
      for (std::size_t k = 0; k < m_; ++k) {
        if (b(c, k) != 0.0) {
          b(c, k) /= d;
          nz_b_.push_back(k);
        }
        if (inv(c, k) != 0.0) {
          inv(c, k) /= d;
          nz_inv_.push_back(k);
        }
      }
      for (std::size_t r = 0; r < m_; ++r) {
        if (r == c) continue;
        const double f = b(r, c);
        if (f == 0.0) continue;
        for (std::size_t k : nz_b_) b(r, k) -= f * b(c, k);
        for (std::size_t k : nz_inv_) inv(r, k) -= f * inv(c, k);
      }
    }
    binv_ = std::move(inv);
    pivots_since_refactor_ = 0;
    RecomputeBasicValues();
  }

  void RecomputeBasicValues() {
    std::vector<double> r(p_.rhs.begin(), p_.rhs.end());
    for (std::size_t j = 0; j < total_; ++j) {
      if (pos_[j] >= 0 || x_[j] == 0.0) continue;
      const int jj = static_cast<int>(j);
      if (jj < static_cast<int>(n_)) {
        for (std::size_t i = 0; i < m_; ++i) {
          r[i] -= p_.constraints(i, j) * x_[j];
        }
      } else if (!IsArtificial(jj)) {
        r[j - n_] += x_[j];
      } else {
        r[j - n_ - m_] -= art_sign_[j - n_ - m_] * x_[j];
      }
    }
    for (std::size_t k = 0; k < m_; ++k) {
      double v = 0.0;
      for (std::size_t i = 0; i < m_; ++i) v += binv_(k, i) * r[i];
      x_[head_[k]] = v;
    }
  }

  void Pivot(std::size_t r, int entering, const std::vector<double>& alpha) {
    const double piv = alpha[r];
    nz_inv_.clear();
    for (std::size_t k = 0; k < m_; ++k) {
      if (binv_(r, k) == 0.0) continue;
      binv_(r, k) /= piv;
      nz_inv_.push_back(k);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || alpha[i] == 0.0) continue;
      const double f = alpha[i];
      for (std::size_t k : nz_inv_) binv_(i, k) -= f * binv_(r, k);
    }
    const int leaving = head_[r];
    pos_[leaving] = -1;
    head_[r] = entering;
    pos_[entering] = static_cast<int>(r);
    if (++pivots_since_refactor_ >= opt_.refactor_interval) Refactor();
  }

  void CountIteration() {
    if (++iterations_ > opt_.max_iterations) {
      throw NumericalBreakdown("simplex iteration limit exceeded");
    }
  }

  // Bounded primal simplex on the current costs. Requires a primal feasible
  // basis. Dantzig pricing; switches to Bland's rule after stall_limit
  // consecutive degenerate pivots and back after a nondegenerate one.
  Outcome RunPrimal() {
    int stall = 0;
    bool bland = false;
    while (true) {
      const std::vector<double> pi = Duals();
      int entering = -1;
      double best = 0.0;
      double entering_d = 0.0;
      for (std::size_t j = 0; j < total_; ++j) {
        const int jj = static_cast<int>(j);
        if (pos_[j] >= 0 || IsFixed(jj)) continue;
        const double d = cost_[j] - ColumnDot(pi, jj);
        const bool can_up = x_[j] < hi_[j];
        const bool can_down = x_[j] > lo_[j];
        const bool eligible = (d < -opt_.optimality_tol && can_up) ||
                              (d > opt_.optimality_tol && can_down);
        if (!eligible) continue;
        if (bland) {
          entering = jj;
          entering_d = d;
          break;
        }
        if (std::abs(d) > best) {
          best = std::abs(d);
          entering = jj;
          entering_d = d;
        }
      }
      if (entering < 0) return Outcome::kOptimal;
      CountIteration();

      const double dir = entering_d < 0 ? 1.0 : -1.0;
      const std::vector<double> alpha = Ftran(entering);
      // Basic k changes at rate -dir * alpha[k] per unit step.
      double step = hi_[entering] - lo_[entering];  // bound flip
      int leave_pos = -1;
      int leave_var = -1;
      double leave_value = 0.0;
      for (std::size_t k = 0; k < m_; ++k) {
        if (std::abs(alpha[k]) <= opt_.pivot_tol) continue;
        const int b = head_[k];
        const double rate = -dir * alpha[k];
        double limit;
        double target;
        if (rate < 0) {
          if (!std::isfinite(lo_[b])) continue;
          limit = (x_[b] - lo_[b]) / -rate;
          target = lo_[b];
        } else {
          if (!std::isfinite(hi_[b])) continue;
          limit = (hi_[b] - x_[b]) / rate;
          target = hi_[b];
        }
        limit = std::max(limit, 0.0);
        // Strictly smaller wins; ties go to a basic variable over a bound
        // flip, then to the lowest column index.
        bool take;
        if (limit < step - 1e-12) {
          take = true;
        } else if (limit <= step + 1e-12) {
          take = leave_pos < 0 || b < leave_var;
        } else {
          take = false;
        }
        if (take) {
          step = std::min(step, limit);
          leave_pos = static_cast<int>(k);
          leave_var = b;
          leave_value = target;
        }
      }
      if (!std::isfinite(step)) {
        ray_entering_ = entering;
        ray_dir_ = dir;
        ray_alpha_ = alpha;
        return Outcome::kUnbounded;
      }

      // Move along the edge.
      x_[entering] += dir * step;
      for (std::size_t k = 0; k < m_; ++k) {
        x_[head_[k]] -= dir * step * alpha[k];
      }
      if (leave_pos >= 0) {
        x_[leave_var] = leave_value;
        Pivot(static_cast<std::size_t>(leave_pos), entering, alpha);
      } else {
        // Bound flip: snap to the opposite bound exactly.
        x_[entering] = dir > 0 ? hi_[entering] : lo_[entering];
      }
      if (step <= 1e-12) {
        if (++stall >= opt_.stall_limit) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
    }
  }

  LpCertificate ColdSolve() {
    SetStructuralData();
    std::fill(pos_.begin(), pos_.end(), -1);
    for (std::size_t j = 0; j < n_; ++j) x_[j] = DefaultValue(lo_[j], hi_[j]);
    bool need_phase1 = false;
    for (std::size_t i = 0; i < m_; ++i) {
      double act = 0.0;
      for (std::size_t j = 0; j < n_; ++j) {
        act += p_.constraints(i, j) * x_[j];
      }
      const std::size_t s = n_ + i;
      const std::size_t a = n_ + m_ + i;
      const double surplus = act - p_.rhs[i];
      const double tol = opt_.feasibility_tol;
      if (surplus >= lo_[s] - tol && surplus <= hi_[s] + tol) {
        x_[s] = surplus;
        head_[i] = static_cast<int>(s);
        pos_[s] = static_cast<int>(i);
        art_sign_[i] = 0.0;
        x_[a] = 0.0;
      } else {
        x_[s] = std::clamp(surplus, lo_[s], hi_[s]);
        const double resid = p_.rhs[i] - act + x_[s];
        art_sign_[i] = resid > 0 ? 1.0 : -1.0;
        x_[a] = std::abs(resid);
        hi_[a] = kInfinity;
        head_[i] = static_cast<int>(a);
        pos_[a] = static_cast<int>(i);
        need_phase1 = true;
      }
    }
    Refactor();

    if (need_phase1) {
      std::fill(cost_.begin(), cost_.end(), 0.0);
      double scale = 1.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (art_sign_[i] != 0.0) cost_[n_ + m_ + i] = 1.0;
        scale = std::max(scale, std::abs(p_.rhs[i]));
      }
      RunPrimal();  // bounded below by zero
      Refactor();
      double infeas = 0.0;
      for (std::size_t i = 0; i < m_; ++i) infeas += x_[n_ + m_ + i];
      if (infeas > opt_.feasibility_tol * scale) {
        LpCertificate cert;
        cert.status = LpStatus::kInfeasible;
        cert.farkas = Duals();
        cert.iterations = iterations_;
        FillBasis(cert);
        return cert;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t a = n_ + m_ + i;
        hi_[a] = 0.0;
        if (pos_[a] < 0) x_[a] = 0.0;
      }
      DriveOutArtificials();
      for (std::size_t j = 0; j < n_; ++j) cost_[j] = p_.objective[j];
      for (std::size_t j = n_; j < total_; ++j) cost_[j] = 0.0;
    }
    return Finish(RunPrimal());
  }

  void DriveOutArtificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (!IsArtificial(head_[r])) continue;
      // Row r of B^{-1} [A, -I].
      int best = -1;
      double best_abs = 1e-7;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (pos_[j] >= 0) continue;
        double a;
        if (j < n_) {
          a = 0.0;
          for (std::size_t i = 0; i < m_; ++i) {
            a += binv_(r, i) * p_.constraints(i, j);
          }
        } else {
          a = -binv_(r, j - n_);
        }
        if (std::abs(a) > best_abs) {
          best_abs = std::abs(a);
          best = static_cast<int>(j);
        }
      }
      if (best < 0) continue;  // redundant equality row
      const int art = head_[r];
      const std::vector<double> alpha = Ftran(best);
      x_[art] = 0.0;
      Pivot(r, best, alpha);
    }
    Refactor();
  }

  void FillBasis(LpCertificate& cert) const {
    cert.basis = head_;
    cert.artificial_sign = art_sign_;
  }

  LpCertificate Finish(Outcome outcome) {
    LpCertificate cert;
    cert.iterations = iterations_;
    if (outcome == Outcome::kUnbounded) {
      cert.status = LpStatus::kUnbounded;
      cert.primal_ray.assign(n_, 0.0);
      if (ray_entering_ < static_cast<int>(n_)) {
        cert.primal_ray[ray_entering_] = ray_dir_;
      }
      for (std::size_t k = 0; k < m_; ++k) {
        const int b = head_[k];
        if (b < static_cast<int>(n_)) {
          cert.primal_ray[b] = -ray_dir_ * ray_alpha_[k];
        }
      }
      FillBasis(cert);
      return cert;
    }
    Refactor();
    cert.status = LpStatus::kOptimal;
    cert.primal.assign(x_.begin(), x_.begin() + n_);
    cert.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      cert.objective += p_.objective[j] * cert.primal[j];
    }
    cert.duals = Duals();
    cert.reduced_lower.assign(n_, 0.0);
    cert.reduced_upper.assign(n_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      if (pos_[j] >= 0) continue;
      const double d = p_.objective[j] - ColumnDot(cert.duals, static_cast<int>(j));
      if (d > 0 && std::isfinite(p_.lower[j])) cert.reduced_lower[j] = d;
      if (d < 0 && std::isfinite(p_.upper[j])) cert.reduced_upper[j] = d;
    }
    FillBasis(cert);
    return cert;
  }

  // Installs a warm basis and reoptimizes with the dual simplex. Returns
  // false when the basis is unusable (wrong size, artificials, singular, or
  // not dual feasible); the caller then solves from scratch.
  bool TryWarmStart(const WarmStart& ws) {
    if (ws.basis.size() != m_) return false;
    SetStructuralData();
    std::fill(pos_.begin(), pos_.end(), -1);
    for (std::size_t k = 0; k < m_; ++k) {
      const int j = ws.basis[k];
      if (j < 0 || j >= static_cast<int>(n_ + m_) || pos_[j] >= 0) return false;
      head_[k] = j;
      pos_[j] = static_cast<int>(k);
    }
    std::fill(art_sign_.begin(), art_sign_.end(), 0.0);
    try {
      Refactor();
    } catch (const NumericalBreakdown&) {
      return false;
    }
    const std::vector<double> pi = Duals();
    for (std::size_t j = 0; j < total_; ++j) {
      if (pos_[j] >= 0) continue;
      const int jj = static_cast<int>(j);
      if (IsArtificial(jj)) {
        x_[j] = 0.0;
        continue;
      }
      const double d = cost_[j] - ColumnDot(pi, jj);
      if (d > opt_.optimality_tol) {
        if (!std::isfinite(lo_[j])) return false;
        x_[j] = lo_[j];
      } else if (d < -opt_.optimality_tol) {
        if (!std::isfinite(hi_[j])) return false;
        x_[j] = hi_[j];
      } else {
        x_[j] = DefaultValue(lo_[j], hi_[j]);
      }
    }
    RecomputeBasicValues();
    return RunDual();
  }

  // Bounded dual simplex from a dual feasible basis. Returns false if it
  // gives up (iteration cap or numerical trouble).
  bool RunDual() {
    const int cap = 20 * static_cast<int>(m_ + n_) + 100;
    for (int it = 0; it < cap; ++it) {
      int r = -1;
      double worst = opt_.feasibility_tol;
      for (std::size_t k = 0; k < m_; ++k) {
        const int b = head_[k];
        const double viol = std::max(lo_[b] - x_[b], x_[b] - hi_[b]);
        if (viol > worst) {
          worst = viol;
          r = static_cast<int>(k);
        }
      }
      if (r < 0) return true;  // primal feasible: caller runs primal cleanup
      CountIteration();
      const int leaving = head_[r];
      const bool below = x_[leaving] < lo_[leaving];
      std::vector<double> row(binv_.Row(r).begin(), binv_.Row(r).end());
      const std::vector<double> pi = Duals();

      int entering = -1;
      double best_ratio = kInfinity;
      double best_alpha = 0.0;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        const int jj = static_cast<int>(j);
        if (pos_[j] >= 0 || IsFixed(jj)) continue;
        const double a = ColumnDot(row, jj);
        if (std::abs(a) <= opt_.pivot_tol) continue;
        const bool can_up = x_[j] < hi_[j];
        const bool can_down = x_[j] > lo_[j];
        // x_leaving moves by -a * delta_j.
        const bool ok = below ? ((a < 0 && can_up) || (a > 0 && can_down))
                              : ((a > 0 && can_up) || (a < 0 && can_down));
        if (!ok) continue;
        const double d = cost_[j] - ColumnDot(pi, jj);
        const double ratio = std::abs(d) / std::abs(a);
        if (ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && std::abs(a) > std::abs(best_alpha))) {
          best_ratio = ratio;
          best_alpha = a;
          entering = jj;
        }
      }
      if (entering < 0) {
        std::vector<double> sigma(m_);
        for (std::size_t i = 0; i < m_; ++i) sigma[i] = below ? -row[i] : row[i];
        if (FarkasViolation(p_, sigma, 1e-7) <= opt_.feasibility_tol) {
          return false;
        }
        LpCertificate cert;
        cert.status = LpStatus::kInfeasible;
        cert.farkas = std::move(sigma);
        cert.iterations = iterations_;
        FillBasis(cert);
        warm_result_ = std::move(cert);
        return true;
      }
      x_[leaving] = below ? lo_[leaving] : hi_[leaving];
      const std::vector<double> alpha = Ftran(entering);
      Pivot(static_cast<std::size_t>(r), entering, alpha);
      RecomputeBasicValues();
    }
    return false;
  }

  const LpProblem& p_;
  const SimplexOptions& opt_;
  const std::size_t m_;
  const std::size_t n_;
  const std::size_t total_;
  std::vector<double> lo_, hi_, cost_, x_;
  std::vector<int> pos_;
  std::vector<int> head_;
  std::vector<double> art_sign_;
  Matrix binv_;
  int iterations_ = 0;
  int pivots_since_refactor_ = 0;
  std::vector<std::size_t> nz_b_;
  std::vector<std::size_t> nz_inv_;
  int ray_entering_ = -1;
  double ray_dir_ = 0.0;
  std::vector<double> ray_alpha_;
  std::optional<LpCertificate> warm_result_;
};

}  // namespace

LpCertificate SolveLp(const LpProblem& problem, const SimplexOptions& options,
                      const WarmStart* warm_start) {
  problem.Validate();
  if (warm_start != nullptr) {
    try {
      SimplexSolver warm(problem, options);
      return warm.Solve(warm_start);
    } catch (const NumericalBreakdown&) {
      // fall through to a cold solve
    }
  }
  SimplexSolver solver(problem, options);
  return solver.Solve(nullptr);
}

Matrix BasisInverseRows(const LpCertificate& cert, const LpProblem& problem) {
  if (cert.status != LpStatus::kOptimal) {
    throw NotOptimal("basis inverse requested for a non-optimal certificate");
  }
  const std::size_t m = problem.num_rows();
  const std::size_t n = problem.num_cols();
  if (cert.basis.size() != m) throw DimensionMismatch("certificate basis size");
  Matrix b(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const int j = cert.basis[k];
    if (j < static_cast<int>(n)) {
      for (std::size_t i = 0; i < m; ++i) b(i, k) = problem.constraints(i, j);
    } else if (j < static_cast<int>(n + m)) {
      b(j - n, k) = -1.0;
    } else {
      b(j - n - m, k) = cert.artificial_sign[j - n - m];
    }
  }
  Matrix inv = Matrix::Identity(m);
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (std::abs(b(r, c)) > std::abs(b(piv, c))) piv = r;
    }
    if (std::abs(b(piv, c)) < 1e-12) throw NumericalBreakdown("singular basis");
    for (std::size_t k = 0; k < m && piv != c; ++k) {
      std::swap(b(piv, k), b(c, k));
      std::swap(inv(piv, k), inv(c, k));
    }
    const double d = b(c, c);
    for (std::size_t k = 0; k < m; ++k) {
      b(c, k) /= d;
      inv(c, k) /= d;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || b(r, c) == 0.0) continue;
      const double f = b(r, c);
      for (std::size_t k = 0; k < m; ++k) {
        b(r, k) -= f * b(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

double DualObjective(const LpCertificate& cert, const LpProblem& problem) {
  double v = Dot(cert.duals, problem.rhs);
  for (std::size_t j = 0; j < problem.num_cols(); ++j) {
    if (std::isfinite(problem.lower[j])) {
      v += cert.reduced_lower[j] * problem.lower[j];
    }
    if (std::isfinite(problem.upper[j])) {
      v += cert.reduced_upper[j] * problem.upper[j];
    }
  }
  return v;
}

double FarkasViolation(const LpProblem& problem,
                       const std::vector<double>& sigma, double tol) {
  const std::size_t m = problem.num_rows();
  if (sigma.size() != m) throw DimensionMismatch("Farkas multipliers");
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.senses[i] == RowSense::kGreaterEqual && sigma[i] < -tol) {
      return -kInfinity;
    }
    if (problem.senses[i] == RowSense::kLessEqual && sigma[i] > tol) {
      return -kInfinity;
    }
  }
  double v = Dot(sigma, problem.rhs);
  for (std::size_t j = 0; j < problem.num_cols(); ++j) {
    double r = 0.0;
    for (std::size_t i = 0; i < m; ++i) r -= sigma[i] * problem.constraints(i, j);
    if (r > 0) {
      if (std::isfinite(problem.lower[j])) {
        v += r * problem.lower[j];
      } else if (r > tol) {
        return -kInfinity;
      }
    } else if (r < 0) {
      if (std::isfinite(problem.upper[j])) {
        v += r * problem.upper[j];
      } else if (r < -tol) {
        return -kInfinity;
      }
    }
  }
  return v;
}

}  // namespace gbd
