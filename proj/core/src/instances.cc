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

#include "gbd/instances.h"

#include <cmath>
#include <string>

#include "gbd/errors.h"

namespace gbd {

namespace {

void CheckShape(const Matrix& m, std::size_t rows, std::size_t cols,
                const char* field) {
  if (rows == 0 && m.rows() == 0) return;
  if (m.rows() != rows || m.cols() != cols) {
    throw InputError(field, "expected " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " matrix, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
}

void CheckSize(std::size_t got, std::size_t want, const char* field) {
  if (got != want) {
    throw InputError(field, "expected " + std::to_string(want) +
                                " entries, got " + std::to_string(got));
  }
}

void CheckFinite(const std::vector<double>& v, const char* field) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InputError(field, "entries must be finite");
  }
}

void CheckFinite(const Matrix& m, const char* field) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (double x : m.Row(i)) {
      if (!std::isfinite(x)) throw InputError(field, "entries must be finite");
    }
  }
}

void CheckBox(const std::vector<double>& lo, const std::vector<double>& hi,
              std::size_t n) {
  CheckSize(lo.size(), n, "x_lower");
  CheckSize(hi.size(), n, "x_upper");
  CheckFinite(lo, "x_lower");
  CheckFinite(hi, "x_upper");
  for (std::size_t j = 0; j < n; ++j) {
    if (lo[j] > hi[j]) {
      throw InputError("x_lower", "lower bound exceeds upper bound for x" +
                                      std::to_string(j + 1));
    }
  }
}

}  // namespace

void LpBendersInstance::Validate() const {
  CheckFinite(c, "c");
  CheckFinite(d, "d");
  CheckFinite(b, "b");
  CheckShape(a, m(), n1(), "A");
  CheckShape(g, m(), n2(), "G");
  CheckFinite(a, "A");
  CheckFinite(g, "G");
  CheckSize(x_upper.size(), n1(), "x_upper");
  for (double u : x_upper) {
    if (!std::isfinite(u) || u < 0) {
      throw InputError("x_upper", "bounds must be finite and nonnegative");
    }
  }
}

void TwoStageInstance::Validate() const {
  CheckFinite(c, "c");
  CheckFinite(d2, "d2");
  CheckFinite(b1, "b1");
  CheckShape(a1, m1(), n1(), "A1");
  CheckFinite(a1, "A1");
  if (g2.rows() > 0) CheckShape(g2, m2(), n2(), "G2");
  CheckFinite(g2, "G2");
  if (scenarios.empty()) throw InputError("scenarios", "at least one required");
  double total = 0.0;
  for (const Scenario& s : scenarios) {
    if (!(s.probability >= 0.0 && s.probability <= 1.0)) {
      throw InputError("scenarios.probability", "must lie in [0, 1]");
    }
    total += s.probability;
    CheckShape(s.a2, m2(), n1(), "scenarios.A2");
    CheckFinite(s.a2, "scenarios.A2");
    CheckSize(s.b2.size(), m2(), "scenarios.b2");
    CheckFinite(s.b2, "scenarios.b2");
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InputError("scenarios.probability", "probabilities must sum to 1");
  }
  CheckSize(x_integer.size(), n1(), "x_integer");
  CheckSize(y_integer.size(), n2(), "y_integer");
  CheckBox(x_lower, x_upper, n1());
  if (big_m.has_value() && !(*big_m > 0.0)) {
    throw InputError("big_m", "must be positive");
  }
}

void MiblpInstance::Validate() const {
  CheckFinite(c, "c");
  CheckFinite(d1, "d1");
  CheckFinite(d2, "d2");
  CheckSize(d2.size(), n2(), "d2");
  CheckFinite(b1, "b1");
  CheckFinite(b2, "b2");
  CheckShape(a1, m1(), n1(), "A1");
  CheckShape(g1, m1(), n2(), "G1");
  CheckShape(a2, m2(), n1(), "A2");
  CheckShape(g2, m2(), n2(), "G2");
  CheckFinite(a1, "A1");
  CheckFinite(g1, "G1");
  CheckFinite(a2, "A2");
  CheckFinite(g2, "G2");
  CheckSize(x_integer.size(), n1(), "x_integer");
  CheckSize(y_integer.size(), n2(), "y_integer");
  for (std::size_t j = 0; j < n1(); ++j) {
    if (!x_integer[j]) {
      throw InputError("x_integer",
                       "all first-stage variables must be integer (x" +
                           std::to_string(j + 1) + " is continuous)");
    }
  }
  CheckBox(x_lower, x_upper, n1());
  if (big_m.has_value() && !(*big_m > 0.0)) {
    throw InputError("big_m", "must be positive");
  }
  if (epsilon.has_value() && !(*epsilon > 0.0)) {
    throw InputError("epsilon", "must be positive");
  }
}

}  // namespace gbd
