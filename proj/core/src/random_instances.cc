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

#include "gbd/random_instances.h"

#include <random>

namespace gbd {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [lo, hi]; avoids uniform_int_distribution, whose
  // output is implementation-defined.
  int Int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
  }

  std::vector<double> Vec(std::size_t n, int lo, int hi) {
    std::vector<double> v(n);
    for (double& x : v) x = Int(lo, hi);
    return v;
  }

  Matrix Mat(std::size_t r, std::size_t c, int lo, int hi) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Int(lo, hi);
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

// Makes sure every row has a positive coefficient.
void ForcePositiveRows(Matrix& g, Draw& d) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    bool any = false;
    for (double v : g.Row(i)) any = any || v > 0;
    if (!any) g(i, static_cast<std::size_t>(d.Int(0, static_cast<int>(g.cols()) - 1))) = d.Int(1, 3);
  }
}

}  // namespace

LpBendersInstance RandomLpBenders(std::uint64_t seed) {
  Draw d(seed);
  LpBendersInstance inst;
  inst.c = d.Vec(3, -3, 5);
  inst.d = d.Vec(3, 1, 6);
  inst.a = d.Mat(5, 3, -3, 3);
  inst.g = d.Mat(5, 3, -3, 3);
  for (double& v : inst.g.Row(0)) v = 0.0;
  inst.x_upper.assign(3, 10.0);
  // b = A x0 + G y0 - s for a known nonnegative point.
  const std::vector<double> x0 = d.Vec(3, 0, 6);
  const std::vector<double> y0 = d.Vec(3, 0, 6);
  const auto ax = inst.a.Multiply(x0);
  const auto gy = inst.g.Multiply(y0);
  inst.b.resize(5);
  for (std::size_t i = 0; i < 5; ++i) inst.b[i] = ax[i] + gy[i] - d.Int(0, 3);
  return inst;
}

TwoStageInstance RandomTwoStage(std::uint64_t seed) {
  Draw d(seed);
  TwoStageInstance inst;
  inst.c = d.Vec(2, -3, 3);
  inst.d2 = d.Vec(3, 1, 5);
  inst.a1 = Matrix(0, 2);
  inst.g2 = d.Mat(2, 3, -2, 3);
  ForcePositiveRows(inst.g2, d);
  const int scenarios = d.Int(1, 3);
  std::vector<double> weights;
  double total = 0.0;
  for (int w = 0; w < scenarios; ++w) {
    weights.push_back(d.Int(1, 4));
    total += weights.back();
  }
  for (int w = 0; w < scenarios; ++w) {
    Scenario s;
    s.probability = weights[w] / total;
    s.a2 = d.Mat(2, 2, -2, 2);
    s.b2 = d.Vec(2, -3, 7);
    inst.scenarios.push_back(std::move(s));
  }
  inst.x_integer = {true, true};
  inst.y_integer = {true, true, false};
  inst.x_lower = {0.0, 0.0};
  inst.x_upper = {4.0, 4.0};
  return inst;
}

MiblpInstance RandomMiblp(std::uint64_t seed) {
  Draw d(seed);
  MiblpInstance inst;
  const std::size_t n2 = static_cast<std::size_t>(d.Int(3, 4));
  inst.c = d.Vec(2, -3, 3);
  inst.d1 = d.Vec(n2, -4, 4);
  inst.d2 = d.Vec(n2, 1, 5);
  inst.a1 = d.Mat(1, 2, -2, 2);
  inst.g1 = d.Mat(1, n2, -2, 2);
  inst.b1 = d.Vec(1, -4, 2);
  inst.a2 = d.Mat(2, 2, -2, 2);
  inst.g2 = d.Mat(2, n2, -2, 4);
  ForcePositiveRows(inst.g2, d);
  inst.b2 = d.Vec(2, -2, 7);
  inst.x_integer = {true, true};
  inst.y_integer.assign(n2, true);
  inst.y_integer[n2 - 1] = d.Int(0, 1) == 1;
  inst.x_lower = {0.0, 0.0};
  inst.x_upper = {4.0, 4.0};
  return inst;
}

}  // namespace gbd
