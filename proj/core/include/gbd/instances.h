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

#ifndef GBD_INSTANCES_H_
#define GBD_INSTANCES_H_

#include <optional>
#include <vector>

#include "gbd/matrix.h"

namespace gbd {

// min c^T x + d^T y  s.t.  A x + G y >= b,  0 <= x <= x_upper, y >= 0.
struct LpBendersInstance {
  std::vector<double> c;
  std::vector<double> d;
  Matrix a;
  Matrix g;
  std::vector<double> b;
  std::vector<double> x_upper;

  std::size_t n1() const { return c.size(); }
  std::size_t n2() const { return d.size(); }
  std::size_t m() const { return b.size(); }
  // Throws InputError.
  void Validate() const;
};

struct Scenario {
  double probability = 0.0;
  Matrix a2;
  std::vector<double> b2;
};

// min c^T x + sum_w p_w d2^T y_w  s.t.  A1 x >= b1,
//   G2 y_w >= b2_w - A2_w x,  y_w >= 0,  x in [x_lower, x_upper].
struct TwoStageInstance {
  std::vector<double> c;
  std::vector<double> d2;
  Matrix a1;
  std::vector<double> b1;
  Matrix g2;
  std::vector<Scenario> scenarios;
  std::vector<bool> x_integer;
  std::vector<bool> y_integer;
  std::vector<double> x_lower;
  std::vector<double> x_upper;
  std::optional<double> big_m;

  std::size_t n1() const { return c.size(); }
  std::size_t n2() const { return d2.size(); }
  std::size_t m1() const { return b1.size(); }
  std::size_t m2() const { return g2.rows(); }
  void Validate() const;
};

// Optimistic MIBLP with integer linking variables:
//   min c^T x + d1^T y  s.t.  A1 x + G1 y >= b1,  x integer in a box,
//   y in argmin { d2^T y : G2 y >= b2 - A2 x, y >= 0, y_I integer }.
struct MiblpInstance {
  std::vector<double> c;
  std::vector<double> d1;
  std::vector<double> d2;
  Matrix a1;
  Matrix g1;
  std::vector<double> b1;
  Matrix a2;
  Matrix g2;
  std::vector<double> b2;
  std::vector<bool> x_integer;
  std::vector<bool> y_integer;
  std::vector<double> x_lower;
  std::vector<double> x_upper;
  std::optional<double> big_m;
  std::optional<double> epsilon;

  std::size_t n1() const { return c.size(); }
  std::size_t n2() const { return d1.size(); }
  std::size_t m1() const { return b1.size(); }
  std::size_t m2() const { return b2.size(); }
  // Also enforces integer x and a finite box.
  void Validate() const;
};

}  // namespace gbd

#endif  // GBD_INSTANCES_H_
