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

#ifndef GBD_PIECEWISE_H_
#define GBD_PIECEWISE_H_

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "gbd/extended_real.h"
#include "gbd/matrix.h"

namespace gbd {

// beta1^T a1 + beta2^T a2 + phi * p + constant. Plain MILP dual functions
// leave beta1 empty and phi zero.
struct AffineTerm {
  std::vector<double> beta1;
  std::vector<double> beta2;
  double phi = 0.0;
  double constant = 0.0;

  // phi_value only matters when phi != 0. A negative phi coefficient against
  // phi_value = +inf yields -inf; a positive one yields +inf.
  ExtendedReal Evaluate(std::span<const double> b1, std::span<const double> b2,
                        ExtendedReal phi_value = 0.0) const;
};

// min over terms; strong at (anchor1, anchor2).
struct MinAffineDual {
  std::vector<AffineTerm> terms;
  std::vector<double> anchor1;
  std::vector<double> anchor2;

  bool HasPhi() const;
};

// Upper bound on a MILP value function obtained from the continuous
// restriction at an optimal solution:
//   (beta - offset)^T eta + integer_cost  if domain * (beta - offset) >= 0,
//   +inf                                  otherwise.
struct RestrictedPrimal {
  std::vector<double> eta;
  double integer_cost = 0.0;
  std::vector<double> offset;
  Matrix domain;
  std::vector<double> anchor;
  // The integer part y*_I; informational.
  std::vector<double> integer_part;
};

struct GlobalMember {
  MinAffineDual dual;
  std::optional<RestrictedPrimal> primal;
};

// max over members; -inf when empty.
struct GlobalDual {
  std::vector<GlobalMember> members;
};

// Throws DimensionMismatch when argument sizes differ from a term's.
ExtendedReal EvalDual(const MinAffineDual& d, std::span<const double> beta1,
                      std::span<const double> beta2,
                      ExtendedReal phi_value = 0.0);

// Domain membership uses an absolute slack of `tol` on each domain row.
ExtendedReal EvalPrimal(const RestrictedPrimal& p,
                        std::span<const double> beta2, double tol = 1e-9);

// Members carrying a primal get phi_value = EvalPrimal(primal, beta2).
ExtendedReal EvalGlobal(const GlobalDual& g, std::span<const double> beta1,
                        std::span<const double> beta2);

struct Sample {
  double beta;
  ExtendedReal value;
};

// Evaluates f on lo, lo + step, ..., up to hi inclusive (within 1e-9 steps).
// Throws BadRange unless step > 0, lo <= hi and all three are finite.
std::vector<Sample> SampleGrid(const std::function<ExtendedReal(double)>& f,
                               double lo, double hi, double step);
std::vector<double> GridPoints(double lo, double hi, double step);

// "beta,value" header, then one row per sample; infinities as inf / -inf.
void WriteSamplesCsv(std::ostream& out, const std::vector<Sample>& samples);

}  // namespace gbd

#endif  // GBD_PIECEWISE_H_
