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

#ifndef GBD_BIG_M_H_
#define GBD_BIG_M_H_

#include <span>

namespace gbd {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Range of coeffs^T x + constant over the box [lo, hi] (finite bounds).
Interval LinearRange(std::span<const double> coeffs, double constant,
                     std::span<const double> lo, std::span<const double> hi);

// Slack applied to every computed constant: 1.1 * span + 1, never below 1.
double PadBigM(double span);

// Used when a range cannot be bounded; logged by callers.
inline constexpr double kFallbackBigM = 1e7;

}  // namespace gbd

#endif  // GBD_BIG_M_H_
