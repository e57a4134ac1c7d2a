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

#include "gbd/big_m.h"

#include <algorithm>
#include <cmath>

#include "gbd/errors.h"

namespace gbd {

Interval LinearRange(std::span<const double> coeffs, double constant,
                     std::span<const double> lo, std::span<const double> hi) {
  if (coeffs.size() != lo.size() || coeffs.size() != hi.size()) {
    throw DimensionMismatch("interval range");
  }
  Interval r{constant, constant};
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const double a = coeffs[j] * lo[j];
    const double b = coeffs[j] * hi[j];
    r.lo += std::min(a, b);
    r.hi += std::max(a, b);
  }
  return r;
}

double PadBigM(double span) {
  if (!std::isfinite(span)) return kFallbackBigM;
  return std::max(0.0, span) * 1.1 + 1.0;
}

}  // namespace gbd
