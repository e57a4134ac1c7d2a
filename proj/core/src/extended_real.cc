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

#include "gbd/extended_real.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace gbd {

double ExtendedReal::finite() const {
  if (!is_finite()) throw std::logic_error("ExtendedReal is infinite");
  return value_;
}

double ExtendedReal::ToDouble() const {
  switch (kind_) {
    case Kind::kNegInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::kPosInf:
      return std::numeric_limits<double>::infinity();
    case Kind::kFinite:
      break;
  }
  return value_;
}

std::string ExtendedReal::ToString() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  // Print -0 as 0 so traces do not depend on the sign of zero.
  double v = value_ == 0.0 ? 0.0 : value_;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
  if (a.is_finite() && b.is_finite()) return ExtendedReal(a.value_ + b.value_);
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw std::domain_error("inf + (-inf) is undefined");
  }
  return a.is_finite() ? b : a;
}

ExtendedReal operator-(ExtendedReal a) {
  if (a.is_pos_inf()) return ExtendedReal::NegInf();
  if (a.is_neg_inf()) return ExtendedReal::PosInf();
  return ExtendedReal(-a.value_);
}

ExtendedReal operator*(double s, ExtendedReal a) {
  if (a.is_finite()) return ExtendedReal(s * a.value_);
  if (s == 0.0) return ExtendedReal(0.0);
  return (s > 0) == a.is_pos_inf() ? ExtendedReal::PosInf()
                                   : ExtendedReal::NegInf();
}

std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
  auto rank = [](ExtendedReal x) {
    return x.is_neg_inf() ? 0 : (x.is_finite() ? 1 : 2);
  };
  if (a.is_finite() && b.is_finite()) return a.value_ <=> b.value_;
  return rank(a) <=> rank(b);
}

bool operator==(ExtendedReal a, ExtendedReal b) {
  return (a <=> b) == std::partial_ordering::equivalent;
}

ExtendedReal Min(ExtendedReal a, ExtendedReal b) { return b < a ? b : a; }
ExtendedReal Max(ExtendedReal a, ExtendedReal b) { return b > a ? b : a; }

}  // namespace gbd
