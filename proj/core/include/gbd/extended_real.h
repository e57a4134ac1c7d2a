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

#ifndef GBD_EXTENDED_REAL_H_
#define GBD_EXTENDED_REAL_H_

#include <compare>
#include <string>

namespace gbd {

// A value in R u {-inf, +inf}. Infinite values never enter linear algebra;
// callers convert with finite() once they know the value is finite.
class ExtendedReal {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : kind_(Kind::kFinite), value_(v) {}  // NOLINT

  static constexpr ExtendedReal PosInf() { return ExtendedReal(Kind::kPosInf); }
  static constexpr ExtendedReal NegInf() { return ExtendedReal(Kind::kNegInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }

  // Throws std::logic_error when infinite.
  double finite() const;
  // +-infinity as IEEE doubles; only for reporting.
  double ToDouble() const;

  // "inf", "-inf", or the value printed with 10 significant digits.
  std::string ToString() const;

  // Sum; (+inf) + (-inf) is rejected with std::domain_error.
  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b);
  friend ExtendedReal operator-(ExtendedReal a);
  // Scalar product with the convention 0 * (+-inf) = 0.
  friend ExtendedReal operator*(double s, ExtendedReal a);

  friend std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b);
  friend bool operator==(ExtendedReal a, ExtendedReal b);

 private:
  explicit constexpr ExtendedReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  double value_ = 0.0;
};

ExtendedReal Min(ExtendedReal a, ExtendedReal b);
ExtendedReal Max(ExtendedReal a, ExtendedReal b);

}  // namespace gbd

#endif  // GBD_EXTENDED_REAL_H_
