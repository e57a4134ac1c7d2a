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

#include "gbd/piecewise.h"

#include <cmath>
#include <string>

#include "gbd/errors.h"

namespace gbd {

namespace {

double PartialDot(const std::vector<double>& coeff, std::span<const double> x,
                  const char* what) {
  if (coeff.size() != x.size()) {
    throw DimensionMismatch(std::string(what) + " has " +
                            std::to_string(x.size()) + " entries, expected " +
                            std::to_string(coeff.size()));
  }
  return Dot(coeff, x);
}

}  // namespace

ExtendedReal AffineTerm::Evaluate(std::span<const double> b1,
                                  std::span<const double> b2,
                                  ExtendedReal phi_value) const {
  const double base =
      PartialDot(beta1, b1, "beta1") + PartialDot(beta2, b2, "beta2") + constant;
  if (phi == 0.0) return base;
  return ExtendedReal(base) + phi * phi_value;
}

bool MinAffineDual::HasPhi() const {
  for (const AffineTerm& t : terms) {
    if (t.phi != 0.0) return true;
  }
  return false;
}

ExtendedReal EvalDual(const MinAffineDual& d, std::span<const double> beta1,
                      std::span<const double> beta2, ExtendedReal phi_value) {
  ExtendedReal best = ExtendedReal::PosInf();
  for (const AffineTerm& t : d.terms) {
    best = Min(best, t.Evaluate(beta1, beta2, phi_value));
  }
  return best;
}

ExtendedReal EvalPrimal(const RestrictedPrimal& p,
                        std::span<const double> beta2, double tol) {
  if (beta2.size() != p.offset.size() || p.eta.size() != p.offset.size()) {
    throw DimensionMismatch("primal function argument");
  }
  std::vector<double> r(beta2.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = beta2[i] - p.offset[i];
  if (p.domain.rows() > 0) {
    if (p.domain.cols() != r.size()) throw DimensionMismatch("primal domain");
    for (std::size_t i = 0; i < p.domain.rows(); ++i) {
      if (Dot(p.domain.Row(i), r) < -tol) return ExtendedReal::PosInf();
    }
  }
  return Dot(p.eta, r) + p.integer_cost;
}

ExtendedReal EvalGlobal(const GlobalDual& g, std::span<const double> beta1,
                        std::span<const double> beta2) {
  ExtendedReal best = ExtendedReal::NegInf();
  for (const GlobalMember& m : g.members) {
    ExtendedReal phi = 0.0;
    if (m.primal.has_value()) phi = EvalPrimal(*m.primal, beta2);
    best = Max(best, EvalDual(m.dual, beta1, beta2, phi));
  }
  return best;
}

std::vector<double> GridPoints(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
    throw BadRange("grid bounds must be finite");
  }
  if (!(step > 0.0)) throw BadRange("step must be positive");
  if (lo > hi) throw BadRange("lo exceeds hi");
  const double count = std::floor((hi - lo) / step + 1e-9);
  if (count > 1e7) throw BadRange("grid has too many points");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count) + 1);
  for (long i = 0; i <= static_cast<long>(count); ++i) {
    pts.push_back(lo + static_cast<double>(i) * step);
  }
  return pts;
}

std::vector<Sample> SampleGrid(const std::function<ExtendedReal(double)>& f,
                               double lo, double hi, double step) {
  std::vector<Sample> out;
  for (double b : GridPoints(lo, hi, step)) out.push_back({b, f(b)});
  return out;
}

void WriteSamplesCsv(std::ostream& out, const std::vector<Sample>& samples) {
  out << "beta,value\n";
  for (const Sample& s : samples) {
    out << ExtendedReal(s.beta).ToString() << ',' << s.value.ToString() << '\n';
  }
}

}  // namespace gbd
