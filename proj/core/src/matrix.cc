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

#include "gbd/matrix.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gbd/errors.h"

namespace gbd {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows,
                        std::size_t cols_if_empty) {
  Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw DimensionMismatch("row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(m.cols_));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.Row(i).begin());
  }
  return m;
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::Column(std::size_t j) const {
  std::vector<double> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
  return col;
}

std::vector<double> Matrix::Multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw DimensionMismatch("Matrix::Multiply");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = Dot(Row(i), x);
  return y;
}

std::vector<double> Matrix::TransposeMultiply(std::span<const double> x) const {
  if (x.size() != rows_) throw DimensionMismatch("Matrix::TransposeMultiply");
  std::vector<double> y(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0.0) continue;
    auto row = Row(i);
    for (std::size_t j = 0; j < cols_; ++j) y[j] += row[j] * x[i];
  }
  return y;
}

void Matrix::AppendRow(std::span<const double> row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw DimensionMismatch("Matrix::AppendRow");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::vector<double>> Matrix::ToRows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(Row(i).begin(), Row(i).end());
  }
  return out;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("Dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace gbd
