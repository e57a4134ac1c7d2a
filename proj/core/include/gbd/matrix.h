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

#ifndef GBD_MATRIX_H_
#define GBD_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gbd {

// Dense row-major matrix. Problems in this library are desk-scale, so no
// sparse storage is provided.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  // Builds from nested row lists; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix FromRows(const std::vector<std::vector<double>>& rows,
                         std::size_t cols_if_empty = 0);
  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<double> Row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> Row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<double> Column(std::size_t j) const;

  // y = M x
  std::vector<double> Multiply(std::span<const double> x) const;
  // y = M^T x
  std::vector<double> TransposeMultiply(std::span<const double> x) const;

  // Appends one row; the matrix must be empty or have matching width.
  void AppendRow(std::span<const double> row);

  std::vector<std::vector<double>> ToRows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double Dot(std::span<const double> a, std::span<const double> b);

}  // namespace gbd

#endif  // GBD_MATRIX_H_
