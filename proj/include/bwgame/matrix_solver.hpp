// Copyright 2026 The bwgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BWGAME_MATRIX_SOLVER_HPP_
#define BWGAME_MATRIX_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "bwgame/rational.hpp"

namespace bwgame {

// Dense row-major matrix. Rows are player I's moves, columns player II's.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Scalar T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <Scalar T>
struct MatrixSolution {
  T value;
  std::vector<T> row_strategy;  // player I, maximizer
  std::vector<T> col_strategy;  // player II, minimizer
  // min_j sum_i x_i a_ij and max_i sum_j y_j a_ij.
  T lower_guarantee;
  T upper_guarantee;
  // Shortfall of the row guarantee below `value` plus excess of the column
  // guarantee above it. Zero in exact arithmetic.
  double certificate_gap = 0.0;
};

// Solves max_x min_y x^T A y by the simplex method (Bland's rule) on
//   max sum_j y'_j  s.t.  A' y' <= 1, y' >= 0,
// with A' = A shifted to be positive; player I's strategy comes from the
// duals of the same tableau. Deterministic: equal inputs give equal
// strategies. `tol` is the certificate tolerance for double precision.
template <Scalar T>
MatrixSolution<T> solve_matrix(const Matrix<T>& payoffs, double tol = 1e-9);

// Expected payoff x^T A y.
template <Scalar T>
T expected_matrix_payoff(const Matrix<T>& payoffs, const std::vector<T>& x, const std::vector<T>& y);

// min_j sum_i x_i a_ij.
template <Scalar T>
T row_guarantee(const Matrix<T>& payoffs, const std::vector<T>& x);

// max_i sum_j a_ij y_j.
template <Scalar T>
T col_guarantee(const Matrix<T>& payoffs, const std::vector<T>& y);

struct Separation {
  bool inside = false;
  std::vector<double> normal;   // y = b - c
  double offset = 0.0;          // d = (y.b + y.c) / 2
  std::vector<double> nearest;  // c, nearest hull point to b
  double distance = 0.0;
};

// Hyperplane strictly separating b from the convex hull of `points`, built
// from the nearest hull point c (Wolfe's algorithm). Reports `inside` when
// |b - c| <= tol. Throws Error on an empty point set or dimension mismatch.
Separation separating_hyperplane(const std::vector<std::vector<double>>& points,
                                 const std::vector<double>& b, double tol = 1e-9);

}  // namespace bwgame

#endif  // BWGAME_MATRIX_SOLVER_HPP_
