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

#include "bwgame/matrix_solver.hpp"

#include <algorithm>
#include <cmath>

#include "bwgame/game_model.hpp"

namespace bwgame {
namespace {

template <Scalar T>
bool positive(const T& v) {
  if constexpr (is_exact_v<T>) {
    return v > 0;
  } else {
    return v > 1e-12;
  }
}

template <Scalar T>
bool negative(const T& v) {
  if constexpr (is_exact_v<T>) {
    return v < 0;
  } else {
    return v < -1e-12;
  }
}

// Clips round-off and rescales to an exact distribution in double mode.
template <Scalar T>
void clean_distribution(std::vector<T>& p) {
  if constexpr (!is_exact_v<T>) {
    double sum = 0.0;
    for (auto& v : p) {
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    for (auto& v : p) v /= sum;
  }
}

}  // namespace

template <Scalar T>
T expected_matrix_payoff(const Matrix<T>& a, const std::vector<T>& x, const std::vector<T>& y) {
  T total(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) total += x[i] * y[j] * a(i, j);
  }
  return total;
}

template <Scalar T>
T row_guarantee(const Matrix<T>& a, const std::vector<T>& x) {
  T best(0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    T s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) s += x[i] * a(i, j);
    if (j == 0 || s < best) best = s;
  }
  return best;
}

template <Scalar T>
T col_guarantee(const Matrix<T>& a, const std::vector<T>& y) {
  T best(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T s(0);
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * y[j];
    if (i == 0 || s > best) best = s;
  }
  return best;
}

template <Scalar T>
MatrixSolution<T> solve_matrix(const Matrix<T>& a, double tol) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  if (n == 0 || m == 0) throw Error("solve_matrix: empty payoff matrix");
  if (!(tol > 0)) throw Error("solve_matrix: tolerance must be positive");
  T lo = a(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if constexpr (!is_exact_v<T>) {
        if (!std::isfinite(a(i, j))) throw Error("solve_matrix: non-finite payoff entry");
      }
      lo = std::min(lo, a(i, j));
    }
  }
  const T shift = T(1) - lo;

  // Tableau rows 0..n-1 are constraints, row n the objective. Columns
  // 0..m-1 are y', m..m+n-1 slacks, m+n the right-hand side.
  const std::size_t width = m + n + 1;
  std::vector<T> tab((n + 1) * width, T(0));
  auto at = [&](std::size_t r, std::size_t c) -> T& { return tab[r * width + c]; };
  std::vector<std::size_t> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) at(i, j) = a(i, j) + shift;
    at(i, m + i) = T(1);
    at(i, m + n) = T(1);
    basis[i] = m + i;
  }
  for (std::size_t j = 0; j < m; ++j) at(n, j) = T(-1);

  for (;;) {
    // Bland: lowest-index improving column, lowest-index leaving variable.
    std::size_t enter = width;
    for (std::size_t c = 0; c + 1 < width; ++c) {
      if (negative(at(n, c))) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = n;
    T best_ratio(0);
    for (std::size_t r = 0; r < n; ++r) {
      if (!positive(at(r, enter))) continue;
      T ratio = at(r, m + n) / at(r, enter);
      if (leave == n || ratio < best_ratio ||
          (!(best_ratio < ratio) && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == n) throw Error("solve_matrix: unbounded program (internal error)");
    const T pivot = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) /= pivot;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r == leave) continue;
      const T factor = at(r, enter);
      if (factor == T(0)) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= factor * at(leave, c);
    }
    basis[leave] = enter;
  }

  const T objective = at(n, m + n);  // = 1 / value(A')
  MatrixSolution<T> sol;
  sol.col_strategy.assign(m, T(0));
  for (std::size_t r = 0; r < n; ++r) {
    if (basis[r] < m) sol.col_strategy[basis[r]] = at(r, m + n) / objective;
  }
  sol.row_strategy.assign(n, T(0));
  for (std::size_t i = 0; i < n; ++i) sol.row_strategy[i] = at(n, m + i) / objective;
  clean_distribution(sol.row_strategy);
  clean_distribution(sol.col_strategy);
  sol.value = T(1) / objective - shift;
  sol.lower_guarantee = row_guarantee(a, sol.row_strategy);
  sol.upper_guarantee = col_guarantee(a, sol.col_strategy);
  double gap = std::max(0.0, as_double(T(sol.value - sol.lower_guarantee))) +
               std::max(0.0, as_double(T(sol.upper_guarantee - sol.value)));
  sol.certificate_gap = gap;
  return sol;
}

template class Matrix<double>;
template class Matrix<Rational>;
template MatrixSolution<double> solve_matrix<double>(const Matrix<double>&, double);
template MatrixSolution<Rational> solve_matrix<Rational>(const Matrix<Rational>&, double);
template double expected_matrix_payoff<double>(const Matrix<double>&, const std::vector<double>&,
                                               const std::vector<double>&);
template Rational expected_matrix_payoff<Rational>(const Matrix<Rational>&,
                                                   const std::vector<Rational>&,
                                                   const std::vector<Rational>&);
template double row_guarantee<double>(const Matrix<double>&, const std::vector<double>&);
template Rational row_guarantee<Rational>(const Matrix<Rational>&, const std::vector<Rational>&);
template double col_guarantee<double>(const Matrix<double>&, const std::vector<double>&);
template Rational col_guarantee<Rational>(const Matrix<Rational>&, const std::vector<Rational>&);

}  // namespace bwgame
