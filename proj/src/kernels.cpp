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

#include "bwgame/kernels.hpp"

#include <random>

#include <omp.h>

namespace bwgame {

template <Scalar T>
Matrix<T> one_round_matrix(const StageGame<T>& game, StateId q, const std::vector<T>& child_values) {
  const auto& al = game.alphabets;
  Matrix<T> m(al.num_x(), al.num_y());
  for (std::size_t x = 0; x < al.num_x(); ++x) {
    for (std::size_t y = 0; y < al.num_y(); ++y) m(x, y) = child_values[game.step(q, al.joint(x, y))];
  }
  return m;
}

namespace {

template <Scalar T>
void solve_state(const StageGame<T>& game, StateId q, const std::vector<T>& child_values,
                 std::vector<T>& values, std::vector<std::vector<T>>* rows,
                 std::vector<std::vector<T>>* cols) {
  if (game.terminal[q]) {
    values[q] = game.payoff[q];
    return;
  }
  auto sol = solve_matrix(one_round_matrix(game, q, child_values));
  values[q] = sol.value;
  if (rows) (*rows)[q] = std::move(sol.row_strategy);
  if (cols) (*cols)[q] = std::move(sol.col_strategy);
}

}  // namespace

template <Scalar T>
void backward_layer(const StageGame<T>& game, std::span<const StateId> states,
                    const std::vector<T>& child_values, std::vector<T>& values,
                    std::vector<std::vector<T>>* row_strategies,
                    std::vector<std::vector<T>>* col_strategies, Execution exec) {
  const auto n = static_cast<std::int64_t>(states.size());
  if (exec == Execution::kSerial) {
    for (std::int64_t i = 0; i < n; ++i) {
      solve_state(game, states[i], child_values, values, row_strategies, col_strategies);
    }
    return;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    solve_state(game, states[i], child_values, values, row_strategies, col_strategies);
  }
}

std::uint64_t rollout_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::size_t sample(const std::vector<double>& row, double u) {
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] <= 0.0) continue;
    acc += row[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double play_once(const StageGame<double>& game, const BehavioralStrategy& sigma,
                 const BehavioralStrategy& tau, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  StateId q = game.start;
  StateId s = sigma.start();
  StateId t = tau.start();
  for (int round = 0; round < game.horizon && !game.terminal[q]; ++round) {
    std::size_t x = sample(sigma.approx_row(s), uniform01(gen));
    std::size_t y = sample(tau.approx_row(t), uniform01(gen));
    JointMove z = game.alphabets.joint(x, y);
    q = game.step(q, z);
    s = sigma.next(s, z);
    t = tau.next(t, z);
  }
  return game.payoff[q];
}

}  // namespace

std::vector<double> rollout_payoffs(const StageGame<double>& game, const BehavioralStrategy& sigma,
                                    const BehavioralStrategy& tau, std::uint64_t rollouts,
                                    std::uint64_t seed, Execution exec) {
  std::vector<double> out(rollouts);
  const auto n = static_cast<std::int64_t>(rollouts);
  if (exec == Execution::kSerial) {
    for (std::int64_t r = 0; r < n; ++r) {
      out[r] = play_once(game, sigma, tau, rollout_seed(seed, static_cast<std::uint64_t>(r)));
    }
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < n; ++r) {
    out[r] = play_once(game, sigma, tau, rollout_seed(seed, static_cast<std::uint64_t>(r)));
  }
  return out;
}

#define BWGAME_INSTANTIATE(T)                                                                   \
  template Matrix<T> one_round_matrix<T>(const StageGame<T>&, StateId, const std::vector<T>&); \
  template void backward_layer<T>(const StageGame<T>&, std::span<const StateId>,                \
                                  const std::vector<T>&, std::vector<T>&,                       \
                                  std::vector<std::vector<T>>*, std::vector<std::vector<T>>*,   \
                                  Execution);

BWGAME_INSTANTIATE(double)
BWGAME_INSTANTIATE(Rational)

#undef BWGAME_INSTANTIATE

}  // namespace bwgame
