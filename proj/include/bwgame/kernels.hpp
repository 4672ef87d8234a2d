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

#ifndef BWGAME_KERNELS_HPP_
#define BWGAME_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "bwgame/matrix_solver.hpp"
#include "bwgame/stage_game.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame {

// kSerial is the reference path; kParallel distributes independent work
// items over OpenMP threads. Both produce identical results.
enum class Execution { kSerial, kParallel };

// One backward-induction layer. For every q in `states`, values[q] becomes
// payoff[q] if q is terminal and otherwise the value of the one-round
// matrix game M(i, j) = child_values[step(q, (i, j))]. Optimal row/column
// strategies are stored when the output vectors are given. Terminal states
// in `states` must carry a payoff.
template <Scalar T>
void backward_layer(const StageGame<T>& game, std::span<const StateId> states,
                    const std::vector<T>& child_values, std::vector<T>& values,
                    std::vector<std::vector<T>>* row_strategies,
                    std::vector<std::vector<T>>* col_strategies, Execution exec);

// The one-round matrix at q over child values.
template <Scalar T>
Matrix<T> one_round_matrix(const StageGame<T>& game, StateId q, const std::vector<T>& child_values);

// 64-bit seed for rollout `index` of a run seeded with `seed` (splitmix64).
std::uint64_t rollout_seed(std::uint64_t seed, std::uint64_t index);

// Payoff of each of `rollouts` independent plays of `game` under
// (sigma, tau). Rollout r draws from its own generator seeded with
// rollout_seed(seed, r), so the output does not depend on thread count.
std::vector<double> rollout_payoffs(const StageGame<double>& game, const BehavioralStrategy& sigma,
                                    const BehavioralStrategy& tau, std::uint64_t rollouts,
                                    std::uint64_t seed, Execution exec);

}  // namespace bwgame

#endif  // BWGAME_KERNELS_HPP_
