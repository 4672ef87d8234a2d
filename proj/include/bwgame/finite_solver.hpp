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

#ifndef BWGAME_FINITE_SOLVER_HPP_
#define BWGAME_FINITE_SOLVER_HPP_

#include <optional>
#include <vector>

#include "bwgame/game_model.hpp"
#include "bwgame/kernels.hpp"
#include "bwgame/stage_game.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame {

// Which (state, remaining-rounds) pairs backward induction fills in.
enum class LayerScope {
  kExactTime,   // states reachable in exactly (horizon - k) rounds; finite games
  kStationary,  // every state reachable from start, at every k
};

// Values and one-round optimal strategies per (state, rounds remaining).
template <Scalar T>
struct SolveReport {
  StageGame<T> game;
  int horizon = 0;
  std::vector<std::vector<T>> values;     // [k][q]
  std::vector<std::vector<char>> defined;  // [k][q]
  std::vector<std::vector<std::vector<T>>> row_strategy;  // [k][q], k >= 1
  std::vector<std::vector<std::vector<T>>> col_strategy;

  const T& value() const { return values[horizon][game.start]; }
  std::optional<T> value_at(StateId q, int remaining) const;

  // Finite-state strategy over (state, round) playing the stored one-round
  // optimum; optimal in the game when the report is exact.
  BehavioralStrategy strategy(Player player) const;
};

template <Scalar T>
SolveReport<T> backward_induction(const StageGame<T>& game,
                                  LayerScope scope = LayerScope::kExactTime,
                                  Execution exec = Execution::kParallel);

// Matrix or finite(n) spec.
template <Scalar T>
SolveReport<T> backward_induction(const GameSpec& spec, Execution exec = Execution::kParallel);

// Exact expectation of the payoff under mu_{sigma,tau}.
template <Scalar T>
T expected_payoff(const StageGame<T>& game, const BehavioralStrategy& sigma,
                  const BehavioralStrategy& tau);

template <Scalar T>
struct BestResponse {
  T value;                      // val(fixed in the game)
  BehavioralStrategy response;  // pure, for the other player
};

// Pure counterstrategy minimizing (fixed = player I) or maximizing
// (fixed = player II) the expected payoff. Ties go to the lowest move index.
template <Scalar T>
BestResponse<T> best_response(const StageGame<T>& game, const BehavioralStrategy& fixed);

}  // namespace bwgame

#endif  // BWGAME_FINITE_SOLVER_HPP_
