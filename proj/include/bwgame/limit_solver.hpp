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

#ifndef BWGAME_LIMIT_SOLVER_HPP_
#define BWGAME_LIMIT_SOLVER_HPP_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "bwgame/game_model.hpp"
#include "bwgame/kernels.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame {

template <Scalar T>
struct ValueBracket {
  T lower;
  T upper;
  int depth = 0;
};

enum class Verdict {
  kCertified,   // upper - lower <= tol
  kStabilized,  // convergent side moved less than tol over 3 depths; an estimate only
  kOpen,
};

std::string_view verdict_name(Verdict v);

template <Scalar T>
struct BracketTrace {
  std::vector<ValueBracket<T>> brackets;  // index = depth
  // Depth-d value of the side that converges to the true value.
  std::vector<T> estimates;
  int k_max = 0;               // g-delta only
  std::vector<T> k_uppers;     // [k-1], certified upper of O_k at the final depth
  std::vector<T> k_estimates;  // [k-1], estimate of O_k at the final depth
  Verdict verdict = Verdict::kOpen;

  const ValueBracket<T>& last() const { return brackets.back(); }
};

struct BracketOptions {
  double tol = 1e-6;
  int k_max = 8;
  Execution exec = Execution::kParallel;
};

// Brackets val(Γ(f)) for generalized-open and open-set specs, depth 0..max_depth.
template <Scalar T>
BracketTrace<T> open_value_bracket(const GameSpec& spec, int max_depth,
                                   const BracketOptions& options = {});

template <Scalar T>
struct UnionTrace {
  std::vector<BracketTrace<T>> traces;  // [j-1], union of the first j sets
  std::vector<T> estimates;             // [j-1], final-depth estimate
  // [j-1], false when adding set j left the union's hit language unchanged.
  std::vector<char> automaton_changed;
};

template <Scalar T>
UnionTrace<T> union_value_limit(const std::vector<GameSpec>& specs, int depth,
                                const BracketOptions& options = {});

template <Scalar T>
BracketTrace<T> gdelta_value_bracket(const GameSpec& spec, int depth,
                                     const BracketOptions& options = {});

// Value of the subgame at automaton state `state` with `remaining` rounds
// left, or nullopt when unknown.
template <Scalar T>
using ValueOracle = std::function<std::optional<T>(std::string_view state, int remaining)>;

// Plays, at each position before `depth`, the one-round minimax
// distribution of the matrix of children's oracle values. Terminal
// children use their own payoff label.
template <Scalar T>
BehavioralStrategy locally_optimal_strategy(const GameSpec& spec, const ValueOracle<T>& oracle,
                                            int depth, Player player);

}  // namespace bwgame

#endif  // BWGAME_LIMIT_SOLVER_HPP_
