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

#ifndef BWGAME_STAGE_GAME_HPP_
#define BWGAME_STAGE_GAME_HPP_

#include <string>
#include <vector>

#include "bwgame/game_model.hpp"
#include "bwgame/rational.hpp"

namespace bwgame {

// The form every solver consumes: a finite game over automaton states.
// Play starts at `start`, lasts `horizon` rounds or until a terminal state
// is entered, and pays `payoff[q]` for the state q where it ends.
template <Scalar T>
struct StageGame {
  MoveAlphabets alphabets;
  std::vector<std::string> state_names;
  std::vector<StateId> next;  // [q * |Z| + z]
  std::vector<char> terminal;
  std::vector<T> payoff;
  std::vector<char> has_payoff;
  StateId start = 0;
  int horizon = 0;

  std::size_t num_states() const { return state_names.size(); }
  StateId step(StateId q, JointMove z) const { return next[q * alphabets.num_joint() + z]; }
  StateId find(std::string_view name) const;
  const T& payoff_at(StateId q) const;  // throws Error if unlabeled
};

// Payoff = scale * u + offset over the automaton labels.
template <Scalar T>
StageGame<T> make_stage_game(const MoveAlphabets& alphabets, const PayoffAutomaton& a,
                             StateId start, int horizon, const Rational& scale,
                             const Rational& offset);

// Matrix and finite(n) specs.
template <Scalar T>
StageGame<T> compile_finite(const GameSpec& spec);

enum class TruncationSide {
  kRunningSup,    // f_d = sup of u over the first d rounds
  kReachableSup,  // max(f_d, sup of u over states still reachable)
};

// Depth-d truncation of a generalized-open, open-set or union spec.
template <Scalar T>
StageGame<T> truncated_game(const GameSpec& spec, int depth, TruncationSide side);

// The finite game actually played: finite kinds as they are, open kinds
// truncated to f_depth. G-delta specs have no finite truncation.
template <Scalar T>
StageGame<T> compile_for_play(const GameSpec& spec, int depth);

// The descriptor automaton of an open kind with u = the payoff function
// whose running supremum is f (running_sup already applied).
PayoffAutomaton open_payoff_automaton(const GameSpec& spec);

}  // namespace bwgame

#endif  // BWGAME_STAGE_GAME_HPP_
