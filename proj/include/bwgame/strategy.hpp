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

#ifndef BWGAME_STRATEGY_HPP_
#define BWGAME_STRATEGY_HPP_

#include <map>
#include <string>
#include <vector>

#include "bwgame/game_model.hpp"
#include "bwgame/rational.hpp"

namespace bwgame {

using Distribution = std::vector<Rational>;

// Observation automaton over joint moves with a distribution per state.
// A kNoState successor leaves the defined domain; from there on the owner
// plays uniformly.
struct StrategyMachine {
  std::vector<std::string> names;
  std::vector<Distribution> rows;
  std::vector<StateId> next;  // [state * |Z| + z]
  StateId start = 0;
};

// A behavioral (mixed) strategy: a distribution over the owner's moves at
// every position. Positions are relative to the start of the game being
// played. Stored rows are exactly stochastic: the factory functions accept
// rows summing to 1 within 1e-9 and renormalize them.
class BehavioralStrategy {
 public:
  enum class Form { kUniform, kTable, kMachine };

  static BehavioralStrategy uniform(Player owner, MoveAlphabets alphabets);
  static BehavioralStrategy from_table(Player owner, MoveAlphabets alphabets,
                                       std::map<Position, Distribution> table);
  static BehavioralStrategy from_machine(Player owner, MoveAlphabets alphabets,
                                         StrategyMachine machine);
  // Always plays `move`.
  static BehavioralStrategy pure(Player owner, MoveAlphabets alphabets, std::size_t move);

  Player owner() const { return owner_; }
  const MoveAlphabets& alphabets() const { return alphabets_; }
  std::size_t num_moves() const { return alphabets_.num_moves(owner_); }
  Form form() const { return form_; }
  const std::map<Position, Distribution>& table() const { return table_; }
  // Positions of length < depth() may carry table entries.
  std::size_t table_depth() const;

  // The compiled observation machine (tables compile to tries).
  const StrategyMachine& machine() const { return machine_; }
  StateId start() const { return machine_.start; }
  StateId next(StateId s, JointMove z) const {
    return s == kNoState ? kNoState : machine_.next[s * alphabets_.num_joint() + z];
  }
  StateId run(const Position& p) const;

  const Distribution& exact_row(StateId s) const {
    return s == kNoState ? uniform_exact_ : machine_.rows[s];
  }
  const std::vector<double>& approx_row(StateId s) const {
    return s == kNoState ? uniform_approx_ : approx_rows_[s];
  }
  template <Scalar T>
  const std::vector<T>& row(StateId s) const {
    if constexpr (is_exact_v<T>) {
      return exact_row(s);
    } else {
      return approx_row(s);
    }
  }

  const Distribution& distribution_at(const Position& p) const { return exact_row(run(p)); }

  bool operator==(const BehavioralStrategy& other) const;

 private:
  BehavioralStrategy(Player owner, MoveAlphabets alphabets, Form form);
  void finish();

  Player owner_ = Player::kOne;
  MoveAlphabets alphabets_;
  Form form_ = Form::kUniform;
  std::map<Position, Distribution> table_;
  StrategyMachine machine_;
  std::vector<std::vector<double>> approx_rows_;
  Distribution uniform_exact_;
  std::vector<double> uniform_approx_;
};

// Checks length and nonnegativity, requires |sum - 1| <= 1e-9, and returns
// the row divided by its sum. Throws Error("non-stochastic row ...").
Distribution normalize_row(const Distribution& row, std::size_t num_moves);

// mu_{sigma,tau}[p]: product over rounds of sigma(prefix)(x_i) * tau(prefix)(y_i).
template <Scalar T>
T measure_of_position(const BehavioralStrategy& sigma, const BehavioralStrategy& tau,
                      const Position& p);

}  // namespace bwgame

#endif  // BWGAME_STRATEGY_HPP_
