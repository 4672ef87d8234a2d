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

#ifndef BWGAME_TESTS_SUPPORT_ORACLES_HPP_
#define BWGAME_TESTS_SUPPORT_ORACLES_HPP_

// Reference computations that share no solver code with the library. They
// read specs and strategies through their public accessors only.

#include <vector>

#include "bwgame/game_model.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame::testing {

struct OracleSolution {
  Rational value;
  std::vector<Rational> row;  // player I
  std::vector<Rational> col;  // player II
};

// Exact matrix game value from a separate tableau simplex. The returned
// strategies are checked as a primal/dual certificate before returning;
// throws std::logic_error if the check fails.
OracleSolution lp_oracle(const std::vector<std::vector<Rational>>& a);

// 2x2 closed form: saddle point if any, else (ad - bc) / (a + d - b - c).
Rational closed_form_2x2(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

// max over x in {0, 1/steps, ..., 1} of min_j; for 2 x m matrices.
double grid_value_2xm(const std::vector<std::vector<double>>& a, int steps);

// Payoff of the full play p in a finite or matrix spec, read off the raw
// automaton (or matrix) including terminal absorption and the affine map.
Rational play_payoff(const GameSpec& spec, const Position& p);

// Value of a finite(2) game by enumerating pure strategies of the normal
// form (|X|^(1+|Z|) per player) and solving it with lp_oracle.
Rational normal_form_value(const GameSpec& spec);

// Backward induction over explicit positions of a finite spec.
Rational explicit_value(const GameSpec& spec);

// Value of the subgame after `from`, by the same recursion.
Rational explicit_value_at(const GameSpec& spec, const Position& from);

// min over II's replies of sigma's expected payoff, over explicit positions
// of the first n rounds of a finite spec.
Rational explicit_fixed_value(const GameSpec& spec, const BehavioralStrategy& sigma);

// Stop-game truncated after d rounds, written out from the rules of the
// game with no automaton.
Rational stop_game_truncated_value(int d);

}  // namespace bwgame::testing

#endif  // BWGAME_TESTS_SUPPORT_ORACLES_HPP_
