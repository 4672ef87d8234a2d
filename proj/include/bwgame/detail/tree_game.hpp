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

#ifndef BWGAME_DETAIL_TREE_GAME_HPP_
#define BWGAME_DETAIL_TREE_GAME_HPP_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace bwgame {

template <class PayoffFn>
GameSpec tree_game(std::string name, const MoveAlphabets& alphabets, int n, PayoffFn payoff) {
  if (n < 0) throw Error("tree game length must be nonnegative");
  const std::size_t nz = alphabets.num_joint();
  std::vector<StateLabel> states;
  std::vector<StateId> transitions;
  // Level-order numbering: children of node k at level l are contiguous.
  std::vector<Position> frontier{Position{}};
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (int level = 0; level <= n; ++level) {
    std::vector<Position> next_frontier;
    const StateId first_child = static_cast<StateId>(states.size() + frontier.size());
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      StateLabel label;
      label.name = "t" + std::to_string(states.size());
      if (level == n) {
        Rational value = payoff(frontier[k]);
        lo = lo ? std::min(*lo, value) : value;
        hi = hi ? std::max(*hi, value) : value;
        label.u = std::move(value);
        label.terminal = true;
        for (std::size_t z = 0; z < nz; ++z) transitions.push_back(kNoState);
      } else {
        for (std::size_t z = 0; z < nz; ++z) {
          transitions.push_back(static_cast<StateId>(first_child + k * nz + z));
          next_frontier.push_back(frontier[k].extended(static_cast<JointMove>(z)));
        }
      }
      states.push_back(std::move(label));
    }
    frontier = std::move(next_frontier);
  }
  GameSpec spec;
  spec.name = std::move(name);
  spec.alphabets = alphabets;
  spec.kind = GameKind::kFinite;
  spec.horizon = n;
  spec.automata.emplace_back("payoff", nz, std::move(states), 0, std::move(transitions));
  spec.bounds = PayoffBounds{*lo, *hi};
  return spec;
}

}  // namespace bwgame

#endif  // BWGAME_DETAIL_TREE_GAME_HPP_
