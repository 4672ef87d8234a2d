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

#ifndef BWGAME_TRUNCATION_HPP_
#define BWGAME_TRUNCATION_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bwgame/game_model.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame {

// A stopset, described as the first positions meeting a condition. Each
// boundary position has a key naming its subgame: "<state>@<round>" for
// depth and state boundaries, the position itself ("(a,b) (c,d)") for
// explicit position sets.
class Boundary {
 public:
  enum class Type { kDepth, kStates, kPositions };

  static Boundary at_depth(int depth);
  // First visit to any of the named automaton states.
  static Boundary at_states(std::set<std::string> states);
  // Explicit positions; must form an antichain under the prefix order.
  static Boundary at_positions(std::vector<Position> positions);

  Type type() const { return type_; }
  int depth() const { return depth_; }
  const std::set<std::string>& states() const { return states_; }
  const std::vector<Position>& positions() const { return positions_; }

 private:
  Type type_ = Type::kDepth;
  int depth_ = 0;
  std::set<std::string> states_;
  std::vector<Position> positions_;
};

struct BoundaryPoint {
  std::string key;
  StateId state;      // automaton state of the finite spec
  int rounds_played;  // since the spec's start position
};

// Boundary subgames reachable within the horizon, sorted by key.
std::vector<BoundaryPoint> boundary_points(const GameSpec& spec, const Boundary& boundary);

// The finite spec cut at `boundary`: play is unchanged before it and stops
// at boundary positions paying boundary_values[key]. Throws Error for a
// non-antichain boundary, a missing or out-of-bounds value, or a spec that
// is not finite.
GameSpec truncate(const GameSpec& spec, const Boundary& boundary,
                  const std::map<std::string, Rational>& boundary_values);

// Strategy that follows `outer` before the boundary and, once a boundary
// position with key k is reached, plays at_boundary[k] in the subgame
// started there (uniform if no strategy is given for k). Throws Error if a
// table-form `outer` defines positions at or after the boundary, or a key
// is not a boundary key.
BehavioralStrategy stitch_strategies(const GameSpec& spec, const Boundary& boundary,
                                     const BehavioralStrategy& outer,
                                     const std::map<std::string, BehavioralStrategy>& at_boundary);

}  // namespace bwgame

#endif  // BWGAME_TRUNCATION_HPP_
