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

#ifndef BWGAME_SPEC_FORMAT_HPP_
#define BWGAME_SPEC_FORMAT_HPP_

#include <string>
#include <string_view>

#include "bwgame/game_model.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame {

// A parse or validation failure at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  // The message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

// Game documents (.bwg). Line oriented, '#' starts a comment:
//
//   game "<name>"
//   moves I = {a, b}
//   moves II = {c, d}
//   kind = matrix | finite <n> | generalized-open | open-set | gdelta | union
//   bounds = [lo, hi]          optional; defaults to the payoff range
//   affine = s, c              optional; payoff s*f + c
//   start = (a,c) (b,d)        optional start position, "e" when empty
//   matrix:                    matrix kind; one row of numbers per line
//     1 0
//     0 1
//   dfa "<name>" {             other kinds; union takes one block per set
//     start q
//     state q u=0 [accepting] [terminal]
//     q (a,c) -> r             '*' matches any move; the most specific rule wins
//   }
//
// Numbers are integers, decimals or fractions and are read exactly.
GameSpec parse_game(std::string_view text);

// Strategy documents (.bws), resolved against the game's move alphabets:
//
//   strategy I | II
//   uniform
// or
//   start s
//   state s play {a: 1/3, b: 2/3}
//   s (a,c) -> t               missing transitions lead to uniform play
// or
//   at e play {a: 1, b: 0}
//   at (a,c) play {...}
BehavioralStrategy parse_strategy(std::string_view text, const MoveAlphabets& alphabets);

// Canonical text: states sorted by name, transitions expanded, numbers exact.
std::string serialize(const GameSpec& spec);
std::string serialize(const BehavioralStrategy& strategy);

}  // namespace bwgame

#endif  // BWGAME_SPEC_FORMAT_HPP_
