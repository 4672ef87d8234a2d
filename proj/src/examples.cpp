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

#include "bwgame/examples.hpp"

namespace bwgame::examples {

namespace {

const MoveAlphabets& stop_alphabets() {
  static const MoveAlphabets al({"Stop", "Continue"}, {"Stop", "Continue"});
  return al;
}

const MoveAlphabets& ones_alphabets() {
  static const MoveAlphabets al({"wait"}, {"0", "1"});
  return al;
}

PayoffAutomaton ones_automaton() {
  std::vector<StateLabel> states{{"zero", std::nullopt, false, false},
                                 {"one", std::nullopt, true, false}};
  // [state * |Z| + z] with z = (wait,0), (wait,1).
  return PayoffAutomaton("ones", 2, std::move(states), 0, {0, 1, 0, 1});
}

}  // namespace

GameSpec scissors_paper_stone() {
  GameSpec spec;
  spec.name = "sps";
  spec.alphabets = MoveAlphabets({"scissors", "paper", "stone"}, {"scissors", "paper", "stone"});
  spec.kind = GameKind::kMatrix;
  spec.horizon = 1;
  const Rational w(1), d(0), l(-1);
  spec.matrix = {{d, w, l}, {l, d, w}, {w, l, d}};
  spec.bounds = {l, w};
  spec.validate();
  return spec;
}

GameSpec stop_game() {
  const auto& al = stop_alphabets();
  std::vector<StateLabel> states{{"live", Rational(0), false, false},
                                 {"i_won", Rational(1), false, true},
                                 {"ii_won", Rational(0), false, true}};
  const StateId live = 0, i_won = 1, ii_won = 2;
  std::vector<StateId> next(states.size() * al.num_joint());
  for (StateId q = 0; q < states.size(); ++q) {
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        StateId t = q;
        if (q == live) {
          const bool sx = x == 0, sy = y == 0;
          t = sx && sy ? ii_won : (sx || sy ? i_won : live);
        }
        next[q * al.num_joint() + al.joint(x, y)] = t;
      }
    }
  }
  GameSpec spec;
  spec.name = "stopgame";
  spec.alphabets = al;
  spec.kind = GameKind::kGeneralizedOpen;
  spec.automata = {PayoffAutomaton("stop", al.num_joint(), std::move(states), live, std::move(next))};
  spec.bounds = {Rational(0), Rational(1)};
  spec.validate();
  return spec;
}

BehavioralStrategy stop_sigma(int n) {
  if (n < 1) throw Error("stop_sigma needs n >= 1");
  const auto& al = stop_alphabets();
  const JointMove cc = al.joint(1, 1);
  std::map<Position, Distribution> table;
  Position p;
  for (int k = 1; k <= n; ++k) {
    Rational stop(1, n - k + 1);
    table.emplace(p, Distribution{stop, Rational(1 - stop)});
    p = p.extended(cc);
  }
  return BehavioralStrategy::from_table(Player::kOne, al, std::move(table));
}

BehavioralStrategy never_stop(Player player) {
  return BehavioralStrategy::pure(player, stop_alphabets(), 1);
}

GameSpec inf_ones() {
  GameSpec spec;
  spec.name = "inf-ones";
  spec.alphabets = ones_alphabets();
  spec.kind = GameKind::kGDelta;
  spec.automata = {ones_automaton()};
  spec.bounds = {Rational(0), Rational(1)};
  spec.validate();
  return spec;
}

GameSpec fin_ones() {
  GameSpec spec = inf_ones();
  spec.name = "fin-ones";
  spec.scale = Rational(-1);
  spec.offset = Rational(1);
  spec.validate();
  return spec;
}

GameSpec ii_plays_one() {
  GameSpec spec = inf_ones();
  spec.name = "ii-plays-one";
  spec.kind = GameKind::kOpenSet;
  spec.validate();
  return spec;
}

std::vector<std::string> game_names() {
  return {"sps", "stopgame", "inf-ones", "fin-ones", "ii-plays-one"};
}

GameSpec game_by_name(const std::string& name) {
  if (name == "sps") return scissors_paper_stone();
  if (name == "stopgame") return stop_game();
  if (name == "inf-ones") return inf_ones();
  if (name == "fin-ones") return fin_ones();
  if (name == "ii-plays-one") return ii_plays_one();
  throw Error("unknown example '" + name + "'");
}

}  // namespace bwgame::examples
