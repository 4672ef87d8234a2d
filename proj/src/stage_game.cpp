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

#include "bwgame/stage_game.hpp"

#include "bwgame/automaton_ops.hpp"

namespace bwgame {

template <Scalar T>
StateId StageGame<T>::find(std::string_view name) const {
  for (StateId q = 0; q < state_names.size(); ++q) {
    if (state_names[q] == name) return q;
  }
  return kNoState;
}

template <Scalar T>
const T& StageGame<T>::payoff_at(StateId q) const {
  if (!has_payoff[q]) {
    throw Error("missing payoff label at horizon for state '" + state_names[q] + "'");
  }
  return payoff[q];
}

template <Scalar T>
StageGame<T> make_stage_game(const MoveAlphabets& alphabets, const PayoffAutomaton& a,
                             StateId start, int horizon, const Rational& scale,
                             const Rational& offset) {
  if (a.num_joint() != alphabets.num_joint()) throw Error("automaton alphabet mismatch");
  StageGame<T> g;
  g.alphabets = alphabets;
  g.next = a.transitions();
  g.start = start;
  g.horizon = horizon;
  for (const auto& s : a.states()) {
    g.state_names.push_back(s.name);
    g.terminal.push_back(s.terminal);
    g.has_payoff.push_back(s.u.has_value());
    g.payoff.push_back(s.u ? from_rational<T>(scale * *s.u + offset) : T(0));
  }
  return g;
}

template <Scalar T>
StageGame<T> compile_finite(const GameSpec& spec) {
  if (!spec.is_finite_kind()) {
    throw Error("game '" + spec.name + "' is " + std::string(kind_name(spec.kind)) +
                ", not a finite game");
  }
  const GameSpec finite = spec.kind == GameKind::kMatrix ? matrix_as_finite(spec) : spec;
  const auto& a = finite.automaton();
  const int horizon = finite.horizon - static_cast<int>(finite.start_position.length());
  if (horizon < 0) throw Error("start position beyond the horizon");
  return make_stage_game<T>(finite.alphabets, a, a.run(finite.start_position), horizon,
                            finite.scale, finite.offset);
}

PayoffAutomaton open_payoff_automaton(const GameSpec& spec) {
  switch (spec.kind) {
    case GameKind::kGeneralizedOpen: return running_sup(spec.automaton());
    case GameKind::kOpenSet: return open_set_indicator(spec.automaton());
    case GameKind::kUnion: {
      std::vector<PayoffAutomaton> parts;
      for (const auto& a : spec.automata) parts.push_back(open_set_indicator(a));
      return union_indicator(parts);
    }
    default:
      throw Error("game '" + spec.name + "' is " + std::string(kind_name(spec.kind)) +
                  ", not an open game");
  }
}

template <Scalar T>
StageGame<T> truncated_game(const GameSpec& spec, int depth, TruncationSide side) {
  if (depth < 0) throw Error("depth must be nonnegative");
  PayoffAutomaton a = open_payoff_automaton(spec);
  if (side == TruncationSide::kReachableSup) {
    auto sup = reachable_sup(a);
    auto states = a.states();
    for (StateId q = 0; q < states.size(); ++q) states[q].u = sup[q];
    a = PayoffAutomaton(a.name(), a.num_joint(), std::move(states), a.start(), a.transitions());
  }
  return make_stage_game<T>(spec.alphabets, a, a.run(spec.start_position), depth, spec.scale,
                            spec.offset);
}

template <Scalar T>
StageGame<T> compile_for_play(const GameSpec& spec, int depth) {
  if (spec.is_finite_kind()) return compile_finite<T>(spec);
  if (spec.kind == GameKind::kGDelta) {
    throw Error("g-delta games have no finite truncation to play; use bracket");
  }
  return truncated_game<T>(spec, depth, TruncationSide::kRunningSup);
}

#define BWGAME_INSTANTIATE(T)                                                                  \
  template struct StageGame<T>;                                                                \
  template StageGame<T> make_stage_game<T>(const MoveAlphabets&, const PayoffAutomaton&,       \
                                           StateId, int, const Rational&, const Rational&);   \
  template StageGame<T> compile_finite<T>(const GameSpec&);                                    \
  template StageGame<T> truncated_game<T>(const GameSpec&, int, TruncationSide);               \
  template StageGame<T> compile_for_play<T>(const GameSpec&, int);

BWGAME_INSTANTIATE(double)
BWGAME_INSTANTIATE(Rational)

#undef BWGAME_INSTANTIATE

}  // namespace bwgame
