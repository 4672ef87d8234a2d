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

#ifndef BWGAME_AUTOMATON_OPS_HPP_
#define BWGAME_AUTOMATON_OPS_HPP_

#include <optional>
#include <vector>

#include "bwgame/game_model.hpp"

namespace bwgame {

// Product with the running supremum of u, so that the new label of a state
// is sup_j u over the prefix read so far. Returns the input unchanged when
// u is already nondecreasing along every reachable transition.
PayoffAutomaton running_sup(const PayoffAutomaton& a);

// Open-set payoff: accepting states become terminal with u = 1 (first
// visit absorbs), all others get u = 0.
PayoffAutomaton open_set_indicator(const PayoffAutomaton& a);

// Indicator automaton of the union of open sets: terminal "hit" state with
// u = 1 as soon as any component visits an accepting state.
PayoffAutomaton union_indicator(const std::vector<PayoffAutomaton>& components);

// Indicator automaton of "accepting states visited at least k times"
// (the start position counts as a visit).
PayoffAutomaton visit_count_indicator(const PayoffAutomaton& a, int k);

// sup of u over states reachable from each state (itself included).
std::vector<std::optional<Rational>> reachable_sup(const PayoffAutomaton& a);

// States from which every infinite run visits accepting states infinitely
// often: every cycle reachable from them passes through an accepting state.
std::vector<char> inevitably_recurrent(const PayoffAutomaton& a);

// True when the two indicator automata agree on "hit so far" for every
// position.
bool same_hit_language(const PayoffAutomaton& a, const PayoffAutomaton& b);

}  // namespace bwgame

#endif  // BWGAME_AUTOMATON_OPS_HPP_
