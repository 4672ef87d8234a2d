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

#ifndef BWGAME_EXAMPLES_HPP_
#define BWGAME_EXAMPLES_HPP_

#include <string>
#include <vector>

#include "bwgame/game_model.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame::examples {

// 3x3 matrix; the winner is paid one by the loser.
GameSpec scissors_paper_stone();

// Open game over {Stop, Continue}: a lone Stop pays 1, a joint Stop pays 0,
// continuing forever pays 0. States live, i_won, ii_won.
GameSpec stop_game();

// Player I in the stop-game: on round k, if play is still live, Stop with
// probability 1/(n-k+1). Table of depth n.
BehavioralStrategy stop_sigma(int n);

// Pure Continue for `player` in the stop-game.
BehavioralStrategy never_stop(Player player);

// Player I has the single move "wait"; player II picks 0 or 1. Pays 1 when
// II plays 1 infinitely often.
GameSpec inf_ones();

// Pays 1 when II plays 1 only finitely often: inf_ones under affine (-1, 1).
GameSpec fin_ones();

// Open set: pays 1 once II has played 1. II can avoid it forever.
GameSpec ii_plays_one();

// Names accepted by game_by_name.
std::vector<std::string> game_names();

// Throws Error for an unknown name.
GameSpec game_by_name(const std::string& name);

}  // namespace bwgame::examples

#endif  // BWGAME_EXAMPLES_HPP_
