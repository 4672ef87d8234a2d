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

#include "bwgame/simulate.hpp"

#include <cmath>
#include <string>

namespace bwgame {

SimulationResult simulate(const GameSpec& spec, const BehavioralStrategy& sigma,
                          const BehavioralStrategy& tau, std::uint64_t rollouts, int depth,
                          std::uint64_t seed, Execution exec) {
  if (rollouts < 1) throw Error("rollouts must be at least 1");
  if (depth < 0) throw Error("depth must be nonnegative");
  if (sigma.owner() != Player::kOne || tau.owner() != Player::kTwo) {
    throw Error("simulate needs a strategy for player I and one for player II");
  }
  if (!(sigma.alphabets() == spec.alphabets) || !(tau.alphabets() == spec.alphabets)) {
    throw Error("strategy move alphabets do not match the game");
  }
  const StageGame<double> game = compile_for_play<double>(spec, depth);
  if (spec.is_finite_kind() && depth < game.horizon) {
    throw Error("depth " + std::to_string(depth) + " does not cover the game length " +
                std::to_string(game.horizon));
  }
  const auto payoffs = rollout_payoffs(game, sigma, tau, rollouts, seed, exec);
  // Serial reduction keeps the result independent of the thread count.
  double sum = 0.0;
  for (double v : payoffs) sum += v;
  const double n = static_cast<double>(rollouts);
  SimulationResult out;
  out.rollouts = rollouts;
  out.mean = sum / n;
  if (rollouts > 1) {
    double ss = 0.0;
    for (double v : payoffs) ss += (v - out.mean) * (v - out.mean);
    out.std_error = std::sqrt(ss / (n - 1.0) / n);
  }
  return out;
}

}  // namespace bwgame
