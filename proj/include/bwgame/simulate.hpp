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

#ifndef BWGAME_SIMULATE_HPP_
#define BWGAME_SIMULATE_HPP_

#include <cstdint>

#include "bwgame/game_model.hpp"
#include "bwgame/kernels.hpp"
#include "bwgame/strategy.hpp"

namespace bwgame {

struct SimulationResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t rollouts = 0;
};

// Monte Carlo estimate of the expected payoff. Rollout r draws from
// mt19937_64 seeded with rollout_seed(seed, r), so the result does not
// depend on the thread count. Open kinds are scored with the depth-round
// running sup; finite kinds need depth >= the remaining horizon.
SimulationResult simulate(const GameSpec& spec, const BehavioralStrategy& sigma,
                          const BehavioralStrategy& tau, std::uint64_t rollouts, int depth,
                          std::uint64_t seed, Execution exec = Execution::kParallel);

}  // namespace bwgame

#endif  // BWGAME_SIMULATE_HPP_
