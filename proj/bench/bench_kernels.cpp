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

// Serial against OpenMP layers of backward induction and Monte Carlo
// rollouts. Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "bwgame/finite_solver.hpp"
#include "bwgame/kernels.hpp"

namespace {

using bwgame::Execution;

// Random finite game on a 4x4 alphabet: a tree of depth n with payoffs in [0, 1].
bwgame::GameSpec random_tree(int n) {
  bwgame::MoveAlphabets al({"a", "b", "c", "d"}, {"w", "x", "y", "z"});
  std::mt19937_64 gen(1234);
  std::uniform_int_distribution<int> pick(0, 100);
  return bwgame::tree_game("bench", al, n, [&](const bwgame::Position&) {
    return bwgame::Rational(pick(gen), 100);
  });
}

void BM_BackwardInduction(benchmark::State& state, Execution exec) {
  const auto spec = random_tree(static_cast<int>(state.range(0)));
  const auto game = bwgame::compile_finite<double>(spec);
  for (auto _ : state) {
    auto report = bwgame::backward_induction(game, bwgame::LayerScope::kExactTime, exec);
    benchmark::DoNotOptimize(report.value());
  }
  state.counters["states"] = static_cast<double>(game.num_states());
}

void BM_Rollouts(benchmark::State& state, Execution exec) {
  const auto spec = random_tree(4);
  const auto game = bwgame::compile_finite<double>(spec);
  const auto sigma = bwgame::BehavioralStrategy::uniform(bwgame::Player::kOne, spec.alphabets);
  const auto tau = bwgame::BehavioralStrategy::uniform(bwgame::Player::kTwo, spec.alphabets);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto payoffs = bwgame::rollout_payoffs(game, sigma, tau, n, 7, exec);
    benchmark::DoNotOptimize(payoffs.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

}  // namespace

BENCHMARK_CAPTURE(BM_BackwardInduction, serial, Execution::kSerial)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_BackwardInduction, parallel, Execution::kParallel)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_Rollouts, serial, Execution::kSerial)->Arg(100000);
BENCHMARK_CAPTURE(BM_Rollouts, parallel, Execution::kParallel)->Arg(100000);

BENCHMARK_MAIN();
