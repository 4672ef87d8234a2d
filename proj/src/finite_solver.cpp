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

#include "bwgame/finite_solver.hpp"

#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>

namespace bwgame {
namespace {

struct Key4 {
  StateId q, a, b;
  int k;
  bool operator==(const Key4&) const = default;
};

struct Key4Hash {
  std::size_t operator()(const Key4& key) const {
    std::uint64_t h = key.q;
    h = h * 0x100000001B3ULL ^ key.a;
    h = h * 0x100000001B3ULL ^ key.b;
    h = h * 0x100000001B3ULL ^ static_cast<std::uint32_t>(key.k);
    return std::hash<std::uint64_t>{}(h);
  }
};

template <Scalar T>
void check_strategy(const StageGame<T>& game, const BehavioralStrategy& s, Player expected) {
  if (s.owner() != expected) {
    throw Error("expected a strategy for player " + std::string(player_name(expected)) +
                ", got one for player " + std::string(player_name(s.owner())));
  }
  if (!(s.alphabets() == game.alphabets)) {
    throw Error("strategy move alphabets do not match the game");
  }
}

}  // namespace

template <Scalar T>
std::optional<T> SolveReport<T>::value_at(StateId q, int remaining) const {
  if (remaining < 0 || remaining > horizon || q >= game.num_states() || !defined[remaining][q]) {
    return std::nullopt;
  }
  return values[remaining][q];
}

template <Scalar T>
BehavioralStrategy SolveReport<T>::strategy(Player player) const {
  const auto& al = game.alphabets;
  const std::size_t nz = al.num_joint();
  const std::size_t moves = al.num_moves(player);
  StrategyMachine m;
  std::map<std::pair<StateId, int>, StateId> index;
  std::deque<std::pair<StateId, int>> queue;
  auto intern = [&](StateId q, int t) {
    auto [it, inserted] = index.emplace(std::pair{q, t}, static_cast<StateId>(m.names.size()));
    if (inserted) {
      m.names.push_back(game.state_names[q] + "@" + std::to_string(t));
      m.rows.emplace_back();
      m.next.insert(m.next.end(), nz, kNoState);
      queue.emplace_back(q, t);
    }
    return it->second;
  };
  m.start = intern(game.start, 0);
  while (!queue.empty()) {
    auto [q, t] = queue.front();
    queue.pop_front();
    const StateId id = index.at({q, t});
    const int k = horizon - t;
    if (t >= horizon || game.terminal[q] || !defined[k][q]) {
      m.rows[id].assign(moves, Rational(1, static_cast<long>(moves)));
      continue;
    }
    const auto& row = player == Player::kOne ? row_strategy[k][q] : col_strategy[k][q];
    for (const auto& p : row) m.rows[id].push_back(as_rational(p));
    for (std::size_t z = 0; z < nz; ++z) {
      StateId child = intern(game.step(q, static_cast<JointMove>(z)), t + 1);
      m.next[id * nz + z] = child;
    }
  }
  return BehavioralStrategy::from_machine(player, al, std::move(m));
}

template <Scalar T>
SolveReport<T> backward_induction(const StageGame<T>& game, LayerScope scope, Execution exec) {
  const int n = game.horizon;
  if (n < 0) throw Error("negative horizon");
  const std::size_t nq = game.num_states();
  const std::size_t nz = game.alphabets.num_joint();

  std::vector<std::vector<StateId>> need(static_cast<std::size_t>(n) + 1);
  auto successors = [&](const std::vector<char>& from) {
    std::vector<char> to(nq, 0);
    for (StateId q = 0; q < nq; ++q) {
      if (!from[q]) continue;
      for (std::size_t z = 0; z < nz; ++z) to[game.step(q, static_cast<JointMove>(z))] = 1;
    }
    return to;
  };
  auto listed = [&](const std::vector<char>& mask) {
    std::vector<StateId> out;
    for (StateId q = 0; q < nq; ++q) {
      if (mask[q]) out.push_back(q);
    }
    return out;
  };
  std::vector<char> layer(nq, 0);
  layer[game.start] = 1;
  if (scope == LayerScope::kExactTime) {
    for (int t = 0; t <= n; ++t) {
      need[static_cast<std::size_t>(n - t)] = listed(layer);
      layer = successors(layer);
    }
  } else {
    for (bool changed = true; changed;) {
      auto more = successors(layer);
      changed = false;
      for (StateId q = 0; q < nq; ++q) {
        if (more[q] && !layer[q]) {
          layer[q] = 1;
          changed = true;
        }
      }
    }
    for (auto& v : need) v = listed(layer);
  }
  for (int k = 0; k <= n; ++k) {
    for (StateId q : need[static_cast<std::size_t>(k)]) {
      if (k == 0 || game.terminal[q]) (void)game.payoff_at(q);
    }
  }

  SolveReport<T> report;
  report.game = game;
  report.horizon = n;
  report.values.assign(static_cast<std::size_t>(n) + 1, std::vector<T>(nq, T(0)));
  report.defined.assign(static_cast<std::size_t>(n) + 1, std::vector<char>(nq, 0));
  report.row_strategy.assign(static_cast<std::size_t>(n) + 1, std::vector<std::vector<T>>(nq));
  report.col_strategy.assign(static_cast<std::size_t>(n) + 1, std::vector<std::vector<T>>(nq));
  for (StateId q : need[0]) {
    report.values[0][q] = game.payoff[q];
    report.defined[0][q] = 1;
  }
  for (int k = 1; k <= n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    backward_layer(game, std::span<const StateId>(need[kk]), report.values[kk - 1],
                   report.values[kk], &report.row_strategy[kk], &report.col_strategy[kk], exec);
    for (StateId q : need[kk]) report.defined[kk][q] = 1;
  }
  return report;
}

template <Scalar T>
SolveReport<T> backward_induction(const GameSpec& spec, Execution exec) {
  return backward_induction(compile_finite<T>(spec), LayerScope::kExactTime, exec);
}

template <Scalar T>
T expected_payoff(const StageGame<T>& game, const BehavioralStrategy& sigma,
                  const BehavioralStrategy& tau) {
  check_strategy(game, sigma, Player::kOne);
  check_strategy(game, tau, Player::kTwo);
  const auto& al = game.alphabets;
  std::unordered_map<Key4, T, Key4Hash> memo;
  auto eval = [&](auto&& self, StateId q, StateId a, StateId b, int k) -> T {
    if (game.terminal[q] || k == 0) return game.payoff_at(q);
    Key4 key{q, a, b, k};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto& ra = sigma.row<T>(a);
    const auto& rb = tau.row<T>(b);
    T total(0);
    for (std::size_t x = 0; x < al.num_x(); ++x) {
      if (ra[x] == T(0)) continue;
      for (std::size_t y = 0; y < al.num_y(); ++y) {
        if (rb[y] == T(0)) continue;
        JointMove z = al.joint(x, y);
        total += ra[x] * rb[y] * self(self, game.step(q, z), sigma.next(a, z), tau.next(b, z), k - 1);
      }
    }
    memo.emplace(key, total);
    return total;
  };
  return eval(eval, game.start, sigma.start(), tau.start(), game.horizon);
}

template <Scalar T>
BestResponse<T> best_response(const StageGame<T>& game, const BehavioralStrategy& fixed) {
  if (!(fixed.alphabets() == game.alphabets)) {
    throw Error("strategy move alphabets do not match the game");
  }
  const auto& al = game.alphabets;
  const Player owner = fixed.owner();
  const Player responder = opponent(owner);
  const bool minimize = owner == Player::kOne;
  const std::size_t own_moves = al.num_moves(owner);
  const std::size_t reply_moves = al.num_moves(responder);
  auto joint = [&](std::size_t own, std::size_t reply) {
    return owner == Player::kOne ? al.joint(own, reply) : al.joint(reply, own);
  };

  struct Entry {
    T value;
    std::size_t move;
  };
  std::unordered_map<Key4, Entry, Key4Hash> memo;
  auto solve = [&](auto&& self, StateId q, StateId s, int k) -> T {
    if (game.terminal[q] || k == 0) return game.payoff_at(q);
    Key4 key{q, s, 0, k};
    if (auto it = memo.find(key); it != memo.end()) return it->second.value;
    const auto& row = fixed.row<T>(s);
    std::optional<T> best;
    std::size_t best_move = 0;
    for (std::size_t r = 0; r < reply_moves; ++r) {
      T total(0);
      for (std::size_t f = 0; f < own_moves; ++f) {
        if (row[f] == T(0)) continue;
        JointMove z = joint(f, r);
        total += row[f] * self(self, game.step(q, z), fixed.next(s, z), k - 1);
      }
      if (!best || (minimize ? total < *best : total > *best)) {
        best = total;
        best_move = r;
      }
    }
    memo.emplace(key, Entry{*best, best_move});
    return *best;
  };
  T value = solve(solve, game.start, fixed.start(), game.horizon);

  // The pure response as a machine over the reachable (state, fixed state, round).
  const std::size_t nz = al.num_joint();
  StrategyMachine m;
  std::map<std::tuple<StateId, StateId, int>, StateId> index;
  std::deque<std::tuple<StateId, StateId, int>> queue;
  auto intern = [&](StateId q, StateId s, int t) {
    auto [it, inserted] =
        index.emplace(std::tuple{q, s, t}, static_cast<StateId>(m.names.size()));
    if (inserted) {
      m.names.push_back("b" + std::to_string(it->second));
      m.rows.emplace_back(reply_moves, Rational(1, static_cast<long>(reply_moves)));
      m.next.insert(m.next.end(), nz, kNoState);
      queue.emplace_back(q, s, t);
    }
    return it->second;
  };
  m.start = intern(game.start, fixed.start(), 0);
  while (!queue.empty()) {
    auto [q, s, t] = queue.front();
    queue.pop_front();
    const StateId id = index.at({q, s, t});
    if (game.terminal[q] || t >= game.horizon) continue;
    const auto& entry = memo.at(Key4{q, s, 0, game.horizon - t});
    auto& row = m.rows[id];
    std::fill(row.begin(), row.end(), Rational(0));
    row[entry.move] = 1;
    const auto& fixed_row = fixed.row<T>(s);
    for (std::size_t f = 0; f < own_moves; ++f) {
      if (fixed_row[f] == T(0)) continue;
      JointMove z = joint(f, entry.move);
      m.next[id * nz + z] = intern(game.step(q, z), fixed.next(s, z), t + 1);
    }
  }
  return BestResponse<T>{value, BehavioralStrategy::from_machine(responder, al, std::move(m))};
}

#define BWGAME_INSTANTIATE(T)                                                                   \
  template struct SolveReport<T>;                                                               \
  template SolveReport<T> backward_induction<T>(const StageGame<T>&, LayerScope, Execution);    \
  template SolveReport<T> backward_induction<T>(const GameSpec&, Execution);                    \
  template T expected_payoff<T>(const StageGame<T>&, const BehavioralStrategy&,                 \
                                const BehavioralStrategy&);                                     \
  template BestResponse<T> best_response<T>(const StageGame<T>&, const BehavioralStrategy&);

BWGAME_INSTANTIATE(double)
BWGAME_INSTANTIATE(Rational)

#undef BWGAME_INSTANTIATE

}  // namespace bwgame
