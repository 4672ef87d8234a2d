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

#include "bwgame/limit_solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "bwgame/automaton_ops.hpp"
#include "bwgame/finite_solver.hpp"
#include "bwgame/matrix_solver.hpp"

namespace bwgame {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCertified: return "certified";
    case Verdict::kStabilized: return "stabilized estimate";
    case Verdict::kOpen: return "open";
  }
  return "open";
}

namespace {

template <Scalar T>
void settle_verdict(BracketTrace<T>& trace, double tol) {
  const auto& last = trace.last();
  if (as_double(last.upper) - as_double(last.lower) <= tol) {
    trace.verdict = Verdict::kCertified;
    return;
  }
  const auto& e = trace.estimates;
  if (e.size() >= 4) {
    bool stable = true;
    for (std::size_t i = e.size() - 3; i < e.size(); ++i) {
      stable = stable && std::abs(as_double(e[i]) - as_double(e[i - 1])) < tol;
    }
    if (stable) {
      trace.verdict = Verdict::kStabilized;
      return;
    }
  }
  trace.verdict = Verdict::kOpen;
}

void check_depth(int depth) {
  if (depth < 0) throw Error("depth must be nonnegative");
}

}  // namespace

template <Scalar T>
BracketTrace<T> open_value_bracket(const GameSpec& spec, int max_depth,
                                   const BracketOptions& options) {
  if (spec.kind != GameKind::kGeneralizedOpen && spec.kind != GameKind::kOpenSet &&
      spec.kind != GameKind::kUnion) {
    throw Error("game '" + spec.name + "' is " + std::string(kind_name(spec.kind)) +
                ", not an open game");
  }
  check_depth(max_depth);
  spec.validate();
  // A negative scale turns the running-sup truncation into an upper bound.
  const bool flipped = spec.scale < 0;
  auto running = truncated_game<T>(spec, max_depth, TruncationSide::kRunningSup);
  auto reachable = truncated_game<T>(spec, max_depth, TruncationSide::kReachableSup);
  auto conv = backward_induction(running, LayerScope::kStationary, options.exec);
  auto cert = backward_induction(reachable, LayerScope::kStationary, options.exec);

  BracketTrace<T> trace;
  for (int d = 0; d <= max_depth; ++d) {
    const T& c = conv.values[static_cast<std::size_t>(d)][running.start];
    const T& r = cert.values[static_cast<std::size_t>(d)][reachable.start];
    trace.brackets.push_back(flipped ? ValueBracket<T>{r, c, d} : ValueBracket<T>{c, r, d});
    trace.estimates.push_back(c);
  }
  settle_verdict(trace, options.tol);
  return trace;
}

template <Scalar T>
UnionTrace<T> union_value_limit(const std::vector<GameSpec>& specs, int depth,
                                const BracketOptions& options) {
  if (specs.empty()) throw Error("union of zero open sets");
  check_depth(depth);
  const GameSpec& first = specs.front();
  for (const auto& s : specs) {
    if (s.kind != GameKind::kOpenSet) {
      throw Error("union: game '" + s.name + "' is " + std::string(kind_name(s.kind)) +
                  ", not open-set");
    }
    if (!(s.alphabets == first.alphabets)) {
      throw Error("union: alphabet mismatch between '" + first.name + "' and '" + s.name + "'");
    }
    if (s.scale != first.scale || s.offset != first.offset ||
        s.start_position != first.start_position) {
      throw Error("union: '" + s.name + "' differs from '" + first.name +
                  "' in affine transform or start position");
    }
  }
  UnionTrace<T> out;
  GameSpec u = first;
  u.kind = GameKind::kUnion;
  u.automata.clear();
  std::optional<PayoffAutomaton> previous;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    u.automata.push_back(specs[j].automaton());
    u.name = first.name + "_union" + std::to_string(j + 1);
    PayoffAutomaton current = open_payoff_automaton(u);
    out.automaton_changed.push_back(!previous || !same_hit_language(*previous, current));
    previous = std::move(current);
    out.traces.push_back(open_value_bracket<T>(u, depth, options));
    out.estimates.push_back(out.traces.back().estimates.back());
  }
  return out;
}

template <Scalar T>
BracketTrace<T> gdelta_value_bracket(const GameSpec& spec, int depth,
                                     const BracketOptions& options) {
  if (spec.kind != GameKind::kGDelta) {
    throw Error("game '" + spec.name + "' is " + std::string(kind_name(spec.kind)) +
                ", not g-delta");
  }
  if (options.k_max < 1) throw Error("k-max must be at least 1");
  check_depth(depth);
  spec.validate();
  const PayoffAutomaton& a = spec.automaton();
  // a*I_D + c against a*I_O + c: O ⊇ D bounds from above when a >= 0, from below otherwise.
  const bool flipped = spec.scale < 0;

  std::vector<BracketTrace<T>> supersets;
  for (int k = 1; k <= options.k_max; ++k) {
    GameSpec o = spec;
    o.kind = GameKind::kOpenSet;
    o.automata = {visit_count_indicator(a, k)};
    supersets.push_back(open_value_bracket<T>(o, depth, options));
  }
  auto recurrent = inevitably_recurrent(a);
  auto states = a.states();
  for (StateId q = 0; q < states.size(); ++q) {
    states[q].accepting = recurrent[q];
    states[q].terminal = false;
  }
  GameSpec inner = spec;
  inner.kind = GameKind::kOpenSet;
  inner.automata = {
      PayoffAutomaton(a.name() + "_rec", a.num_joint(), std::move(states), a.start(), a.transitions())};
  BracketTrace<T> subset = open_value_bracket<T>(inner, depth, options);

  BracketTrace<T> trace;
  trace.k_max = options.k_max;
  auto better = [&](const T& x, const T& y) { return flipped ? (y > x) : (y < x); };
  for (int d = 0; d <= depth; ++d) {
    const auto i = static_cast<std::size_t>(d);
    T bound = flipped ? supersets[0].brackets[i].lower : supersets[0].brackets[i].upper;
    T estimate = supersets[0].estimates[i];
    for (const auto& s : supersets) {
      const T& b = flipped ? s.brackets[i].lower : s.brackets[i].upper;
      if (better(bound, b)) bound = b;
      if (better(estimate, s.estimates[i])) estimate = s.estimates[i];
    }
    ValueBracket<T> vb = flipped ? ValueBracket<T>{bound, subset.brackets[i].upper, d}
                                 : ValueBracket<T>{subset.brackets[i].lower, bound, d};
    trace.brackets.push_back(vb);
    trace.estimates.push_back(estimate);
  }
  for (const auto& s : supersets) {
    trace.k_uppers.push_back(flipped ? s.last().lower : s.last().upper);
    trace.k_estimates.push_back(s.estimates.back());
  }
  settle_verdict(trace, options.tol);
  return trace;
}

template <Scalar T>
BehavioralStrategy locally_optimal_strategy(const GameSpec& spec, const ValueOracle<T>& oracle,
                                            int depth, Player player) {
  check_depth(depth);
  const StageGame<T> game = compile_for_play<T>(spec, depth);
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
    if (t >= game.horizon || game.terminal[q]) {
      m.rows[id].assign(moves, Rational(1, static_cast<long>(moves)));
      continue;
    }
    const int remaining = game.horizon - t - 1;
    Matrix<T> payoffs(al.num_x(), al.num_y());
    for (std::size_t x = 0; x < al.num_x(); ++x) {
      for (std::size_t y = 0; y < al.num_y(); ++y) {
        const StateId child = game.step(q, al.joint(x, y));
        if (game.terminal[child]) {
          payoffs(x, y) = game.payoff_at(child);
          continue;
        }
        auto v = oracle(game.state_names[child], remaining);
        if (!v) {
          throw Error("value oracle has no value for state '" + game.state_names[child] +
                      "' with " + std::to_string(remaining) + " rounds left");
        }
        payoffs(x, y) = *v;
      }
    }
    const auto sol = solve_matrix(payoffs);
    const auto& row = player == Player::kOne ? sol.row_strategy : sol.col_strategy;
    for (const auto& p : row) m.rows[id].push_back(as_rational(p));
    for (std::size_t z = 0; z < nz; ++z) {
      m.next[id * nz + z] = intern(game.step(q, static_cast<JointMove>(z)), t + 1);
    }
  }
  return BehavioralStrategy::from_machine(player, al, std::move(m));
}

#define BWGAME_INSTANTIATE(T)                                                                  \
  template BracketTrace<T> open_value_bracket<T>(const GameSpec&, int, const BracketOptions&); \
  template UnionTrace<T> union_value_limit<T>(const std::vector<GameSpec>&, int,               \
                                              const BracketOptions&);                          \
  template BracketTrace<T> gdelta_value_bracket<T>(const GameSpec&, int, const BracketOptions&); \
  template BehavioralStrategy locally_optimal_strategy<T>(const GameSpec&, const ValueOracle<T>&, \
                                                          int, Player);

BWGAME_INSTANTIATE(double)
BWGAME_INSTANTIATE(Rational)

#undef BWGAME_INSTANTIATE

}  // namespace bwgame
