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

#include <doctest.h>

#include <algorithm>

#include "bwgame/examples.hpp"
#include "bwgame/finite_solver.hpp"
#include "bwgame/limit_solver.hpp"
#include "bwgame/stage_game.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bwgame;
using namespace bwgame::testing;

namespace {

Rational raw_label(const GameSpec& spec, const StateLabel& s) {
  if (spec.kind == GameKind::kOpenSet) return Rational(s.accepting ? 1 : 0);
  return *s.u;
}

// Largest label along the play p, start state included.
Rational prefix_sup(const GameSpec& spec, const Position& p) {
  const auto& a = spec.automaton();
  StateId q = a.start();
  Rational best = raw_label(spec, a.state(q));
  for (std::size_t i = 0; i < p.length(); ++i) {
    q = a.next(q, p[i]);
    best = std::max(best, raw_label(spec, a.state(q)));
    if (spec.kind == GameKind::kOpenSet && best == 1) break;
  }
  return best;
}

// Largest label over states reachable from the end of p, by search.
Rational reachable_label_sup(const GameSpec& spec, const Position& p) {
  const auto& a = spec.automaton();
  StateId q = a.start();
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (spec.kind == GameKind::kOpenSet && a.state(q).accepting) return Rational(1);
    q = a.next(q, p[i]);
  }
  std::vector<char> seen(a.num_states(), 0);
  std::vector<StateId> todo{q};
  seen[q] = 1;
  Rational best = raw_label(spec, a.state(q));
  while (!todo.empty()) {
    const StateId s = todo.back();
    todo.pop_back();
    best = std::max(best, raw_label(spec, a.state(s)));
    for (std::size_t z = 0; z < a.num_joint(); ++z) {
      const StateId t = a.next(s, static_cast<JointMove>(z));
      if (!seen[t]) {
        seen[t] = 1;
        todo.push_back(t);
      }
    }
  }
  return best;
}

// The d-round game paying the prefix supremum (running) or the reachable
// supremum (reachable), with the affine map applied.
GameSpec sup_tree(const GameSpec& spec, int d, bool reachable) {
  return tree_game("sup", spec.alphabets, d, [&](const Position& p) {
    const Rational f = reachable ? std::max(prefix_sup(spec, p), reachable_label_sup(spec, p))
                                 : prefix_sup(spec, p);
    return spec.scale * f + spec.offset;
  });
}

GameSpec open_set_spec(const std::string& name, const MoveAlphabets& al,
                       std::vector<StateLabel> states, std::vector<StateId> next) {
  GameSpec spec;
  spec.name = name;
  spec.alphabets = al;
  spec.kind = GameKind::kOpenSet;
  spec.automata = {PayoffAutomaton(name, al.num_joint(), std::move(states), 0, std::move(next))};
  spec.bounds = {Rational(0), Rational(1)};
  spec.validate();
  return spec;
}

StateLabel label(std::string name, bool accepting, bool terminal = false) {
  StateLabel s;
  s.name = std::move(name);
  s.accepting = accepting;
  s.terminal = terminal;
  s.u = Rational(accepting ? 1 : 0);
  return s;
}

// Open set of plays whose first joint move is z.
GameSpec first_move_is(const MoveAlphabets& al, JointMove z, const std::string& name) {
  const std::size_t nz = al.num_joint();
  std::vector<StateId> next(3 * nz);
  for (std::size_t m = 0; m < nz; ++m) {
    next[m] = m == z ? 1 : 2;
    next[nz + m] = 1;
    next[2 * nz + m] = 2;
  }
  return open_set_spec(name, al, {label("s", false), label("hit", true, true), label("miss", false, true)},
                       next);
}

}  // namespace

TEST_SUITE("limit_solver") {

TEST_CASE("stop game bracket") {
  const auto spec = examples::stop_game();
  const auto trace = open_value_bracket<Rational>(spec, 20);
  REQUIRE(trace.brackets.size() == 21);
  for (int d = 0; d <= 20; ++d) {
    CAPTURE(d);
    const auto& b = trace.brackets[d];
    CHECK(b.depth == d);
    CHECK(b.lower == stop_game_truncated_value(d));
    CHECK(b.lower == Rational(d, d + 1));
    CHECK(b.upper == 1);
    CHECK(trace.estimates[d] == b.lower);
    if (d > 0) CHECK(b.lower > trace.brackets[d - 1].lower);
  }
  CHECK(trace.verdict == Verdict::kOpen);
  CHECK(verdict_name(trace.verdict) == "open");
  // Double and exact agree.
  const auto approx = open_value_bracket<double>(spec, 20);
  for (int d = 0; d <= 20; ++d) CHECK(approx.brackets[d].lower == doctest::Approx(double(d) / (d + 1)));
  // Serial and parallel agree exactly.
  BracketOptions serial;
  serial.exec = Execution::kSerial;
  const auto s = open_value_bracket<Rational>(spec, 20, serial);
  for (int d = 0; d <= 20; ++d) {
    CHECK(s.brackets[d].lower == trace.brackets[d].lower);
    CHECK(s.brackets[d].upper == trace.brackets[d].upper);
  }
}

TEST_CASE("bracket verdicts") {
  const auto al = alphabets(2, 2);
  // The accepting state is unreachable: certified at depth zero.
  const auto never = open_set_spec("never", al, {label("s", false), label("h", true, true)},
                                   std::vector<StateId>{0, 0, 0, 0, 1, 1, 1, 1});
  const auto t = open_value_bracket<Rational>(never, 3);
  CHECK(t.brackets[0].lower == 0);
  CHECK(t.brackets[0].upper == 0);
  CHECK(t.verdict == Verdict::kCertified);
  CHECK(verdict_name(t.verdict) == "certified");

  // II avoids the set forever; the sides never meet.
  const auto avoid = examples::ii_plays_one();
  const auto a = open_value_bracket<Rational>(avoid, 12);
  for (const auto& b : a.brackets) {
    CHECK(b.lower == 0);
    CHECK(b.upper == 1);
  }
  CHECK(a.verdict == Verdict::kStabilized);
  CHECK(verdict_name(a.verdict) == "stabilized estimate");
  const auto sigma = BehavioralStrategy::uniform(Player::kOne, avoid.alphabets);
  const auto tau = BehavioralStrategy::pure(Player::kTwo, avoid.alphabets, 0);
  CHECK(best_response(truncated_game<Rational>(avoid, 12, TruncationSide::kRunningSup), tau).value == 0);
  CHECK(expected_payoff(truncated_game<Rational>(avoid, 12, TruncationSide::kRunningSup), sigma, tau) == 0);

  // Fewer than four depths never stabilize.
  CHECK(open_value_bracket<Rational>(avoid, 2).verdict == Verdict::kOpen);
  CHECK_THROWS_AS(open_value_bracket<Rational>(avoid, -1), Error);
  CHECK_THROWS_AS(open_value_bracket<Rational>(examples::scissors_paper_stone(), 3), Error);
}

TEST_CASE("random brackets match the explicit truncations") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const auto al = alphabets(2, 2);
    const GameKind kind = trial % 2 ? GameKind::kGeneralizedOpen : GameKind::kOpenSet;
    auto spec = random_open_spec(rng, al, kind, 4);
    if (trial % 3 == 0) {
      spec.scale = Rational(-2);
      spec.offset = Rational(1);
      spec.bounds = {Rational(-1), Rational(1)};
      spec.validate();
    }
    const auto trace = open_value_bracket<Rational>(spec, 4);
    for (int d = 0; d <= 4; ++d) {
      CAPTURE(d);
      const Rational running = explicit_value(sup_tree(spec, d, false));
      const Rational reach = explicit_value(sup_tree(spec, d, true));
      const auto& b = trace.brackets[d];
      if (spec.scale >= 0) {
        CHECK(b.lower == running);
        CHECK(b.upper == reach);
      } else {
        CHECK(b.upper == running);
        CHECK(b.lower == reach);
      }
      CHECK(trace.estimates[d] == running);
      CHECK(b.lower <= b.upper);
    }
    // Nested and sound: every lower bound sits below every upper bound.
    for (int d = 1; d <= 4; ++d) {
      CHECK(trace.brackets[d].lower >= trace.brackets[d - 1].lower);
      CHECK(trace.brackets[d].upper <= trace.brackets[d - 1].upper);
    }
  }
}

TEST_CASE("deeper random brackets are monotone") {
  Rng rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = random_open_spec(rng, random_alphabets(rng), GameKind::kGeneralizedOpen, 6);
    const auto trace = open_value_bracket<double>(spec, 15);
    for (int d = 1; d <= 15; ++d) {
      CHECK(trace.brackets[d].lower >= trace.brackets[d - 1].lower - 1e-12);
      CHECK(trace.brackets[d].upper <= trace.brackets[d - 1].upper + 1e-12);
      CHECK(trace.brackets[d].lower <= trace.brackets[d].upper + 1e-12);
    }
  }
}

TEST_CASE("union limits") {
  const auto al = alphabets(2, 2);
  std::vector<GameSpec> parts;
  for (JointMove z = 0; z < 4; ++z) parts.push_back(first_move_is(al, z, "first" + std::to_string(z)));

  // One set: the plain bracket.
  const auto one = union_value_limit<Rational>({parts[0]}, 3);
  REQUIRE(one.estimates.size() == 1);
  CHECK(one.estimates[0] == open_value_bracket<Rational>(parts[0], 3).last().lower);
  CHECK(one.automaton_changed[0]);

  // Disjoint sets covering every first move: value 1 from depth 1.
  const auto all = union_value_limit<Rational>(parts, 3);
  REQUIRE(all.traces.size() == 4);
  CHECK(all.traces[3].brackets[1].lower == 1);
  CHECK(all.traces[3].brackets[0].lower == 0);
  CHECK(all.estimates[3] == 1);
  for (std::size_t j = 1; j < 4; ++j) {
    CHECK(all.estimates[j] >= all.estimates[j - 1]);
    CHECK(all.automaton_changed[j]);
  }
  // One cell of four: II avoids it. A full row: I secures it.
  CHECK(all.estimates[0] == 0);
  CHECK(all.estimates[1] == 1);

  // A subset added second leaves the union unchanged.
  const auto cover = union_value_limit<Rational>({parts[1], parts[1]}, 3);
  CHECK(cover.automaton_changed[0]);
  CHECK_FALSE(cover.automaton_changed[1]);
  CHECK(cover.estimates[1] == cover.estimates[0]);

  CHECK_THROWS_AS(union_value_limit<Rational>({}, 3), Error);
  CHECK_THROWS_AS(union_value_limit<Rational>({parts[0], examples::stop_game()}, 3), Error);
  CHECK_THROWS_AS(union_value_limit<Rational>({parts[0], first_move_is(alphabets(3, 2), 0, "x")}, 3), Error);
}

TEST_CASE("random unions are monotone in the number of sets") {
  Rng rng(73);
  for (int trial = 0; trial < 15; ++trial) {
    const auto al = random_alphabets(rng);
    std::vector<GameSpec> parts;
    for (int j = 0; j < 3; ++j) {
      parts.push_back(random_open_spec(rng, al, GameKind::kOpenSet, 4, "o" + std::to_string(j)));
    }
    const auto u = union_value_limit<Rational>(parts, 5);
    for (std::size_t j = 1; j < parts.size(); ++j) {
      CHECK(u.estimates[j] >= u.estimates[j - 1]);
      for (std::size_t d = 0; d < u.traces[j].brackets.size(); ++d) {
        CHECK(u.traces[j].brackets[d].lower >= u.traces[j - 1].brackets[d].lower);
      }
    }
  }
}

TEST_CASE("g-delta brackets") {
  const auto inf = examples::inf_ones();
  const auto t = gdelta_value_bracket<Rational>(inf, 8);
  CHECK(t.last().lower == 0);
  CHECK(t.estimates.back() == 0);
  CHECK(t.k_max == 8);
  REQUIRE(t.k_uppers.size() == 8);
  for (std::size_t k = 1; k < t.k_uppers.size(); ++k) CHECK(t.k_uppers[k] <= t.k_uppers[k - 1]);
  CHECK(t.last().upper == *std::min_element(t.k_uppers.begin(), t.k_uppers.end()));

  const auto al = alphabets(2, 2);
  // Every state accepting: visited infinitely often from the start.
  GameSpec always = open_set_spec("always", al, {label("s", true)}, {0, 0, 0, 0});
  always.kind = GameKind::kGDelta;
  always.validate();
  const auto a = gdelta_value_bracket<Rational>(always, 2);
  CHECK(a.brackets[0].lower == 1);
  CHECK(a.brackets[0].upper == 1);
  CHECK(a.verdict == Verdict::kCertified);

  // Alternation forced regardless of moves.
  GameSpec forced = open_set_spec("forced", al, {label("a", false), label("b", true)},
                                  {1, 1, 1, 1, 0, 0, 0, 0});
  forced.kind = GameKind::kGDelta;
  forced.validate();
  const auto f = gdelta_value_bracket<Rational>(forced, 4);
  CHECK(f.brackets[1].lower == 1);
  CHECK(f.last().upper == 1);

  // Negative scale swaps the roles of the two sides.
  const auto fin = examples::fin_ones();
  const auto g = gdelta_value_bracket<Rational>(fin, 6);
  CHECK(g.last().lower == 0);
  CHECK(g.last().upper == 1);

  BracketOptions bad;
  bad.k_max = 0;
  CHECK_THROWS_AS(gdelta_value_bracket<Rational>(inf, 3, bad), Error);
  CHECK_THROWS_AS(gdelta_value_bracket<Rational>(examples::stop_game(), 3), Error);
}

TEST_CASE("random g-delta brackets are sound") {
  Rng rng(74);
  for (int trial = 0; trial < 15; ++trial) {
    auto spec = random_open_spec(rng, alphabets(2, 2), GameKind::kGDelta, 4);
    BracketOptions opts;
    opts.k_max = 4;
    const auto t = gdelta_value_bracket<Rational>(spec, 6, opts);
    for (const auto& b : t.brackets) {
      CHECK(b.lower <= b.upper);
      CHECK(b.lower >= 0);
      CHECK(b.upper <= 1);
    }
    for (std::size_t k = 1; k < t.k_uppers.size(); ++k) CHECK(t.k_uppers[k] <= t.k_uppers[k - 1]);
  }
}

TEST_CASE("locally optimal strategies from exact oracles are optimal in finite games") {
  Rng rng(75);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = random_finite_spec(rng, alphabets(2, 2), 2);
    const auto& a = spec.automaton();
    ValueOracle<Rational> oracle = [&](std::string_view name, int remaining) -> std::optional<Rational> {
      const auto q = a.find(name);
      if (!q) return std::nullopt;
      return explicit_value(subgame_at_state(spec, *q, spec.horizon - remaining));
    };
    const Rational v = explicit_value(spec);
    const auto sigma = locally_optimal_strategy<Rational>(spec, oracle, spec.horizon, Player::kOne);
    CHECK(explicit_fixed_value(spec, sigma) == v);
    const auto tau = locally_optimal_strategy<Rational>(spec, oracle, spec.horizon, Player::kTwo);
    CHECK(best_response(compile_finite<Rational>(spec), tau).value == v);
  }
}

TEST_CASE("locally optimal play against the limit value can fail") {
  const auto spec = examples::stop_game();
  // True values of the infinite game: 1 at live and i_won, 0 at ii_won.
  ValueOracle<Rational> limit = [](std::string_view name, int) -> std::optional<Rational> {
    if (name == "ii_won") return Rational(0);
    return Rational(1);
  };
  for (int d : {1, 3, 6}) {
    const auto sigma = locally_optimal_strategy<Rational>(spec, limit, d, Player::kOne);
    // Continue weakly dominates at live, so I never stops.
    CHECK(sigma.distribution_at(Position{}) == Distribution{Rational(0), Rational(1)});
    CHECK(explicit_fixed_value(sup_tree(spec, d, false), sigma) == 0);
  }

  // With the truncated values the same construction reaches d/(d+1).
  ValueOracle<Rational> truncated = [](std::string_view name, int remaining) -> std::optional<Rational> {
    if (name == "live") return stop_game_truncated_value(remaining);
    return Rational(name == "i_won" ? 1 : 0);
  };
  for (int d : {1, 3, 6}) {
    const auto sigma = locally_optimal_strategy<Rational>(spec, truncated, d, Player::kOne);
    CHECK(explicit_fixed_value(sup_tree(spec, d, false), sigma) == Rational(d, d + 1));
    const auto tau = locally_optimal_strategy<Rational>(spec, truncated, d, Player::kTwo);
    CHECK(best_response(truncated_game<Rational>(spec, d, TruncationSide::kRunningSup), tau).value ==
          Rational(d, d + 1));
  }

  ValueOracle<Rational> empty = [](std::string_view, int) { return std::optional<Rational>{}; };
  CHECK_THROWS_WITH_AS(locally_optimal_strategy<Rational>(spec, empty, 2, Player::kOne),
                       doctest::Contains("no value"), Error);
}

}  // TEST_SUITE
