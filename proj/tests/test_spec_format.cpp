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

#include "bwgame/examples.hpp"
#include "bwgame/spec_format.hpp"
#include "spec_corpus.hpp"
#include "support/generators.hpp"

using namespace bwgame;
using namespace bwgame::testing;

namespace {

const char* kSps = R"(# scissors-paper-stone
game "sps"
moves I = {scissors, paper, stone}
moves II = {scissors, paper, stone}
kind = matrix
bounds = [-1, 1]
matrix:
  0  1 -1
 -1  0  1
  1 -1  0
)";

const char* kStop = R"(game "stopgame"
moves I = {Stop, Continue}
moves II = {Stop, Continue}
kind = generalized-open
bounds = [0, 1]
dfa "stop" {
  start live
  state live u=0
  state i_won u=1 terminal
  state ii_won u=0 terminal
  live (Continue,Continue) -> live
  live (Stop,Stop) -> ii_won
  live (*,*) -> i_won          # a lone Stop
}
)";

}  // namespace

TEST_SUITE("spec_format") {

TEST_CASE("scissors-paper-stone document") {
  const auto spec = parse_game(kSps);
  CHECK(spec.kind == GameKind::kMatrix);
  CHECK(spec.matrix.size() == 3);
  CHECK(spec.matrix[0][1] == 1);
  CHECK(spec.matrix[0][2] == -1);
  CHECK(spec.matrix[1][1] == 0);
  CHECK(spec == examples::scissors_paper_stone());
}

TEST_CASE("stop-game document with wildcards") {
  const auto spec = parse_game(kStop);
  CHECK(spec.kind == GameKind::kGeneralizedOpen);
  CHECK(spec.automaton().num_states() == 3);
  CHECK(spec == examples::stop_game());
}

TEST_CASE("statements may share a line") {
  const auto spec = parse_game(
      "game \"one\"\nmoves I = {a}\nmoves II = {x}\nkind = finite 1\n"
      "dfa \"d\" { start p; state p u=0; state q u=1/2 terminal; p (a,x) -> q }\n");
  CHECK(spec.automaton().num_states() == 2);
  CHECK(*spec.automaton().state(1).u == Rational(1, 2));
}

TEST_CASE("bounds default to the payoff range") {
  const auto spec = parse_game("game \"m\"\nmoves I = {a, b}\nmoves II = {x}\nkind = matrix\nmatrix:\n 0.5\n -2\n");
  CHECK(spec.bounds.lo == -2);
  CHECK(spec.bounds.hi == Rational(1, 2));
}

TEST_CASE("examples round-trip") {
  for (const auto& name : examples::game_names()) {
    const auto spec = examples::game_by_name(name);
    CHECK(parse_game(serialize(spec)) == spec);
  }
}

TEST_CASE("generated specs round-trip") {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto spec = random_any_spec(rng, i);
    const std::string text = serialize(spec);
    const auto back = parse_game(text);
    CHECK(back == spec);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("invalid documents are rejected with a location") {
  for (const auto& bad : invalid_game_corpus()) {
    CAPTURE(bad.label);
    try {
      (void)parse_game(bad.text);
      FAIL("accepted: " << bad.label);
    } catch (const ParseError& e) {
      CHECK(e.line() == bad.line);
      CHECK(e.column() >= 1);
    }
  }
  CHECK_THROWS_WITH_AS(parse_game(invalid_game_corpus()[0].text), doctest::Contains("alphabet empty"),
                       ParseError);
}

TEST_CASE("strategy documents") {
  const auto al = examples::stop_game().alphabets;
  const auto u = parse_strategy("strategy II\nuniform\n", al);
  CHECK(u.form() == BehavioralStrategy::Form::kUniform);
  CHECK(u.distribution_at(Position{}) == Distribution{Rational(1, 2), Rational(1, 2)});

  const auto m = parse_strategy(
      "strategy I\nstart s\nstate s play {Stop: 1/3, Continue: 2/3}\nstate t play {Stop: 1}\n"
      "s (Continue,*) -> t\n",
      al);
  CHECK(m.form() == BehavioralStrategy::Form::kMachine);
  CHECK(m.distribution_at(Position{})[0] == Rational(1, 3));
  CHECK(m.distribution_at(Position({al.joint(1, 0)}))[0] == 1);
  // No transition: uniform from then on.
  CHECK(m.distribution_at(Position({al.joint(0, 0)}))[0] == Rational(1, 2));

  const auto sigma = examples::stop_sigma(4);
  const auto text = serialize(sigma);
  const auto back = parse_strategy(text, al);
  CHECK(back == sigma);
  CHECK(back.table_depth() == 4);
  CHECK(back.distribution_at(Position{})[0] == Rational(1, 4));

  CHECK_THROWS_WITH_AS(parse_strategy("strategy I\nat e play {Stop: 0.5, Continue: 0.4}\n", al),
                       doctest::Contains("non-stochastic row"), ParseError);
  CHECK_THROWS_AS(parse_strategy("strategy I\nat e play {Jump: 1}\n", al), ParseError);
  CHECK_THROWS_AS(parse_strategy("strategy III\nuniform\n", al), ParseError);
  CHECK_THROWS_AS(parse_strategy("strategy I\nuniform\nat e play {Stop: 1}\n", al), ParseError);
  CHECK_THROWS_AS(parse_strategy("strategy I\nat e play {Stop: 1}\nat e play {Stop: 1}\n", al), ParseError);
  CHECK_THROWS_AS(parse_strategy("strategy I\nstate s play {Stop: 1}\n", al), ParseError);
  // Rows within 1e-9 of stochastic are accepted and normalised.
  const auto near = parse_strategy("strategy I\nat e play {Stop: 0.3333333333, Continue: 0.6666666667}\n", al);
  Rational sum = near.distribution_at(Position{})[0] + near.distribution_at(Position{})[1];
  CHECK(sum == 1);
  try {
    (void)parse_strategy("strategy I\n\nat e play {Stop: 0.5, Continue: 0.4}\n", al);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("generated strategies round-trip") {
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const auto al = random_alphabets(rng);
    const Player p = coin(rng) ? Player::kOne : Player::kTwo;
    BehavioralStrategy s = BehavioralStrategy::uniform(p, al);
    switch (i % 3) {
      case 0: s = random_table_strategy(rng, p, al, uniform_int(rng, 1, 2)); break;
      case 1: s = random_machine_strategy(rng, p, al, uniform_int(rng, 1, 4)); break;
      default: break;
    }
    const auto text = serialize(s);
    const auto back = parse_strategy(text, al);
    CHECK(back == s);
    CHECK(serialize(back) == text);
  }
}

}  // TEST_SUITE
