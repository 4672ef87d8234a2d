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

#ifndef BWGAME_TESTS_SPEC_CORPUS_HPP_
#define BWGAME_TESTS_SPEC_CORPUS_HPP_

// Documents shared by the format tests and the acceptance runner.

#include <string>
#include <vector>

#include "bwgame/game_model.hpp"
#include "support/generators.hpp"

namespace bwgame::testing {

struct BadDocument {
  std::string label;
  std::string text;
  int line;  // expected error line
};

inline const char* kValidHeader =
    "game \"g\"\n"
    "moves I = {a, b}\n"
    "moves II = {x, y}\n";

// Each entry breaks exactly one rule; `line` is where the error must point.
inline std::vector<BadDocument> invalid_game_corpus() {
  const std::string h = kValidHeader;
  const std::string dfa_ok =
      "dfa \"d\" {\n"
      "  start p\n"
      "  state p u=0\n"
      "  state q u=1 terminal\n"
      "  p (a,*) -> p\n"
      "  p (b,*) -> q\n"
      "}\n";
  return {
      {"empty move set", "game \"g\"\nmoves I = {}\nmoves II = {x}\nkind = matrix\n", 2},
      {"duplicate move", "game \"g\"\nmoves I = {a, a}\nmoves II = {x}\nkind = matrix\nmatrix:\n 1\n 1\n", 2},
      {"unknown kind", h + "kind = closed\n", 4},
      {"missing game line", "moves I = {a}\nmoves II = {x}\nkind = matrix\nmatrix:\n 1\n", 1},
      {"missing kind", h + "matrix:\n 1 0\n 0 1\n", 1},
      {"unknown statement", h + "kind = matrix\npayoff = 3\n", 5},
      {"matrix too few rows", h + "kind = matrix\nmatrix:\n 1 0\n", 5},
      {"matrix short row", h + "kind = matrix\nmatrix:\n 1 0\n 1\n", 7},
      {"matrix bad entry", h + "kind = matrix\nmatrix:\n 1 0\n 0 one\n", 7},
      {"matrix for finite kind", h + "kind = finite 1\nmatrix:\n 1 0\n 0 1\n", 5},
      {"finite without dfa", h + "kind = finite 1\n", 4},
      {"finite bad length", h + "kind = finite -2\n", 4},
      {"bounds reversed", h + "kind = matrix\nbounds = [1, 0]\nmatrix:\n 1 0\n 0 1\n", 5},
      {"payoff outside bounds", h + "kind = matrix\nbounds = [0, 1]\nmatrix:\n 1 0\n 0 2\n", 5},
      {"unknown move in start", h + "kind = matrix\nstart = (a,z)\nmatrix:\n 1 0\n 0 1\n", 5},
      {"moves after use", "game \"g\"\nkind = matrix\nmatrix:\n 1\n", 3},
      {"unterminated string", "game \"g\nmoves I = {a}\n", 1},
      {"stray character", h + "kind = matrix $\n", 4},
      {"dfa missing start", h + "kind = finite 1\ndfa \"d\" {\n state p u=0 terminal\n}\n", 5},
      {"dfa unknown start", h + "kind = finite 1\ndfa \"d\" {\n start r\n state p u=0 terminal\n}\n", 6},
      {"dfa duplicate state", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0 terminal\n state p u=1\n}\n", 8},
      {"dfa non-total", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0\n p (a,x) -> p\n}\n", 7},
      {"dfa terminal leaves", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0 terminal\n state q u=0 terminal\n p (a,x) -> q\n}\n", 9},
      {"dfa unknown move", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0\n p (c,*) -> p\n}\n", 8},
      {"dfa unknown target", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0\n p (*,*) -> r\n}\n", 8},
      {"dfa conflicting rules", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0\n state q u=0\n p (a,*) -> p\n p (*,x) -> q\n p (*,*) -> p\n}\n", 10},
      {"dfa bad attribute", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p value=0\n}\n", 7},
      {"dfa unclosed", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0\n p (*,*) -> p\n", 9},
      {"missing label at horizon", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0\n state q terminal\n p (*,*) -> q\n}\n", 4},
      {"generalized-open without u", h + "kind = generalized-open\ndfa \"d\" {\n start p\n state p\n p (*,*) -> p\n}\n", 4},
      {"duplicate kind", h + "kind = matrix\nkind = matrix\n", 5},
      {"open-set two automata", h + "kind = open-set\n" + dfa_ok + dfa_ok, 4},
      {"arrow missing", h + "kind = finite 1\ndfa \"d\" {\n start p\n state p u=0\n p (*,*) p\n}\n", 8},
  };
}

// Random valid spec of any kind.
inline GameSpec random_any_spec(Rng& rng, int index) {
  const auto al = random_alphabets(rng);
  GameSpec spec;
  switch (index % 6) {
    case 0:
      spec = matrix_spec(random_matrix(rng, al.num_x(), al.num_y()));
      break;
    case 1:
      spec = random_finite_spec(rng, al, uniform_int(rng, 0, 4), uniform_int(rng, 1, 5));
      break;
    case 2:
      spec = random_open_spec(rng, al, GameKind::kGeneralizedOpen, uniform_int(rng, 1, 5));
      break;
    case 3:
      spec = random_open_spec(rng, al, GameKind::kOpenSet, uniform_int(rng, 1, 5));
      break;
    case 4:
      spec = random_open_spec(rng, al, GameKind::kGDelta, uniform_int(rng, 1, 5));
      break;
    default: {
      spec = random_open_spec(rng, al, GameKind::kUnion, uniform_int(rng, 1, 4), "u0");
      for (int k = 1; k < uniform_int(rng, 1, 3); ++k) {
        spec.automata.push_back(random_automaton(rng, al, uniform_int(rng, 1, 4), 0.1, 0.3, 0, 1,
                                                 "u" + std::to_string(k)));
      }
      break;
    }
  }
  spec.name = "spec" + std::to_string(index);
  if (coin(rng, 0.3)) {
    spec.scale = random_rational(rng, -2, 2, 4);
    spec.offset = random_rational(rng, -1, 1, 4);
    // Widen the bounds to cover the transformed range.
    spec.bounds = {Rational(-20), Rational(20)};
  }
  if (coin(rng, 0.3) && (spec.kind != GameKind::kFinite || spec.horizon > 0)) {
    spec.start_position = Position({static_cast<JointMove>(uniform_int(rng, 0, static_cast<int>(al.num_joint()) - 1))});
  }
  if (spec.kind == GameKind::kMatrix) spec.start_position = Position{};
  spec.validate();
  return spec;
}

}  // namespace bwgame::testing

#endif  // BWGAME_TESTS_SPEC_CORPUS_HPP_
