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

#ifndef BWGAME_GAME_MODEL_HPP_
#define BWGAME_GAME_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bwgame/rational.hpp"

namespace bwgame {

// Domain failure: an input violates a documented precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Player { kOne, kTwo };

inline Player opponent(Player p) { return p == Player::kOne ? Player::kTwo : Player::kOne; }
inline std::string_view player_name(Player p) { return p == Player::kOne ? "I" : "II"; }

using JointMove = std::uint32_t;
using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// Move labels of both players. Joint moves are enumerated row-major:
// joint(x, y) = x * |Y| + y.
class MoveAlphabets {
 public:
  MoveAlphabets() = default;
  // Throws Error on an empty or duplicate-label alphabet.
  MoveAlphabets(std::vector<std::string> x_moves, std::vector<std::string> y_moves);

  const std::vector<std::string>& x_moves() const { return x_moves_; }
  const std::vector<std::string>& y_moves() const { return y_moves_; }
  const std::vector<std::string>& moves(Player p) const {
    return p == Player::kOne ? x_moves_ : y_moves_;
  }
  std::size_t num_x() const { return x_moves_.size(); }
  std::size_t num_y() const { return y_moves_.size(); }
  std::size_t num_moves(Player p) const { return moves(p).size(); }
  std::size_t num_joint() const { return x_moves_.size() * y_moves_.size(); }

  JointMove joint(std::size_t x, std::size_t y) const {
    return static_cast<JointMove>(x * num_y() + y);
  }
  std::size_t x_of(JointMove z) const { return z / num_y(); }
  std::size_t y_of(JointMove z) const { return z % num_y(); }
  std::size_t move_of(Player p, JointMove z) const {
    return p == Player::kOne ? x_of(z) : y_of(z);
  }

  std::optional<std::size_t> index_of(Player p, std::string_view label) const;
  std::string joint_label(JointMove z) const;

  // The alphabets with the roles of the players exchanged.
  MoveAlphabets swapped() const { return MoveAlphabets(y_moves_, x_moves_); }

  bool operator==(const MoveAlphabets&) const = default;

 private:
  std::vector<std::string> x_moves_;
  std::vector<std::string> y_moves_;
};

// A finite play: a sequence of joint moves.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<JointMove> moves) : moves_(std::move(moves)) {}

  std::size_t length() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  std::span<const JointMove> moves() const { return moves_; }
  JointMove operator[](std::size_t i) const { return moves_[i]; }

  // p ⊆ q: q follows or equals p.
  bool is_prefix_of(const Position& other) const;
  // p ⊂ q: q strictly follows p.
  bool precedes(const Position& other) const {
    return length() < other.length() && is_prefix_of(other);
  }
  Position prefix(std::size_t n) const;
  Position extended(JointMove z) const;

  auto operator<=>(const Position&) const = default;
  bool operator==(const Position&) const = default;

 private:
  std::vector<JointMove> moves_;
};

// "e" for the empty position, otherwise "(a,b) (c,d) ...".
std::string format_position(const Position& p, const MoveAlphabets& alphabets);

// Every position of length n, in lexicographic order of joint moves.
std::vector<Position> positions_of_length(std::size_t num_joint, std::size_t n);

struct StateLabel {
  std::string name;
  std::optional<Rational> u;
  bool accepting = false;
  bool terminal = false;

  bool operator==(const StateLabel&) const = default;
};

// Deterministic automaton over joint moves. Terminal states are absorbing.
class PayoffAutomaton {
 public:
  PayoffAutomaton() = default;
  // `transitions[q * num_joint + z]` is the successor of q on z. Entries of
  // terminal states may be kNoState and are replaced by self-loops. Throws
  // Error if the table is not total, a terminal state leaves itself, or two
  // states share a name.
  PayoffAutomaton(std::string name, std::size_t num_joint, std::vector<StateLabel> states,
                  StateId start, std::vector<StateId> transitions);

  const std::string& name() const { return name_; }
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_joint() const { return num_joint_; }
  StateId start() const { return start_; }
  const StateLabel& state(StateId q) const { return states_[q]; }
  const std::vector<StateLabel>& states() const { return states_; }
  StateId next(StateId q, JointMove z) const { return transitions_[q * num_joint_ + z]; }
  const std::vector<StateId>& transitions() const { return transitions_; }
  std::optional<StateId> find(std::string_view state_name) const;

  StateId run(StateId from, const Position& p) const;
  StateId run(const Position& p) const { return run(start_, p); }

  // Reachable from `from`, including `from`.
  std::vector<char> reachable_from(StateId from) const;

  PayoffAutomaton with_start(StateId start) const;
  PayoffAutomaton renamed(std::string name) const;

  // Structural equality up to state order: compares by state name.
  bool operator==(const PayoffAutomaton& other) const;

 private:
  std::string name_;
  std::size_t num_joint_ = 0;
  std::vector<StateLabel> states_;
  StateId start_ = 0;
  std::vector<StateId> transitions_;
};

enum class GameKind { kMatrix, kFinite, kGeneralizedOpen, kOpenSet, kGDelta, kUnion };

std::string_view kind_name(GameKind kind);

struct PayoffBounds {
  Rational lo;
  Rational hi;
  bool operator==(const PayoffBounds&) const = default;
};

// A Blackwell game. The effective payoff is `scale * f + offset`, where f is
// the payoff described by the kind:
//   matrix            f(z1 ...) = matrix[x1][y1]
//   finite(n)         f = u(state after n rounds, or the terminal state hit)
//   generalized-open  f(w) = sup_j u(state after j rounds)
//   open-set          f = 1 if an accepting state is ever visited, else 0
//   g-delta           f = 1 if accepting states are visited infinitely often
//   union             f = 1 if any automaton visits an accepting state
// Matrix, finite and nonnegatively scaled generalized-open specs keep
// scale = 1, offset = 0: transforms are folded into their labels.
struct GameSpec {
  std::string name;
  MoveAlphabets alphabets;
  GameKind kind = GameKind::kMatrix;
  int horizon = 0;
  std::vector<std::vector<Rational>> matrix;
  std::vector<PayoffAutomaton> automata;
  Rational scale{1};
  Rational offset{0};
  PayoffBounds bounds{Rational(0), Rational(1)};
  Position start_position;

  bool is_finite_kind() const { return kind == GameKind::kMatrix || kind == GameKind::kFinite; }
  bool has_affine() const { return scale != 1 || offset != 0; }
  const PayoffAutomaton& automaton() const;

  // Throws Error describing the first violated invariant.
  void validate() const;

  bool operator==(const GameSpec&) const = default;
};

// Payoff a*f + c for a >= 0.
GameSpec scale_shift_payoff(const GameSpec& spec, const Rational& a, const Rational& c);

// Payoff -f with the roles of the players exchanged; an involution.
GameSpec switch_players(const GameSpec& spec);

// A matrix spec as an equivalent finite(1) automaton spec.
GameSpec matrix_as_finite(const GameSpec& spec);

// The subgame started at `p` (relative to the current start position).
GameSpec subgame(const GameSpec& spec, const Position& p);

// The finite subgame entered at automaton state `state` after `rounds_played`
// rounds. Only for finite specs.
GameSpec subgame_at_state(const GameSpec& spec, StateId state, int rounds_played);

// Finite game of length n on the tree of positions: the payoff of every
// length-n position is `payoff(p)`. Used for table payoffs.
template <class PayoffFn>
GameSpec tree_game(std::string name, const MoveAlphabets& alphabets, int n, PayoffFn payoff);

}  // namespace bwgame

#include "bwgame/detail/tree_game.hpp"

#endif  // BWGAME_GAME_MODEL_HPP_
