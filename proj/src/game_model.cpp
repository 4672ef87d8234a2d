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

#include "bwgame/game_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace bwgame {

MoveAlphabets::MoveAlphabets(std::vector<std::string> x_moves, std::vector<std::string> y_moves)
    : x_moves_(std::move(x_moves)), y_moves_(std::move(y_moves)) {
  for (const auto* moves : {&x_moves_, &y_moves_}) {
    if (moves->empty()) throw Error("alphabet empty");
    std::set<std::string> seen;
    for (const auto& m : *moves) {
      if (!seen.insert(m).second) throw Error("duplicate move label '" + m + "'");
    }
  }
}

std::optional<std::size_t> MoveAlphabets::index_of(Player p, std::string_view label) const {
  const auto& ms = moves(p);
  auto it = std::find(ms.begin(), ms.end(), label);
  if (it == ms.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ms.begin());
}

std::string MoveAlphabets::joint_label(JointMove z) const {
  return "(" + x_moves_[x_of(z)] + "," + y_moves_[y_of(z)] + ")";
}

bool Position::is_prefix_of(const Position& other) const {
  return length() <= other.length() &&
         std::equal(moves_.begin(), moves_.end(), other.moves_.begin());
}

Position Position::prefix(std::size_t n) const {
  return Position(std::vector<JointMove>(moves_.begin(),
                                         moves_.begin() + std::min(n, moves_.size())));
}

Position Position::extended(JointMove z) const {
  auto moves = moves_;
  moves.push_back(z);
  return Position(std::move(moves));
}

std::string format_position(const Position& p, const MoveAlphabets& alphabets) {
  if (p.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ' ';
    out += alphabets.joint_label(p[i]);
  }
  return out;
}

std::vector<Position> positions_of_length(std::size_t num_joint, std::size_t n) {
  std::vector<Position> out{Position{}};
  for (std::size_t level = 0; level < n; ++level) {
    std::vector<Position> next;
    next.reserve(out.size() * num_joint);
    for (const auto& p : out) {
      for (std::size_t z = 0; z < num_joint; ++z) next.push_back(p.extended(static_cast<JointMove>(z)));
    }
    out = std::move(next);
  }
  return out;
}

PayoffAutomaton::PayoffAutomaton(std::string name, std::size_t num_joint,
                                 std::vector<StateLabel> states, StateId start,
                                 std::vector<StateId> transitions)
    : name_(std::move(name)),
      num_joint_(num_joint),
      states_(std::move(states)),
      start_(start),
      transitions_(std::move(transitions)) {
  if (num_joint_ == 0) throw Error("automaton '" + name_ + "': alphabet empty");
  if (states_.empty()) throw Error("automaton '" + name_ + "' has no states");
  if (start_ >= states_.size()) throw Error("automaton '" + name_ + "': start state out of range");
  if (transitions_.size() != states_.size() * num_joint_) {
    throw Error("automaton '" + name_ + "': transition table has wrong size");
  }
  std::set<std::string_view> names;
  for (const auto& s : states_) {
    if (!names.insert(s.name).second) {
      throw Error("automaton '" + name_ + "': duplicate state '" + s.name + "'");
    }
  }
  for (StateId q = 0; q < states_.size(); ++q) {
    for (std::size_t z = 0; z < num_joint_; ++z) {
      StateId& t = transitions_[q * num_joint_ + z];
      if (states_[q].terminal) {
        if (t == kNoState) t = q;
        if (t != q) {
          throw Error("automaton '" + name_ + "': terminal state '" + states_[q].name +
                      "' has an outgoing transition to '" +
                      (t < states_.size() ? states_[t].name : std::string("?")) + "'");
        }
      } else if (t == kNoState) {
        throw Error("automaton '" + name_ + "': non-total transition function at state '" +
                    states_[q].name + "'");
      } else if (t >= states_.size()) {
        throw Error("automaton '" + name_ + "': transition target out of range");
      }
    }
  }
}

std::optional<StateId> PayoffAutomaton::find(std::string_view state_name) const {
  for (StateId q = 0; q < states_.size(); ++q) {
    if (states_[q].name == state_name) return q;
  }
  return std::nullopt;
}

StateId PayoffAutomaton::run(StateId from, const Position& p) const {
  StateId q = from;
  for (JointMove z : p.moves()) {
    if (z >= num_joint_) throw Error("position uses a joint move outside the alphabet");
    q = next(q, z);
  }
  return q;
}

std::vector<char> PayoffAutomaton::reachable_from(StateId from) const {
  std::vector<char> seen(states_.size(), 0);
  std::vector<StateId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (std::size_t z = 0; z < num_joint_; ++z) {
      StateId t = next(q, static_cast<JointMove>(z));
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

PayoffAutomaton PayoffAutomaton::with_start(StateId start) const {
  PayoffAutomaton copy = *this;
  if (start >= states_.size()) throw Error("start state out of range");
  copy.start_ = start;
  return copy;
}

PayoffAutomaton PayoffAutomaton::renamed(std::string name) const {
  PayoffAutomaton copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool PayoffAutomaton::operator==(const PayoffAutomaton& other) const {
  if (name_ != other.name_ || num_joint_ != other.num_joint_ ||
      states_.size() != other.states_.size()) {
    return false;
  }
  std::unordered_map<std::string_view, StateId> theirs;
  for (StateId q = 0; q < other.states_.size(); ++q) theirs[other.states_[q].name] = q;
  std::vector<StateId> map(states_.size());
  for (StateId q = 0; q < states_.size(); ++q) {
    auto it = theirs.find(states_[q].name);
    if (it == theirs.end() || !(states_[q] == other.states_[it->second])) return false;
    map[q] = it->second;
  }
  if (map[start_] != other.start_) return false;
  for (StateId q = 0; q < states_.size(); ++q) {
    for (std::size_t z = 0; z < num_joint_; ++z) {
      if (map[next(q, static_cast<JointMove>(z))] !=
          other.next(map[q], static_cast<JointMove>(z))) {
        return false;
      }
    }
  }
  return true;
}

std::string_view kind_name(GameKind kind) {
  switch (kind) {
    case GameKind::kMatrix: return "matrix";
    case GameKind::kFinite: return "finite";
    case GameKind::kGeneralizedOpen: return "generalized-open";
    case GameKind::kOpenSet: return "open-set";
    case GameKind::kGDelta: return "gdelta";
    case GameKind::kUnion: return "union";
  }
  return "?";
}

const PayoffAutomaton& GameSpec::automaton() const {
  if (automata.empty()) throw Error("game '" + name + "' has no automaton");
  return automata.front();
}

namespace {

void check_in_bounds(const GameSpec& spec, const Rational& descriptor_value, std::string_view what) {
  Rational v = spec.scale * descriptor_value + spec.offset;
  if (v < spec.bounds.lo || v > spec.bounds.hi) {
    throw Error(std::string(what) + " payoff " + format_rational(v) + " outside bounds [" +
                format_rational(spec.bounds.lo) + ", " + format_rational(spec.bounds.hi) + "]");
  }
}

}  // namespace

void GameSpec::validate() const {
  if (alphabets.num_x() == 0 || alphabets.num_y() == 0) throw Error("alphabet empty");
  if (bounds.lo > bounds.hi) throw Error("bounds: lower bound exceeds upper bound");
  const std::size_t nz = alphabets.num_joint();
  for (JointMove z : start_position.moves()) {
    if (z >= nz) throw Error("start position uses a joint move outside the alphabet");
  }
  switch (kind) {
    case GameKind::kMatrix: {
      if (matrix.size() != alphabets.num_x()) {
        throw Error("matrix dimension mismatch: expected " + std::to_string(alphabets.num_x()) +
                    " rows, got " + std::to_string(matrix.size()));
      }
      for (const auto& row : matrix) {
        if (row.size() != alphabets.num_y()) {
          throw Error("matrix dimension mismatch: expected " + std::to_string(alphabets.num_y()) +
                      " columns, got " + std::to_string(row.size()));
        }
        for (const auto& v : row) check_in_bounds(*this, v, "matrix");
      }
      if (start_position.length() > 1) throw Error("start position beyond the matrix round");
      return;
    }
    case GameKind::kFinite: {
      if (automata.size() != 1) throw Error("finite game needs exactly one automaton");
      if (horizon < 0) throw Error("finite game length must be nonnegative");
      if (start_position.length() > static_cast<std::size_t>(horizon)) {
        throw Error("start position beyond the horizon");
      }
      const auto& a = automata.front();
      if (a.num_joint() != nz) throw Error("automaton alphabet mismatch");
      for (const auto& s : a.states()) {
        if (s.u) check_in_bounds(*this, *s.u, "state '" + s.name + "'");
      }
      // Every state in which play can end must carry a payoff.
      std::vector<char> layer(a.num_states(), 0);
      layer[a.run(start_position)] = 1;
      for (std::size_t t = start_position.length(); t <= static_cast<std::size_t>(horizon); ++t) {
        std::vector<char> next(a.num_states(), 0);
        for (StateId q = 0; q < a.num_states(); ++q) {
          if (!layer[q]) continue;
          const auto& s = a.state(q);
          if ((s.terminal || t == static_cast<std::size_t>(horizon)) && !s.u) {
            throw Error("missing payoff label at horizon for state '" + s.name + "'");
          }
          if (s.terminal) continue;
          for (std::size_t z = 0; z < nz; ++z) next[a.next(q, static_cast<JointMove>(z))] = 1;
        }
        layer = std::move(next);
      }
      return;
    }
    case GameKind::kGeneralizedOpen: {
      if (automata.size() != 1) throw Error("generalized-open game needs exactly one automaton");
      const auto& a = automata.front();
      if (a.num_joint() != nz) throw Error("automaton alphabet mismatch");
      auto reach = a.reachable_from(a.start());
      for (StateId q = 0; q < a.num_states(); ++q) {
        const auto& s = a.state(q);
        if (!s.u) {
          if (reach[q]) throw Error("state '" + s.name + "' has no u value");
          continue;
        }
        check_in_bounds(*this, *s.u, "state '" + s.name + "'");
      }
      return;
    }
    case GameKind::kOpenSet:
    case GameKind::kGDelta:
    case GameKind::kUnion: {
      if (automata.empty()) throw Error("game '" + name + "' has no automaton");
      if (kind != GameKind::kUnion && automata.size() != 1) {
        throw Error(std::string(kind_name(kind)) + " game needs exactly one automaton");
      }
      for (const auto& a : automata) {
        if (a.num_joint() != nz) throw Error("automaton alphabet mismatch");
      }
      check_in_bounds(*this, Rational(0), "indicator");
      check_in_bounds(*this, Rational(1), "indicator");
      return;
    }
  }
}

namespace {

bool labels_carry_payoff(const GameSpec& spec) {
  return spec.kind == GameKind::kFinite ||
         (spec.kind == GameKind::kGeneralizedOpen && !spec.has_affine());
}

PayoffAutomaton map_labels(const PayoffAutomaton& a, const auto& fn) {
  auto states = a.states();
  for (auto& s : states) {
    if (s.u) s.u = fn(*s.u);
  }
  return PayoffAutomaton(a.name(), a.num_joint(), std::move(states), a.start(), a.transitions());
}

PayoffAutomaton swap_roles(const PayoffAutomaton& a, const MoveAlphabets& old_alphabets) {
  const std::size_t nx = old_alphabets.num_x();
  const std::size_t ny = old_alphabets.num_y();
  std::vector<StateId> transitions(a.num_states() * a.num_joint());
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) {
        transitions[q * a.num_joint() + y * nx + x] = a.next(q, old_alphabets.joint(x, y));
      }
    }
  }
  return PayoffAutomaton(a.name(), a.num_joint(), a.states(), a.start(), std::move(transitions));
}

}  // namespace

GameSpec scale_shift_payoff(const GameSpec& spec, const Rational& a, const Rational& c) {
  if (a < 0) throw Error("scale_shift_payoff: scale must be nonnegative");
  GameSpec out = spec;
  auto affine = [&](const Rational& v) { return Rational(a * v + c); };
  if (spec.kind == GameKind::kMatrix && !spec.has_affine()) {
    for (auto& row : out.matrix) {
      for (auto& v : row) v = affine(v);
    }
  } else if (labels_carry_payoff(spec) && !spec.has_affine()) {
    out.automata.front() = map_labels(spec.automata.front(), affine);
  } else {
    out.scale = a * spec.scale;
    out.offset = a * spec.offset + c;
  }
  out.bounds = PayoffBounds{affine(spec.bounds.lo), affine(spec.bounds.hi)};
  return out;
}

GameSpec switch_players(const GameSpec& spec) {
  GameSpec out = spec;
  out.alphabets = spec.alphabets.swapped();
  auto negate = [](const Rational& v) { return Rational(-v); };
  if (spec.kind == GameKind::kMatrix) {
    out.matrix.assign(spec.alphabets.num_y(), std::vector<Rational>(spec.alphabets.num_x()));
    for (std::size_t x = 0; x < spec.alphabets.num_x(); ++x) {
      for (std::size_t y = 0; y < spec.alphabets.num_y(); ++y) out.matrix[y][x] = -spec.matrix[x][y];
    }
  }
  for (auto& a : out.automata) {
    a = swap_roles(a, spec.alphabets);
    if (spec.kind == GameKind::kFinite) a = map_labels(a, negate);
  }
  if (spec.kind != GameKind::kMatrix && spec.kind != GameKind::kFinite) {
    out.scale = -spec.scale;
  }
  out.offset = -spec.offset;
  std::vector<JointMove> moves;
  for (JointMove z : spec.start_position.moves()) {
    moves.push_back(out.alphabets.joint(spec.alphabets.y_of(z), spec.alphabets.x_of(z)));
  }
  out.start_position = Position(std::move(moves));
  out.bounds = PayoffBounds{-spec.bounds.hi, -spec.bounds.lo};
  return out;
}

GameSpec matrix_as_finite(const GameSpec& spec) {
  if (spec.kind != GameKind::kMatrix) throw Error("matrix_as_finite: not a matrix game");
  const auto& al = spec.alphabets;
  std::vector<StateLabel> states;
  StateLabel root;
  root.name = "root";
  states.push_back(root);
  std::vector<StateId> transitions;
  for (std::size_t z = 0; z < al.num_joint(); ++z) transitions.push_back(static_cast<StateId>(1 + z));
  for (std::size_t x = 0; x < al.num_x(); ++x) {
    for (std::size_t y = 0; y < al.num_y(); ++y) {
      StateLabel leaf;
      leaf.name = "m" + std::to_string(x) + "_" + std::to_string(y);
      leaf.u = spec.scale * spec.matrix[x][y] + spec.offset;
      leaf.terminal = true;
      states.push_back(std::move(leaf));
      for (std::size_t z = 0; z < al.num_joint(); ++z) transitions.push_back(kNoState);
    }
  }
  GameSpec out;
  out.name = spec.name;
  out.alphabets = al;
  out.kind = GameKind::kFinite;
  out.horizon = 1;
  out.automata.emplace_back("matrix", al.num_joint(), std::move(states), 0, std::move(transitions));
  out.bounds = spec.bounds;
  out.start_position = spec.start_position;
  return out;
}

GameSpec subgame(const GameSpec& spec, const Position& p) {
  std::vector<JointMove> moves(spec.start_position.moves().begin(),
                               spec.start_position.moves().end());
  moves.insert(moves.end(), p.moves().begin(), p.moves().end());
  GameSpec out = spec;
  out.start_position = Position(std::move(moves));
  out.validate();
  return out;
}

GameSpec subgame_at_state(const GameSpec& spec, StateId state, int rounds_played) {
  GameSpec base = spec.kind == GameKind::kMatrix ? matrix_as_finite(spec) : spec;
  if (base.kind != GameKind::kFinite) throw Error("subgame_at_state: finite games only");
  int remaining = base.horizon - static_cast<int>(base.start_position.length()) - rounds_played;
  if (remaining < 0) throw Error("subgame_at_state: beyond the horizon");
  base.automata.front() = base.automata.front().with_start(state);
  base.start_position = Position{};
  base.horizon = remaining;
  return base;
}

}  // namespace bwgame
