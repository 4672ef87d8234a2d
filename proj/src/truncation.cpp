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

#include "bwgame/truncation.hpp"

#include <deque>
#include <optional>
#include <tuple>
#include <variant>

namespace bwgame {

Boundary Boundary::at_depth(int depth) {
  if (depth < 0) throw Error("boundary depth must be nonnegative");
  Boundary b;
  b.type_ = Type::kDepth;
  b.depth_ = depth;
  return b;
}

Boundary Boundary::at_states(std::set<std::string> states) {
  Boundary b;
  b.type_ = Type::kStates;
  b.states_ = std::move(states);
  return b;
}

Boundary Boundary::at_positions(std::vector<Position> positions) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = 0; j < positions.size(); ++j) {
      if (i != j && positions[i].is_prefix_of(positions[j])) {
        throw Error("boundary is not an antichain: one position precedes or equals another");
      }
    }
  }
  Boundary b;
  b.type_ = Type::kPositions;
  b.positions_ = std::move(positions);
  return b;
}

namespace {

// The finite spec's automaton tracked together with the round and, for
// position boundaries, a trie node.
struct Product {
  GameSpec spec;  // finite form
  int rounds = 0;
  std::size_t nz = 0;
  std::vector<StateId> orig;
  std::vector<int> round;
  std::vector<int> node;
  std::vector<std::optional<std::string>> key;
  std::vector<StateId> next;

  bool stops(StateId p) const {
    return key[p].has_value() || spec.automaton().state(orig[p]).terminal || round[p] >= rounds;
  }
};

Product build_product(const GameSpec& input, const Boundary& boundary) {
  Product prod;
  prod.spec = input.kind == GameKind::kMatrix ? matrix_as_finite(input) : input;
  if (prod.spec.kind != GameKind::kFinite) {
    throw Error("truncation needs a finite game; '" + input.name + "' is " +
                std::string(kind_name(input.kind)));
  }
  prod.spec.validate();
  const auto& a = prod.spec.automaton();
  const auto& al = prod.spec.alphabets;
  prod.nz = al.num_joint();
  prod.rounds = prod.spec.horizon - static_cast<int>(prod.spec.start_position.length());

  std::set<StateId> boundary_states;
  for (const auto& name : boundary.states()) {
    auto q = a.find(name);
    if (!q) throw Error("boundary names unknown state '" + name + "'");
    boundary_states.insert(*q);
  }
  // Trie over boundary positions.
  std::vector<std::vector<int>> trie{std::vector<int>(prod.nz, -1)};
  std::vector<int> leaf{-1};
  for (std::size_t i = 0; i < boundary.positions().size(); ++i) {
    const auto& p = boundary.positions()[i];
    if (p.length() > static_cast<std::size_t>(prod.rounds)) {
      throw Error("boundary position beyond the horizon");
    }
    int n = 0;
    for (JointMove z : p.moves()) {
      if (z >= prod.nz) throw Error("boundary position outside the alphabet");
      if (trie[n][z] < 0) {
        trie[n][z] = static_cast<int>(trie.size());
        trie.emplace_back(prod.nz, -1);
        leaf.push_back(-1);
      }
      n = trie[n][z];
    }
    leaf[n] = static_cast<int>(i);
  }
  const bool use_trie = boundary.type() == Boundary::Type::kPositions;

  auto boundary_key = [&](StateId q, int t, int n) -> std::optional<std::string> {
    switch (boundary.type()) {
      case Boundary::Type::kDepth:
        if (t == boundary.depth()) return a.state(q).name + "@" + std::to_string(t);
        return std::nullopt;
      case Boundary::Type::kStates:
        if (boundary_states.count(q)) return a.state(q).name + "@" + std::to_string(t);
        return std::nullopt;
      case Boundary::Type::kPositions:
        if (n >= 0 && leaf[n] >= 0) {
          return format_position(boundary.positions()[static_cast<std::size_t>(leaf[n])], al);
        }
        return std::nullopt;
    }
    return std::nullopt;
  };

  using Key = std::tuple<StateId, int, int>;
  std::map<Key, StateId> index;
  std::deque<Key> queue;
  auto intern = [&](const Key& k) {
    auto [it, inserted] = index.emplace(k, static_cast<StateId>(prod.orig.size()));
    if (inserted) {
      auto [q, t, n] = k;
      prod.orig.push_back(q);
      prod.round.push_back(t);
      prod.node.push_back(n);
      prod.key.push_back(boundary_key(q, t, n));
      prod.next.insert(prod.next.end(), prod.nz, kNoState);
      queue.push_back(k);
    }
    return it->second;
  };
  intern(Key{a.run(prod.spec.start_position), 0, use_trie ? 0 : -1});
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    const StateId id = index.at(k);
    if (prod.stops(id)) continue;
    auto [q, t, n] = k;
    for (std::size_t z = 0; z < prod.nz; ++z) {
      int child = n >= 0 ? trie[static_cast<std::size_t>(n)][z] : -1;
      prod.next[id * prod.nz + z] = intern(Key{a.next(q, static_cast<JointMove>(z)), t + 1, child});
    }
  }
  return prod;
}

std::string product_name(const Product& prod, StateId p) {
  std::string name = prod.spec.automaton().state(prod.orig[p]).name + "@" +
                     std::to_string(prod.round[p]);
  if (prod.node[p] >= 0) name += "#" + std::to_string(prod.node[p]);
  return name;
}

}  // namespace

std::vector<BoundaryPoint> boundary_points(const GameSpec& spec, const Boundary& boundary) {
  Product prod = build_product(spec, boundary);
  std::map<std::string, BoundaryPoint> points;
  for (StateId p = 0; p < prod.orig.size(); ++p) {
    if (prod.key[p]) points.emplace(*prod.key[p], BoundaryPoint{*prod.key[p], prod.orig[p], prod.round[p]});
  }
  std::vector<BoundaryPoint> out;
  for (auto& [k, v] : points) out.push_back(v);
  return out;
}

GameSpec truncate(const GameSpec& spec, const Boundary& boundary,
                  const std::map<std::string, Rational>& boundary_values) {
  Product prod = build_product(spec, boundary);
  const auto& a = prod.spec.automaton();
  std::vector<StateLabel> states;
  for (StateId p = 0; p < prod.orig.size(); ++p) {
    StateLabel s;
    const auto& base = a.state(prod.orig[p]);
    s.name = product_name(prod, p);
    s.accepting = base.accepting;
    if (prod.key[p]) {
      auto it = boundary_values.find(*prod.key[p]);
      if (it == boundary_values.end()) throw Error("no boundary value for '" + *prod.key[p] + "'");
      if (it->second < prod.spec.bounds.lo || it->second > prod.spec.bounds.hi) {
        throw Error("boundary value for '" + *prod.key[p] + "' is outside the payoff bounds");
      }
      s.u = it->second;
      s.terminal = true;
    } else {
      s.u = base.u;
      s.terminal = prod.stops(p);
    }
    states.push_back(std::move(s));
  }
  GameSpec out = prod.spec;
  out.name = spec.name;
  out.horizon = prod.rounds;
  out.start_position = Position{};
  out.automata = {PayoffAutomaton(a.name(), prod.nz, std::move(states), 0, prod.next)};
  out.validate();
  return out;
}

BehavioralStrategy stitch_strategies(const GameSpec& spec, const Boundary& boundary,
                                     const BehavioralStrategy& outer,
                                     const std::map<std::string, BehavioralStrategy>& at_boundary) {
  Product prod = build_product(spec, boundary);
  const auto& al = prod.spec.alphabets;
  const std::size_t nz = prod.nz;
  if (!(outer.alphabets() == al)) throw Error("stitch: outer strategy alphabet mismatch");
  std::set<std::string> keys;
  for (const auto& k : prod.key) {
    if (k) keys.insert(*k);
  }
  for (const auto& [k, inner] : at_boundary) {
    if (!keys.count(k)) throw Error("stitch: '" + k + "' is not a boundary key");
    if (inner.owner() != outer.owner() || !(inner.alphabets() == al)) {
      throw Error("stitch: inner strategy for '" + k + "' has a different owner or alphabet");
    }
  }
  if (outer.form() == BehavioralStrategy::Form::kTable) {
    for (const auto& [pos, row] : outer.table()) {
      StateId p = 0;
      for (std::size_t len = 0;; ++len) {
        if (prod.key[p]) {
          throw Error("stitch: overlapping domains; outer strategy defines position " +
                      format_position(pos, al) + " at or after the boundary");
        }
        if (len == pos.length() || prod.stops(p)) break;
        p = prod.next[p * nz + pos[len]];
      }
    }
  }

  // Phase A: (product state, outer state). Phase B: (boundary key, inner state).
  using AKey = std::pair<StateId, StateId>;
  using BKey = std::pair<std::string, StateId>;
  using Key = std::variant<AKey, BKey>;
  StrategyMachine m;
  std::map<Key, StateId> index;
  std::deque<Key> queue;
  auto enter = [&](StateId p, StateId o) -> Key {
    if (prod.key[p]) {
      auto it = at_boundary.find(*prod.key[p]);
      return BKey{*prod.key[p], it == at_boundary.end() ? kNoState : it->second.start()};
    }
    return AKey{p, o};
  };
  auto intern = [&](const Key& k) -> StateId {
    if (auto* b = std::get_if<BKey>(&k); b && b->second == kNoState) return kNoState;
    auto [it, inserted] = index.emplace(k, static_cast<StateId>(m.names.size()));
    if (inserted) {
      m.names.push_back("s" + std::to_string(it->second));
      m.rows.emplace_back();
      m.next.insert(m.next.end(), nz, kNoState);
      queue.push_back(k);
    }
    return it->second;
  };
  StateId start = intern(enter(0, outer.start()));
  if (start == kNoState) return BehavioralStrategy::uniform(outer.owner(), al);
  m.start = start;
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    const StateId id = index.at(k);
    if (auto* a = std::get_if<AKey>(&k)) {
      auto [p, o] = *a;
      m.rows[id] = outer.exact_row(o);
      if (prod.stops(p)) continue;
      for (std::size_t z = 0; z < nz; ++z) {
        auto jz = static_cast<JointMove>(z);
        m.next[id * nz + z] = intern(enter(prod.next[p * nz + z], outer.next(o, jz)));
      }
    } else {
      const auto& [key, i] = std::get<BKey>(k);
      const auto& inner = at_boundary.at(key);
      m.rows[id] = inner.exact_row(i);
      for (std::size_t z = 0; z < nz; ++z) {
        m.next[id * nz + z] = intern(BKey{key, inner.next(i, static_cast<JointMove>(z))});
      }
    }
  }
  return BehavioralStrategy::from_machine(outer.owner(), al, std::move(m));
}

}  // namespace bwgame
