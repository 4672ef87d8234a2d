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

#include "bwgame/automaton_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace bwgame {
namespace {

// Breadth-first product construction. `Key` identifies product states;
// `expand` maps (key, z) to the successor key; `label` builds the state.
template <class Key, class Expand, class Label>
PayoffAutomaton build_product(std::string name, std::size_t nz, const Key& start, Expand expand,
                              Label label) {
  std::map<Key, StateId> index;
  std::vector<Key> keys;
  std::deque<StateId> queue;
  auto intern = [&](const Key& k) {
    auto [it, inserted] = index.emplace(k, static_cast<StateId>(keys.size()));
    if (inserted) {
      keys.push_back(k);
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(start);
  std::vector<StateLabel> states;
  std::vector<StateId> transitions;
  while (!queue.empty()) {
    StateId id = queue.front();
    queue.pop_front();
    if (states.size() <= id) states.resize(id + 1);
    if (transitions.size() < (id + 1) * nz) transitions.resize((id + 1) * nz, kNoState);
    Key key = keys[id];
    states[id] = label(key, id);
    if (states[id].terminal) continue;
    for (std::size_t z = 0; z < nz; ++z) {
      StateId t = intern(expand(key, static_cast<JointMove>(z)));
      transitions[id * nz + z] = t;
    }
  }
  states.resize(keys.size());
  transitions.resize(keys.size() * nz, kNoState);
  return PayoffAutomaton(std::move(name), nz, std::move(states), 0, std::move(transitions));
}

}  // namespace

PayoffAutomaton running_sup(const PayoffAutomaton& a) {
  const std::size_t nz = a.num_joint();
  auto label_of = [&](StateId q) -> const Rational& {
    const auto& u = a.state(q).u;
    if (!u) throw Error("state '" + a.state(q).name + "' has no u value");
    return *u;
  };
  auto reach = a.reachable_from(a.start());
  bool monotone = true;
  for (StateId q = 0; q < a.num_states() && monotone; ++q) {
    if (!reach[q] || a.state(q).terminal) continue;
    for (std::size_t z = 0; z < nz; ++z) {
      if (label_of(a.next(q, static_cast<JointMove>(z))) < label_of(q)) {
        monotone = false;
        break;
      }
    }
  }
  if (monotone) return a;

  using Key = std::pair<StateId, Rational>;
  return build_product(
      a.name(), nz, Key{a.start(), label_of(a.start())},
      [&](const Key& k, JointMove z) {
        StateId t = a.next(k.first, z);
        return Key{t, std::max(k.second, label_of(t))};
      },
      [&](const Key& k, StateId id) {
        StateLabel s;
        s.name = a.state(k.first).name + "_" + std::to_string(id);
        s.u = k.second;
        s.accepting = a.state(k.first).accepting;
        s.terminal = a.state(k.first).terminal;
        return s;
      });
}

PayoffAutomaton open_set_indicator(const PayoffAutomaton& a) {
  auto states = a.states();
  auto transitions = a.transitions();
  const std::size_t nz = a.num_joint();
  for (StateId q = 0; q < states.size(); ++q) {
    auto& s = states[q];
    s.u = Rational(s.accepting ? 1 : 0);
    if (s.accepting) {
      s.terminal = true;
      for (std::size_t z = 0; z < nz; ++z) transitions[q * nz + z] = q;
    }
  }
  return PayoffAutomaton(a.name(), nz, std::move(states), a.start(), std::move(transitions));
}

PayoffAutomaton union_indicator(const std::vector<PayoffAutomaton>& components) {
  if (components.empty()) throw Error("union of zero open sets");
  const std::size_t nz = components.front().num_joint();
  for (const auto& c : components) {
    if (c.num_joint() != nz) throw Error("union: alphabet mismatch between automata");
  }
  // Empty key = the absorbing "hit" state.
  using Key = std::vector<StateId>;
  auto settle = [&](Key k) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (components[i].state(k[i]).accepting) return Key{};
    }
    return k;
  };
  Key start;
  for (const auto& c : components) start.push_back(c.start());
  std::string name = components.front().name();
  for (std::size_t i = 1; i < components.size(); ++i) name += "+" + components[i].name();
  return build_product(
      name, nz, settle(start),
      [&](const Key& k, JointMove z) {
        Key t(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) t[i] = components[i].next(k[i], z);
        return settle(std::move(t));
      },
      [&](const Key& k, StateId id) {
        StateLabel s;
        if (k.empty()) {
          s.name = "hit";
          s.u = Rational(1);
          s.accepting = true;
          s.terminal = true;
        } else {
          s.name = "s" + std::to_string(id);
          s.u = Rational(0);
        }
        return s;
      });
}

PayoffAutomaton visit_count_indicator(const PayoffAutomaton& a, int k) {
  if (k < 1) throw Error("visit count must be at least 1");
  using Key = std::pair<StateId, int>;  // count == k means hit
  auto visit = [&](StateId q, int c) {
    int n = std::min(k, c + (a.state(q).accepting ? 1 : 0));
    return n == k ? Key{kNoState, k} : Key{q, n};
  };
  return build_product(
      a.name() + "_x" + std::to_string(k), a.num_joint(), visit(a.start(), 0),
      [&](const Key& key, JointMove z) { return visit(a.next(key.first, z), key.second); },
      [&](const Key& key, StateId) {
        StateLabel s;
        if (key.second == k) {
          s.name = "hit";
          s.u = Rational(1);
          s.accepting = true;
          s.terminal = true;
        } else {
          s.name = a.state(key.first).name + "_c" + std::to_string(key.second);
          s.u = Rational(0);
        }
        return s;
      });
}

std::vector<std::optional<Rational>> reachable_sup(const PayoffAutomaton& a) {
  std::vector<std::optional<Rational>> sup(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) sup[q] = a.state(q).u;
  auto better = [](const std::optional<Rational>& x, const std::optional<Rational>& y) {
    return y && (!x || *y > *x);
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId q = 0; q < a.num_states(); ++q) {
      for (std::size_t z = 0; z < a.num_joint(); ++z) {
        const auto& t = sup[a.next(q, static_cast<JointMove>(z))];
        if (better(sup[q], t)) {
          sup[q] = t;
          changed = true;
        }
      }
    }
  }
  return sup;
}

std::vector<char> inevitably_recurrent(const PayoffAutomaton& a) {
  const std::size_t n = a.num_states();
  const std::size_t nz = a.num_joint();
  // Prune non-accepting states without a non-accepting successor; what
  // remains admits an infinite run avoiding accepting states.
  std::vector<char> alive(n, 0);
  for (StateId q = 0; q < n; ++q) alive[q] = !a.state(q).accepting;
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId q = 0; q < n; ++q) {
      if (!alive[q]) continue;
      bool has_successor = false;
      for (std::size_t z = 0; z < nz && !has_successor; ++z) {
        has_successor = alive[a.next(q, static_cast<JointMove>(z))];
      }
      if (!has_successor) {
        alive[q] = 0;
        changed = true;
      }
    }
  }
  // Bad states reach an avoiding run.
  std::vector<char> bad = alive;
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId q = 0; q < n; ++q) {
      if (bad[q]) continue;
      for (std::size_t z = 0; z < nz; ++z) {
        if (bad[a.next(q, static_cast<JointMove>(z))]) {
          bad[q] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<char> good(n);
  for (StateId q = 0; q < n; ++q) good[q] = !bad[q];
  return good;
}

bool same_hit_language(const PayoffAutomaton& a, const PayoffAutomaton& b) {
  if (a.num_joint() != b.num_joint()) return false;
  auto hit = [](const PayoffAutomaton& m, StateId q) { return m.state(q).accepting; };
  std::map<std::pair<StateId, StateId>, bool> seen;
  std::vector<std::pair<StateId, StateId>> stack{{a.start(), b.start()}};
  seen[stack.front()] = true;
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (hit(a, p) != hit(b, q)) return false;
    if (hit(a, p)) continue;
    for (std::size_t z = 0; z < a.num_joint(); ++z) {
      std::pair<StateId, StateId> t{a.next(p, static_cast<JointMove>(z)),
                                    b.next(q, static_cast<JointMove>(z))};
      if (seen.emplace(t, true).second) stack.push_back(t);
    }
  }
  return true;
}

}  // namespace bwgame
