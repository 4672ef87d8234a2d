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

#include "bwgame/strategy.hpp"

#include <set>
#include <unordered_map>

namespace bwgame {

Distribution normalize_row(const Distribution& row, std::size_t num_moves) {
  if (row.size() != num_moves) {
    throw Error("non-stochastic row: expected " + std::to_string(num_moves) + " entries, got " +
                std::to_string(row.size()));
  }
  Rational sum(0);
  for (const auto& p : row) {
    if (p < 0) throw Error("non-stochastic row: negative probability " + format_rational(p));
    sum += p;
  }
  if (abs_value(Rational(sum - 1)) > Rational(1, 1000000000)) {
    throw Error("non-stochastic row: probabilities sum to " + format_rational(sum));
  }
  Distribution out;
  out.reserve(row.size());
  for (const auto& p : row) out.push_back(p / sum);
  return out;
}

BehavioralStrategy::BehavioralStrategy(Player owner, MoveAlphabets alphabets, Form form)
    : owner_(owner), alphabets_(std::move(alphabets)), form_(form) {
  if (alphabets_.num_x() == 0 || alphabets_.num_y() == 0) throw Error("alphabet empty");
  const std::size_t n = num_moves();
  uniform_exact_.assign(n, Rational(1, static_cast<long>(n)));
  uniform_approx_.assign(n, 1.0 / static_cast<double>(n));
}

BehavioralStrategy BehavioralStrategy::uniform(Player owner, MoveAlphabets alphabets) {
  BehavioralStrategy s(owner, std::move(alphabets), Form::kUniform);
  s.machine_.names = {"uniform"};
  s.machine_.rows = {s.uniform_exact_};
  s.machine_.next.assign(s.alphabets_.num_joint(), 0);
  s.finish();
  return s;
}

BehavioralStrategy BehavioralStrategy::pure(Player owner, MoveAlphabets alphabets, std::size_t move) {
  const std::size_t n = alphabets.num_moves(owner);
  if (move >= n) throw Error("pure strategy: move index out of range");
  Distribution row(n, Rational(0));
  row[move] = 1;
  StrategyMachine m;
  m.names = {"always"};
  m.rows = {row};
  m.next.assign(alphabets.num_joint(), 0);
  return from_machine(owner, std::move(alphabets), std::move(m));
}

BehavioralStrategy BehavioralStrategy::from_table(Player owner, MoveAlphabets alphabets,
                                                  std::map<Position, Distribution> table) {
  BehavioralStrategy s(owner, std::move(alphabets), Form::kTable);
  const std::size_t nz = s.alphabets_.num_joint();
  for (auto& [p, row] : table) {
    for (JointMove z : p.moves()) {
      if (z >= nz) throw Error("strategy table: position outside the alphabet");
    }
    row = normalize_row(row, s.num_moves());
  }
  s.table_ = std::move(table);
  // Trie over all prefixes of table positions.
  std::map<Position, StateId> node_of;
  auto node = [&](const Position& p) {
    auto [it, inserted] = node_of.emplace(p, static_cast<StateId>(s.machine_.names.size()));
    if (inserted) {
      s.machine_.names.push_back("n" + std::to_string(it->second));
      s.machine_.rows.push_back(s.uniform_exact_);
      s.machine_.next.insert(s.machine_.next.end(), nz, kNoState);
    }
    return it->second;
  };
  node(Position{});
  for (const auto& [p, row] : s.table_) {
    StateId parent = node(Position{});
    for (std::size_t len = 1; len <= p.length(); ++len) {
      StateId child = node(p.prefix(len));
      s.machine_.next[parent * nz + p[len - 1]] = child;
      parent = child;
    }
    s.machine_.rows[parent] = row;
  }
  s.machine_.start = 0;
  s.finish();
  return s;
}

BehavioralStrategy BehavioralStrategy::from_machine(Player owner, MoveAlphabets alphabets,
                                                    StrategyMachine machine) {
  BehavioralStrategy s(owner, std::move(alphabets), Form::kMachine);
  const std::size_t nz = s.alphabets_.num_joint();
  const std::size_t ns = machine.names.size();
  if (ns == 0) throw Error("strategy machine has no states");
  if (machine.rows.size() != ns || machine.next.size() != ns * nz) {
    throw Error("strategy machine tables have inconsistent sizes");
  }
  if (machine.start >= ns) throw Error("strategy machine start out of range");
  std::set<std::string_view> names;
  for (const auto& n : machine.names) {
    if (!names.insert(n).second) throw Error("duplicate state '" + n + "'");
  }
  for (StateId t : machine.next) {
    if (t != kNoState && t >= ns) throw Error("strategy machine transition out of range");
  }
  for (auto& row : machine.rows) row = normalize_row(row, s.num_moves());
  s.machine_ = std::move(machine);
  s.finish();
  return s;
}

void BehavioralStrategy::finish() {
  approx_rows_.clear();
  for (const auto& row : machine_.rows) {
    std::vector<double> r;
    for (const auto& p : row) r.push_back(to_double(p));
    approx_rows_.push_back(std::move(r));
  }
}

std::size_t BehavioralStrategy::table_depth() const {
  std::size_t depth = 0;
  for (const auto& [p, row] : table_) depth = std::max(depth, p.length() + 1);
  return depth;
}

StateId BehavioralStrategy::run(const Position& p) const {
  StateId s = machine_.start;
  for (JointMove z : p.moves()) {
    if (z >= alphabets_.num_joint()) throw Error("position uses a joint move outside the alphabet");
    s = next(s, z);
  }
  return s;
}

bool BehavioralStrategy::operator==(const BehavioralStrategy& other) const {
  if (owner_ != other.owner_ || !(alphabets_ == other.alphabets_) || form_ != other.form_) {
    return false;
  }
  switch (form_) {
    case Form::kUniform: return true;
    case Form::kTable: return table_ == other.table_;
    case Form::kMachine: break;
  }
  const auto& a = machine_;
  const auto& b = other.machine_;
  if (a.names.size() != b.names.size()) return false;
  std::unordered_map<std::string_view, StateId> theirs;
  for (StateId q = 0; q < b.names.size(); ++q) theirs[b.names[q]] = q;
  std::vector<StateId> map(a.names.size());
  for (StateId q = 0; q < a.names.size(); ++q) {
    auto it = theirs.find(a.names[q]);
    if (it == theirs.end() || a.rows[q] != b.rows[it->second]) return false;
    map[q] = it->second;
  }
  if (map[a.start] != b.start) return false;
  const std::size_t nz = alphabets_.num_joint();
  for (StateId q = 0; q < a.names.size(); ++q) {
    for (std::size_t z = 0; z < nz; ++z) {
      StateId ta = a.next[q * nz + z];
      StateId tb = b.next[map[q] * nz + z];
      if ((ta == kNoState) != (tb == kNoState)) return false;
      if (ta != kNoState && map[ta] != tb) return false;
    }
  }
  return true;
}

template <Scalar T>
T measure_of_position(const BehavioralStrategy& sigma, const BehavioralStrategy& tau,
                      const Position& p) {
  if (sigma.owner() != Player::kOne || tau.owner() != Player::kTwo) {
    throw Error("measure_of_position: expected a player I and a player II strategy");
  }
  if (!(sigma.alphabets() == tau.alphabets())) {
    throw Error("measure_of_position: strategies use different move alphabets");
  }
  const auto& al = sigma.alphabets();
  T measure(1);
  StateId s = sigma.start();
  StateId t = tau.start();
  for (JointMove z : p.moves()) {
    if (z >= al.num_joint()) {
      throw Error("measure_of_position: position uses joint move " + std::to_string(z) +
                  " but the alphabet has " + std::to_string(al.num_joint()));
    }
    measure *= sigma.row<T>(s)[al.x_of(z)] * tau.row<T>(t)[al.y_of(z)];
    s = sigma.next(s, z);
    t = tau.next(t, z);
  }
  return measure;
}

template double measure_of_position<double>(const BehavioralStrategy&, const BehavioralStrategy&,
                                             const Position&);
template Rational measure_of_position<Rational>(const BehavioralStrategy&,
                                                const BehavioralStrategy&, const Position&);

}  // namespace bwgame
