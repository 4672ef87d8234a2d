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

#include "bwgame/spec_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace bwgame {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

enum class Tok { kWord, kString, kPunct, kArrow, kNewline, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool word_char(std::string_view s, std::size_t i) {
  const char c = s[i];
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  if (c == '_' || c == '.' || c == '@' || c == '~' || c == '+' || c == '/') return true;
  return c == '-' && (i + 1 >= s.size() || s[i + 1] != '>');
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      out.push_back({Tok::kNewline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (c == '"') {
      const int start_col = col;
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
      if (j >= s.size() || s[j] != '"') throw ParseError(line, start_col, "unterminated string");
      out.push_back({Tok::kString, std::string(s.substr(i + 1, j - i - 1)), line, start_col});
      advance(j + 1 - i);
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", line, col});
      advance(2);
    } else if (std::string_view("{}()[],;:=*").find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), line, col});
      advance(1);
    } else if (word_char(s, i)) {
      std::size_t j = i;
      while (j < s.size() && word_char(s, j)) ++j;
      out.push_back({Tok::kWord, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kNewline: return "end of line";
    case Tok::kEnd: return "end of input";
    case Tok::kString: return "\"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok kind, std::string_view text = {}) const {
    return peek().kind == kind && (text.empty() || peek().text == text);
  }
  bool at_punct(std::string_view p) const { return at(Tok::kPunct, p); }
  bool at_word(std::string_view w) const { return at(Tok::kWord, w); }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.col, msg);
  }
  [[noreturn]] void fail_here(const std::string& expected) const {
    fail(peek(), "expected " + expected + ", found " + describe(peek()));
  }

  const Token& expect(Tok kind, std::string_view text, const std::string& what) {
    if (!at(kind, text)) fail_here(what);
    return next();
  }
  const Token& word(const std::string& what) { return expect(Tok::kWord, {}, what); }
  const Token& punct(std::string_view p) { return expect(Tok::kPunct, p, "'" + std::string(p) + "'"); }
  const Token& string(const std::string& what) { return expect(Tok::kString, {}, what); }

  void skip_blank() {
    while (at(Tok::kNewline) || at_punct(";")) next();
  }
  // End of a statement: newline, ';', or end of input.
  void end_statement() {
    if (at(Tok::kEnd)) return;
    if (at(Tok::kNewline) || at_punct(";")) {
      next();
      return;
    }
    fail_here("end of statement");
  }
  bool at_statement_end() const { return at(Tok::kEnd) || at(Tok::kNewline) || at_punct(";"); }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Rational number(Cursor& c, const std::string& what) {
  const Token& t = c.word(what);
  try {
    return parse_rational(t.text);
  } catch (const std::exception&) {
    c.fail(t, "expected " + what + ", found '" + t.text + "'");
  }
}

std::size_t move_index(Cursor& c, const Token& t, const MoveAlphabets& al, Player p) {
  auto idx = al.index_of(p, t.text);
  if (!idx) {
    c.fail(t, "unknown move label '" + t.text + "' for player " + std::string(player_name(p)));
  }
  return *idx;
}

JointMove joint_move(Cursor& c, const MoveAlphabets& al) {
  c.punct("(");
  const Token& x = c.word("move of player I");
  c.punct(",");
  const Token& y = c.word("move of player II");
  c.punct(")");
  return al.joint(move_index(c, x, al, Player::kOne), move_index(c, y, al, Player::kTwo));
}

Position position(Cursor& c, const MoveAlphabets& al) {
  if (c.at_word("e")) {
    c.next();
    return Position{};
  }
  if (!c.at_punct("(")) c.fail_here("position");
  std::vector<JointMove> moves;
  while (c.at_punct("(")) moves.push_back(joint_move(c, al));
  return Position(std::move(moves));
}

std::vector<std::string> label_set(Cursor& c) {
  c.punct("{");
  std::vector<std::string> out;
  if (!c.at_punct("}")) {
    for (;;) {
      out.push_back(c.word("move label").text);
      if (!c.at_punct(",")) break;
      c.next();
    }
  }
  c.punct("}");
  return out;
}

// Transition rule with optional wildcards.
struct Rule {
  std::string from;
  std::optional<std::size_t> x;
  std::optional<std::size_t> y;
  std::string to;
  Token at;
};

Rule rule(Cursor& c, const Token& from, const MoveAlphabets& al) {
  Rule r{from.text, std::nullopt, std::nullopt, {}, from};
  c.punct("(");
  if (c.at_punct("*")) {
    c.next();
  } else {
    r.x = move_index(c, c.word("move of player I or '*'"), al, Player::kOne);
  }
  c.punct(",");
  if (c.at_punct("*")) {
    c.next();
  } else {
    r.y = move_index(c, c.word("move of player II or '*'"), al, Player::kTwo);
  }
  c.punct(")");
  c.expect(Tok::kArrow, {}, "'->'");
  r.to = c.word("target state").text;
  return r;
}

// Resolves rules to a [state * |Z| + z] table; kNoState where no rule applies.
std::vector<StateId> resolve_rules(const Cursor& c, const std::vector<Rule>& rules,
                                   const std::map<std::string, StateId>& ids,
                                   const MoveAlphabets& al) {
  const std::size_t nz = al.num_joint();
  std::vector<StateId> table(ids.size() * nz, kNoState);
  std::vector<int> rank(ids.size() * nz, -1);
  for (const auto& r : rules) {
    auto from = ids.find(r.from);
    if (from == ids.end()) c.fail(r.at, "unknown state '" + r.from + "'");
    auto to = ids.find(r.to);
    if (to == ids.end()) c.fail(r.at, "unknown target state '" + r.to + "'");
    const int specificity = (r.x ? 1 : 0) + (r.y ? 1 : 0);
    for (std::size_t x = 0; x < al.num_x(); ++x) {
      if (r.x && *r.x != x) continue;
      for (std::size_t y = 0; y < al.num_y(); ++y) {
        if (r.y && *r.y != y) continue;
        const std::size_t i = from->second * nz + al.joint(x, y);
        if (rank[i] > specificity) continue;
        if (rank[i] == specificity && table[i] != to->second) {
          c.fail(r.at, "conflicting transitions from '" + r.from + "' on " + al.joint_label(al.joint(x, y)));
        }
        rank[i] = specificity;
        table[i] = to->second;
      }
    }
  }
  return table;
}

struct StateDecl {
  StateLabel label;
  Token at;
};

PayoffAutomaton dfa_block(Cursor& c, const Token& head, const MoveAlphabets& al) {
  const std::string name = c.string("automaton name in quotes").text;
  c.punct("{");
  std::vector<StateDecl> states;
  std::map<std::string, StateId> ids;
  std::vector<Rule> rules;
  std::optional<std::string> start;
  std::optional<Token> start_at;
  for (;;) {
    c.skip_blank();
    if (c.at_punct("}")) {
      c.next();
      break;
    }
    if (c.at(Tok::kEnd)) c.fail_here("'}' closing dfa \"" + name + "\"");
    const Token& first = c.word("dfa statement");
    if (first.text == "start" && !c.at_punct("(")) {
      if (start) c.fail(first, "duplicate start state");
      start = c.word("start state").text;
      start_at = first;
    } else if (first.text == "state" && !c.at_punct("(")) {
      const Token& n = c.word("state name");
      if (ids.count(n.text)) c.fail(n, "duplicate state '" + n.text + "'");
      StateDecl d{StateLabel{n.text, std::nullopt, false, false}, n};
      while (!c.at_statement_end() && !c.at_punct("}")) {
        const Token& opt = c.word("state attribute");
        if (opt.text == "u") {
          c.punct("=");
          if (d.label.u) c.fail(opt, "duplicate u value");
          d.label.u = number(c, "payoff value");
        } else if (opt.text == "accepting") {
          d.label.accepting = true;
        } else if (opt.text == "terminal") {
          d.label.terminal = true;
        } else {
          c.fail(opt, "unknown state attribute '" + opt.text + "'");
        }
      }
      ids.emplace(n.text, static_cast<StateId>(states.size()));
      states.push_back(std::move(d));
    } else {
      rules.push_back(rule(c, first, al));
    }
    if (!c.at_punct("}")) c.end_statement();
  }
  if (!start) c.fail(head, "dfa \"" + name + "\" has no start state");
  auto s = ids.find(*start);
  if (s == ids.end()) c.fail(*start_at, "unknown start state '" + *start + "'");

  const std::size_t nz = al.num_joint();
  auto table = resolve_rules(c, rules, ids, al);
  for (const auto& r : rules) {
    const StateId from = ids.at(r.from);
    if (states[from].label.terminal && r.to != r.from) {
      c.fail(r.at, "terminal state '" + r.from + "' has an outgoing non-self transition");
    }
  }
  for (StateId q = 0; q < states.size(); ++q) {
    for (std::size_t z = 0; z < nz; ++z) {
      auto& t = table[q * nz + z];
      if (t != kNoState) continue;
      if (states[q].label.terminal) {
        t = q;
      } else {
        c.fail(states[q].at, "non-total transition function: state '" + states[q].label.name +
                                 "' has no transition on " + al.joint_label(static_cast<JointMove>(z)));
      }
    }
  }
  std::vector<StateLabel> labels;
  for (auto& d : states) labels.push_back(std::move(d.label));
  try {
    return PayoffAutomaton(name, nz, std::move(labels), s->second, std::move(table));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    c.fail(head, e.what());
  }
}

std::optional<GameKind> kind_from(std::string_view s) {
  for (GameKind k : {GameKind::kMatrix, GameKind::kFinite, GameKind::kGeneralizedOpen,
                     GameKind::kOpenSet, GameKind::kGDelta, GameKind::kUnion}) {
    if (kind_name(k) == s) return k;
  }
  return std::nullopt;
}

PayoffBounds default_bounds(const GameSpec& spec) {
  std::vector<Rational> values;
  if (spec.kind == GameKind::kMatrix) {
    for (const auto& row : spec.matrix) values.insert(values.end(), row.begin(), row.end());
  } else if (spec.kind == GameKind::kFinite || spec.kind == GameKind::kGeneralizedOpen) {
    for (const auto& a : spec.automata) {
      for (const auto& s : a.states()) {
        if (s.u) values.push_back(*s.u);
      }
    }
  } else {
    values = {Rational(0), Rational(1)};
  }
  if (values.empty()) values.push_back(Rational(0));
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  Rational a = spec.scale * *lo + spec.offset;
  Rational b = spec.scale * *hi + spec.offset;
  return a <= b ? PayoffBounds{a, b} : PayoffBounds{b, a};
}

Distribution play_row(Cursor& c, const MoveAlphabets& al, Player owner) {
  c.punct("{");
  Distribution row(al.num_moves(owner), Rational(0));
  std::vector<char> seen(row.size(), 0);
  const Token& open = c.peek();
  if (!c.at_punct("}")) {
    for (;;) {
      const Token& m = c.word("move label");
      const std::size_t i = move_index(c, m, al, owner);
      if (seen[i]) c.fail(m, "duplicate move '" + m.text + "' in row");
      seen[i] = 1;
      c.punct(":");
      const Token& pt = c.peek();
      row[i] = number(c, "probability");
      if (row[i] < 0) c.fail(pt, "non-stochastic row: negative probability");
      if (!c.at_punct(",")) break;
      c.next();
    }
  }
  c.punct("}");
  try {
    return normalize_row(row, row.size());
  } catch (const Error& e) {
    c.fail(open, e.what());
  }
}

}  // namespace

GameSpec parse_game(std::string_view text) {
  Cursor c(lex(text));
  GameSpec spec;
  std::optional<Token> game_at, kind_at, matrix_at, bounds_at;
  std::optional<std::vector<std::string>> xs, ys;
  std::optional<MoveAlphabets> al;
  bool has_bounds = false;
  bool has_affine = false;
  bool has_start = false;
  std::vector<std::pair<Token, std::vector<Rational>>> rows;

  auto need_moves = [&](const Token& t) -> const MoveAlphabets& {
    if (!al) c.fail(t, "moves I and moves II must be declared before '" + t.text + "'");
    return *al;
  };
  for (;;) {
    c.skip_blank();
    if (c.at(Tok::kEnd)) break;
    const Token& key = c.word("statement");
    if (key.text == "game") {
      if (game_at) c.fail(key, "duplicate game line");
      game_at = key;
      spec.name = c.string("game name in quotes").text;
    } else if (key.text == "moves") {
      const Token& who = c.word("I or II");
      if (who.text != "I" && who.text != "II") c.fail(who, "expected I or II, found '" + who.text + "'");
      auto& slot = who.text == "I" ? xs : ys;
      if (slot) c.fail(who, "duplicate moves line for player " + who.text);
      c.punct("=");
      const Token& open = c.peek();
      slot = label_set(c);
      if (slot->empty()) c.fail(open, "alphabet empty");
      std::set<std::string> seen;
      for (const auto& m : *slot) {
        if (!seen.insert(m).second) c.fail(open, "duplicate move label '" + m + "'");
      }
      if (xs && ys) al = MoveAlphabets(*xs, *ys);
    } else if (key.text == "kind") {
      if (kind_at) c.fail(key, "duplicate kind line");
      kind_at = key;
      c.punct("=");
      const Token& k = c.word("game kind");
      auto kind = kind_from(k.text);
      if (!kind) c.fail(k, "unknown game kind '" + k.text + "'");
      spec.kind = *kind;
      if (spec.kind == GameKind::kMatrix) spec.horizon = 1;
      if (spec.kind == GameKind::kFinite) {
        const Token& n = c.word("game length");
        try {
          std::size_t used = 0;
          spec.horizon = std::stoi(n.text, &used);
          if (used != n.text.size() || spec.horizon < 0) throw std::invalid_argument("length");
        } catch (const std::exception&) {
          c.fail(n, "expected a nonnegative game length, found '" + n.text + "'");
        }
      }
    } else if (key.text == "bounds") {
      if (has_bounds) c.fail(key, "duplicate bounds line");
      has_bounds = true;
      bounds_at = key;
      c.punct("=");
      c.punct("[");
      spec.bounds.lo = number(c, "lower bound");
      c.punct(",");
      spec.bounds.hi = number(c, "upper bound");
      c.punct("]");
    } else if (key.text == "affine") {
      if (has_affine) c.fail(key, "duplicate affine line");
      has_affine = true;
      c.punct("=");
      spec.scale = number(c, "scale");
      c.punct(",");
      spec.offset = number(c, "offset");
    } else if (key.text == "start") {
      if (has_start) c.fail(key, "duplicate start line");
      has_start = true;
      const auto& alpha = need_moves(key);
      c.punct("=");
      spec.start_position = position(c, alpha);
    } else if (key.text == "matrix") {
      if (matrix_at) c.fail(key, "duplicate matrix block");
      matrix_at = key;
      need_moves(key);
      c.punct(":");
      for (;;) {
        c.skip_blank();
        if (!c.at(Tok::kWord)) break;
        const Token first = c.peek();
        try {
          (void)parse_rational(first.text);
        } catch (const std::exception&) {
          break;
        }
        std::vector<Rational> row;
        while (!c.at_statement_end()) {
          row.push_back(number(c, "matrix entry"));
          if (c.at_punct(",")) c.next();
        }
        rows.emplace_back(first, std::move(row));
      }
      continue;
    } else if (key.text == "dfa") {
      spec.automata.push_back(dfa_block(c, key, need_moves(key)));
    } else {
      c.fail(key, "unknown statement '" + key.text + "'");
    }
    c.end_statement();
  }

  const Token origin{Tok::kEnd, "", 1, 1};
  if (!game_at) c.fail(origin, "missing game line");
  if (!xs) c.fail(*game_at, "missing moves I line");
  if (!ys) c.fail(*game_at, "missing moves II line");
  if (!kind_at) c.fail(*game_at, "missing kind line");
  spec.alphabets = *al;
  if (spec.kind == GameKind::kMatrix) {
    if (!matrix_at) c.fail(*kind_at, "matrix game needs a matrix block");
    if (!spec.automata.empty()) c.fail(*kind_at, "matrix game takes no dfa block");
    if (rows.size() != al->num_x()) {
      c.fail(*matrix_at, "matrix dimension mismatch: expected " + std::to_string(al->num_x()) +
                             " rows, got " + std::to_string(rows.size()));
    }
    for (auto& [at, row] : rows) {
      if (row.size() != al->num_y()) {
        c.fail(at, "matrix dimension mismatch: expected " + std::to_string(al->num_y()) +
                       " columns, got " + std::to_string(row.size()));
      }
      spec.matrix.push_back(std::move(row));
    }
  } else {
    if (matrix_at) c.fail(*matrix_at, std::string(kind_name(spec.kind)) + " game takes no matrix block");
    if (spec.automata.empty()) c.fail(*kind_at, std::string(kind_name(spec.kind)) + " game needs a dfa block");
  }
  if (!has_bounds) spec.bounds = default_bounds(spec);
  try {
    spec.validate();
  } catch (const Error& e) {
    c.fail(has_bounds && std::string_view(e.what()).find("bounds") != std::string_view::npos
               ? *bounds_at
               : *kind_at,
           e.what());
  }
  return spec;
}

BehavioralStrategy parse_strategy(std::string_view text, const MoveAlphabets& alphabets) {
  Cursor c(lex(text));
  c.skip_blank();
  const Token& head = c.word("'strategy'");
  if (head.text != "strategy") c.fail(head, "expected 'strategy', found '" + head.text + "'");
  const Token& who = c.word("I or II");
  if (who.text != "I" && who.text != "II") c.fail(who, "expected I or II, found '" + who.text + "'");
  const Player owner = who.text == "I" ? Player::kOne : Player::kTwo;
  c.end_statement();

  enum class Shape { kNone, kUniform, kTable, kMachine };
  Shape shape = Shape::kNone;
  auto set_shape = [&](const Token& t, Shape s) {
    if (shape != Shape::kNone && shape != s) {
      c.fail(t, "mixes uniform, table ('at') and state-machine statements");
    }
    shape = s;
  };
  std::map<Position, Distribution> table;
  std::vector<std::pair<std::string, Distribution>> states;
  std::map<std::string, StateId> ids;
  std::vector<Rule> rules;
  std::optional<std::string> start;
  std::optional<Token> start_at;
  const std::size_t moves = alphabets.num_moves(owner);
  for (;;) {
    c.skip_blank();
    if (c.at(Tok::kEnd)) break;
    const Token& key = c.word("strategy statement");
    if (key.text == "uniform" && c.at_statement_end()) {
      if (shape == Shape::kUniform) c.fail(key, "duplicate uniform statement");
      set_shape(key, Shape::kUniform);
    } else if (key.text == "at") {
      set_shape(key, Shape::kTable);
      const Token& where = c.peek();
      Position p = position(c, alphabets);
      const Token& play = c.word("'play'");
      if (play.text != "play") c.fail(play, "expected 'play', found '" + play.text + "'");
      if (table.count(p)) c.fail(where, "duplicate position " + format_position(p, alphabets));
      table.emplace(std::move(p), play_row(c, alphabets, owner));
    } else if (key.text == "start" && !c.at_punct("(")) {
      set_shape(key, Shape::kMachine);
      if (start) c.fail(key, "duplicate start state");
      start = c.word("start state").text;
      start_at = key;
    } else if (key.text == "state" && !c.at_punct("(")) {
      set_shape(key, Shape::kMachine);
      const Token& n = c.word("state name");
      if (ids.count(n.text)) c.fail(n, "duplicate state '" + n.text + "'");
      if (n.text == "at") c.fail(n, "'at' is reserved and cannot name a state");
      Distribution row(moves, Rational(1, static_cast<long>(moves)));
      if (!c.at_statement_end()) {
        const Token& play = c.word("'play'");
        if (play.text != "play") c.fail(play, "expected 'play', found '" + play.text + "'");
        row = play_row(c, alphabets, owner);
      }
      ids.emplace(n.text, static_cast<StateId>(states.size()));
      states.emplace_back(n.text, std::move(row));
    } else {
      set_shape(key, Shape::kMachine);
      rules.push_back(rule(c, key, alphabets));
    }
    c.end_statement();
  }
  switch (shape) {
    case Shape::kNone: c.fail(head, "strategy has no body");
    case Shape::kUniform: return BehavioralStrategy::uniform(owner, alphabets);
    case Shape::kTable: return BehavioralStrategy::from_table(owner, alphabets, std::move(table));
    case Shape::kMachine: break;
  }
  if (!start) c.fail(head, "strategy has no start state");
  auto s = ids.find(*start);
  if (s == ids.end()) c.fail(*start_at, "unknown start state '" + *start + "'");
  StrategyMachine m;
  m.next = resolve_rules(c, rules, ids, alphabets);
  m.start = s->second;
  for (auto& [name, row] : states) {
    m.names.push_back(name);
    m.rows.push_back(std::move(row));
  }
  try {
    return BehavioralStrategy::from_machine(owner, alphabets, std::move(m));
  } catch (const Error& e) {
    c.fail(head, e.what());
  }
}

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out + "}";
}

std::string render_row(const Distribution& row, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += labels[i] + ": " + format_rational(row[i]);
  }
  return out + "}";
}

// Indices sorted by name.
std::vector<StateId> by_name(const std::vector<std::string>& names) {
  std::vector<StateId> order(names.size());
  for (StateId q = 0; q < order.size(); ++q) order[q] = q;
  std::sort(order.begin(), order.end(), [&](StateId a, StateId b) { return names[a] < names[b]; });
  return order;
}

}  // namespace

std::string serialize(const GameSpec& spec) {
  const auto& al = spec.alphabets;
  std::ostringstream out;
  out << "game \"" << spec.name << "\"\n";
  out << "moves I = " << join_labels(al.x_moves()) << "\n";
  out << "moves II = " << join_labels(al.y_moves()) << "\n";
  out << "kind = " << kind_name(spec.kind);
  if (spec.kind == GameKind::kFinite) out << " " << spec.horizon;
  out << "\n";
  out << "bounds = [" << format_rational(spec.bounds.lo) << ", " << format_rational(spec.bounds.hi)
      << "]\n";
  if (spec.has_affine()) {
    out << "affine = " << format_rational(spec.scale) << ", " << format_rational(spec.offset) << "\n";
  }
  if (!spec.start_position.empty()) {
    out << "start = " << format_position(spec.start_position, al) << "\n";
  }
  if (spec.kind == GameKind::kMatrix) {
    out << "matrix:\n";
    for (const auto& row : spec.matrix) {
      out << " ";
      for (const auto& v : row) out << " " << format_rational(v);
      out << "\n";
    }
  }
  for (const auto& a : spec.automata) {
    out << "dfa \"" << a.name() << "\" {\n";
    out << "  start " << a.state(a.start()).name << "\n";
    std::vector<std::string> names;
    for (const auto& s : a.states()) names.push_back(s.name);
    const auto order = by_name(names);
    for (StateId q : order) {
      const auto& s = a.state(q);
      out << "  state " << s.name;
      if (s.u) out << " u=" << format_rational(*s.u);
      if (s.accepting) out << " accepting";
      if (s.terminal) out << " terminal";
      out << "\n";
    }
    for (StateId q : order) {
      if (a.state(q).terminal) continue;
      for (std::size_t z = 0; z < a.num_joint(); ++z) {
        const auto jz = static_cast<JointMove>(z);
        out << "  " << names[q] << " " << al.joint_label(jz) << " -> " << names[a.next(q, jz)] << "\n";
      }
    }
    out << "}\n";
  }
  return out.str();
}

std::string serialize(const BehavioralStrategy& strategy) {
  const auto& al = strategy.alphabets();
  const auto& labels = al.moves(strategy.owner());
  std::ostringstream out;
  out << "strategy " << player_name(strategy.owner()) << "\n";
  switch (strategy.form()) {
    case BehavioralStrategy::Form::kUniform:
      out << "uniform\n";
      break;
    case BehavioralStrategy::Form::kTable:
      // An empty table plays uniformly everywhere.
      if (strategy.table().empty()) out << "uniform\n";
      for (const auto& [p, row] : strategy.table()) {
        out << "at " << format_position(p, al) << " play " << render_row(row, labels) << "\n";
      }
      break;
    case BehavioralStrategy::Form::kMachine: {
      const auto& m = strategy.machine();
      out << "start " << m.names[m.start] << "\n";
      const auto order = by_name(m.names);
      for (StateId q : order) out << "state " << m.names[q] << " play " << render_row(m.rows[q], labels) << "\n";
      const std::size_t nz = al.num_joint();
      for (StateId q : order) {
        for (std::size_t z = 0; z < nz; ++z) {
          const StateId t = m.next[q * nz + z];
          if (t == kNoState) continue;
          out << m.names[q] << " " << al.joint_label(static_cast<JointMove>(z)) << " -> " << m.names[t]
              << "\n";
        }
      }
      break;
    }
  }
  return out.str();
}

}  // namespace bwgame
