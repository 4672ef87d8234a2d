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

#include "bwgame/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "bwgame/examples.hpp"
#include "bwgame/finite_solver.hpp"
#include "bwgame/limit_solver.hpp"
#include "bwgame/simulate.hpp"
#include "bwgame/spec_format.hpp"

namespace bwgame::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kDefaultOpenDepth = 10;

struct RunConfig {
  std::string command;
  std::string game_path;
  std::string sigma_path;
  std::string tau_path;
  std::optional<int> depth;
  double tol = 1e-6;
  int k_max = 8;
  std::uint64_t rollouts = 10000;
  std::uint64_t seed = 0;
  bool json = false;
  bool exact = false;
  // example
  std::string example;
  int n = 5;
  std::string player = "I";
  // solve
  std::string write_sigma;
  std::string write_tau;
};

// Error that already carries its file location.
struct FileError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw FileError(path + ": cannot write file");
}

GameSpec load_game(const std::string& path) {
  try {
    return parse_game(read_file(path));
  } catch (const ParseError& e) {
    throw FileError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                    ": " + e.detail());
  }
}

BehavioralStrategy load_strategy(const std::string& path, const MoveAlphabets& al) {
  try {
    return parse_strategy(read_file(path), al);
  } catch (const ParseError& e) {
    throw FileError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                    ": " + e.detail());
  }
}

template <Scalar T>
std::string text(const T& v) {
  if constexpr (is_exact_v<T>) {
    return format_rational(v);
  } else {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
  }
}

template <Scalar T>
ordered_json number(const T& v) {
  if constexpr (is_exact_v<T>) {
    return ordered_json{{"approx", to_double(v)}, {"exact", format_rational(v)}};
  } else {
    return v;
  }
}

template <Scalar T>
ordered_json distribution_json(const std::vector<T>& row, const std::vector<std::string>& labels) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < row.size(); ++i) out[labels[i]] = number(row[i]);
  return out;
}

template <Scalar T>
std::string distribution_text(const std::vector<T>& row, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += labels[i] + " " + text(row[i]);
  }
  return out;
}

ordered_json inputs_json(const RunConfig& c) {
  ordered_json in = ordered_json::object();
  if (!c.game_path.empty()) in["game"] = c.game_path;
  if (!c.sigma_path.empty()) in["sigma"] = c.sigma_path;
  if (!c.tau_path.empty()) in["tau"] = c.tau_path;
  if (c.depth) in["depth"] = *c.depth;
  in["exact"] = c.exact;
  return in;
}

int play_depth(const RunConfig& c, const GameSpec& spec) {
  if (c.depth) return *c.depth;
  if (spec.is_finite_kind()) {
    const int h = spec.kind == GameKind::kMatrix ? 1 : spec.horizon;
    return h - static_cast<int>(spec.start_position.length());
  }
  return kDefaultOpenDepth;
}

template <Scalar T>
void cmd_solve(const RunConfig& c, std::ostream& out) {
  const GameSpec spec = load_game(c.game_path);
  if (!spec.is_finite_kind()) {
    throw Error("solve needs a matrix or finite game; '" + spec.name + "' is " +
                std::string(kind_name(spec.kind)) + " (use bracket)");
  }
  const auto report = backward_induction<T>(spec);
  const auto& g = report.game;
  const bool has_round = report.horizon > 0 && !g.terminal[g.start];
  const auto& al = spec.alphabets;
  if (!c.write_sigma.empty()) write_file(c.write_sigma, serialize(report.strategy(Player::kOne)));
  if (!c.write_tau.empty()) write_file(c.write_tau, serialize(report.strategy(Player::kTwo)));
  if (c.json) {
    ordered_json j;
    j["command"] = "solve";
    j["inputs"] = inputs_json(c);
    j["value"] = number(report.value());
    ordered_json s = ordered_json::object();
    if (has_round) {
      const auto k = static_cast<std::size_t>(report.horizon);
      s["I"] = distribution_json(report.row_strategy[k][g.start], al.x_moves());
      s["II"] = distribution_json(report.col_strategy[k][g.start], al.y_moves());
    }
    j["strategies"] = s;
    j["diagnostics"] = {{"kind", kind_name(spec.kind)},
                        {"horizon", report.horizon},
                        {"states", g.num_states()}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "game   " << spec.name << " (" << kind_name(spec.kind) << ")\n";
  out << "value  " << text(report.value()) << "\n";
  if (has_round) {
    const auto k = static_cast<std::size_t>(report.horizon);
    out << "I      " << distribution_text(report.row_strategy[k][g.start], al.x_moves()) << "\n";
    out << "II     " << distribution_text(report.col_strategy[k][g.start], al.y_moves()) << "\n";
  }
}

template <Scalar T>
void cmd_bracket(const RunConfig& c, std::ostream& out) {
  const GameSpec spec = load_game(c.game_path);
  const int depth = c.depth.value_or(kDefaultOpenDepth);
  BracketOptions opts;
  opts.tol = c.tol;
  opts.k_max = c.k_max;
  BracketTrace<T> trace;
  if (spec.kind == GameKind::kGDelta) {
    trace = gdelta_value_bracket<T>(spec, depth, opts);
  } else {
    trace = open_value_bracket<T>(spec, depth, opts);
  }
  if (c.json) {
    ordered_json j;
    j["command"] = "bracket";
    j["inputs"] = inputs_json(c);
    ordered_json rows = ordered_json::array();
    for (std::size_t d = 0; d < trace.brackets.size(); ++d) {
      rows.push_back({{"depth", trace.brackets[d].depth},
                      {"lower", number(trace.brackets[d].lower)},
                      {"upper", number(trace.brackets[d].upper)},
                      {"estimate", number(trace.estimates[d])}});
    }
    j["bracket_trace"] = rows;
    j["strategies"] = ordered_json::object();
    ordered_json diag = {{"kind", kind_name(spec.kind)},
                         {"verdict", verdict_name(trace.verdict)},
                         {"tol", c.tol}};
    if (spec.kind == GameKind::kGDelta) {
      ordered_json per_k = ordered_json::array();
      for (std::size_t k = 0; k < trace.k_uppers.size(); ++k) {
        per_k.push_back({{"k", k + 1},
                         {"upper", number(trace.k_uppers[k])},
                         {"estimate", number(trace.k_estimates[k])}});
      }
      diag["k_max"] = trace.k_max;
      diag["per_k"] = per_k;
    }
    j["diagnostics"] = diag;
    out << j.dump(2) << "\n";
    return;
  }
  out << "game     " << spec.name << " (" << kind_name(spec.kind) << ")\n";
  out << std::left << std::setw(7) << "depth" << std::setw(16) << "lower" << std::setw(16)
      << "upper" << "estimate\n";
  for (std::size_t d = 0; d < trace.brackets.size(); ++d) {
    out << std::setw(7) << trace.brackets[d].depth << std::setw(16) << text(trace.brackets[d].lower)
        << std::setw(16) << text(trace.brackets[d].upper) << text(trace.estimates[d]) << "\n";
  }
  if (spec.kind == GameKind::kGDelta) {
    out << std::setw(7) << "k" << std::setw(16) << "upper" << "estimate\n";
    for (std::size_t k = 0; k < trace.k_uppers.size(); ++k) {
      out << std::setw(7) << k + 1 << std::setw(16) << text(trace.k_uppers[k])
          << text(trace.k_estimates[k]) << "\n";
    }
  }
  out << "verdict  " << verdict_name(trace.verdict) << "\n";
}

template <Scalar T>
void cmd_evaluate(const RunConfig& c, std::ostream& out) {
  const GameSpec spec = load_game(c.game_path);
  const auto sigma = load_strategy(c.sigma_path, spec.alphabets);
  const auto tau = load_strategy(c.tau_path, spec.alphabets);
  const int depth = play_depth(c, spec);
  const T value = expected_payoff<T>(compile_for_play<T>(spec, depth), sigma, tau);
  if (c.json) {
    ordered_json j;
    j["command"] = "evaluate";
    j["inputs"] = inputs_json(c);
    j["value"] = number(value);
    j["strategies"] = {{"I", c.sigma_path}, {"II", c.tau_path}};
    j["diagnostics"] = {{"kind", kind_name(spec.kind)}, {"depth", depth}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "value  " << text(value) << "\n";
}

template <Scalar T>
void cmd_best_response(const RunConfig& c, std::ostream& out) {
  const GameSpec spec = load_game(c.game_path);
  const bool fixed_is_sigma = !c.sigma_path.empty();
  const auto fixed = load_strategy(fixed_is_sigma ? c.sigma_path : c.tau_path, spec.alphabets);
  const int depth = play_depth(c, spec);
  const auto br = best_response<T>(compile_for_play<T>(spec, depth), fixed);
  const std::string response = serialize(br.response);
  if (c.json) {
    ordered_json j;
    j["command"] = "best-response";
    j["inputs"] = inputs_json(c);
    j["value"] = number(br.value);
    j["strategies"] = {{fixed_is_sigma ? "II" : "I", response}};
    j["diagnostics"] = {{"kind", kind_name(spec.kind)}, {"depth", depth}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "value  " << text(br.value) << "\n" << response;
}

void cmd_simulate(const RunConfig& c, std::ostream& out) {
  const GameSpec spec = load_game(c.game_path);
  const auto sigma = load_strategy(c.sigma_path, spec.alphabets);
  const auto tau = load_strategy(c.tau_path, spec.alphabets);
  const int depth = play_depth(c, spec);
  const auto r = simulate(spec, sigma, tau, c.rollouts, depth, c.seed);
  if (c.json) {
    ordered_json j;
    j["command"] = "simulate";
    j["inputs"] = inputs_json(c);
    j["inputs"]["rollouts"] = c.rollouts;
    j["inputs"]["seed"] = c.seed;
    j["mean"] = r.mean;
    j["strategies"] = {{"I", c.sigma_path}, {"II", c.tau_path}};
    j["diagnostics"] = {{"std_error", r.std_error},
                        {"rollouts", r.rollouts},
                        {"depth", depth},
                        {"generator", "mt19937_64 seeded per rollout by splitmix64(seed, index)"}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "mean       " << text(r.mean) << "\n";
  out << "std_error  " << text(r.std_error) << "\n";
  out << "rollouts   " << r.rollouts << "\n";
}

void cmd_validate(const RunConfig& c, std::ostream& out) {
  ordered_json diag = ordered_json::object();
  std::string summary;
  if (!c.sigma_path.empty()) {
    const GameSpec spec = load_game(c.game_path);
    const auto s = load_strategy(c.sigma_path, spec.alphabets);
    summary = "strategy for player " + std::string(player_name(s.owner()));
    diag["owner"] = player_name(s.owner());
  } else {
    const GameSpec spec = load_game(c.game_path);
    summary = std::string(kind_name(spec.kind)) + " game '" + spec.name + "'";
    std::size_t states = 0;
    for (const auto& a : spec.automata) states += a.num_states();
    diag["kind"] = kind_name(spec.kind);
    diag["states"] = states;
  }
  if (c.json) {
    ordered_json j;
    j["command"] = "validate";
    j["inputs"] = inputs_json(c);
    j["value"] = "ok";
    j["strategies"] = ordered_json::object();
    j["diagnostics"] = diag;
    out << j.dump(2) << "\n";
    return;
  }
  out << "ok  " << summary << "\n";
}

void cmd_example(const RunConfig& c, std::ostream& out) {
  if (c.example == "sigma") {
    out << serialize(examples::stop_sigma(c.n));
    return;
  }
  if (c.example == "never-stop" || c.example == "uniform") {
    if (c.player != "I" && c.player != "II") throw Error("--player must be I or II");
    const Player p = c.player == "I" ? Player::kOne : Player::kTwo;
    if (c.example == "never-stop") {
      out << serialize(examples::never_stop(p));
    } else {
      out << "strategy " << c.player << "\nuniform\n";
    }
    return;
  }
  out << serialize(examples::game_by_name(c.example));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blackwell game solver and simulator", "bwg"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "Structured output");
    sub->add_flag("--exact", c.exact, "Exact rational arithmetic");
  };
  auto add_depth = [&](CLI::App* sub) {
    sub->add_option("--depth", c.depth, "Rounds to play or truncate at")->check(CLI::NonNegativeNumber);
  };
  auto game_arg = [&](CLI::App* sub) {
    sub->add_option("game", c.game_path, "Game document (.bwg)")->required()->check(CLI::ExistingFile);
  };

  auto* solve = app.add_subcommand("solve", "Exact value and optimal strategies of a finite game");
  game_arg(solve);
  add_common(solve);
  solve->add_option("--write-sigma", c.write_sigma, "Write player I's optimal strategy here");
  solve->add_option("--write-tau", c.write_tau, "Write player II's optimal strategy here");

  auto* bracket = app.add_subcommand("bracket", "Certified value bracket of an open or g-delta game");
  game_arg(bracket);
  add_common(bracket);
  add_depth(bracket);
  bracket->add_option("--tol", c.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  bracket->add_option("--k-max", c.k_max, "Largest visit count for g-delta supersets")
      ->check(CLI::PositiveNumber);

  auto* evaluate = app.add_subcommand("evaluate", "Expected payoff of a strategy pair");
  game_arg(evaluate);
  add_common(evaluate);
  add_depth(evaluate);
  evaluate->add_option("--sigma", c.sigma_path, "Player I strategy (.bws)")
      ->required()->check(CLI::ExistingFile);
  evaluate->add_option("--tau", c.tau_path, "Player II strategy (.bws)")
      ->required()->check(CLI::ExistingFile);

  auto* best = app.add_subcommand("best-response", "Value of a fixed strategy and a best reply");
  game_arg(best);
  add_common(best);
  add_depth(best);
  auto* fixed = best->add_option_group("fixed strategy", "Exactly one of --sigma and --tau");
  fixed->add_option("--sigma", c.sigma_path, "Fixed player I strategy")->check(CLI::ExistingFile);
  fixed->add_option("--tau", c.tau_path, "Fixed player II strategy")->check(CLI::ExistingFile);
  fixed->require_option(1);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the expected payoff");
  game_arg(sim);
  add_common(sim);
  add_depth(sim);
  sim->add_option("--sigma", c.sigma_path, "Player I strategy (.bws)")->required()->check(CLI::ExistingFile);
  sim->add_option("--tau", c.tau_path, "Player II strategy (.bws)")->required()->check(CLI::ExistingFile);
  sim->add_option("--rollouts", c.rollouts, "Number of rollouts")->check(CLI::PositiveNumber);
  sim->add_option("--seed", c.seed, "Random seed");

  auto* validate = app.add_subcommand("validate", "Parse and check a game or strategy document");
  game_arg(validate);
  add_common(validate);
  validate->add_option("--strategy", c.sigma_path, "Strategy document to check against the game")
      ->check(CLI::ExistingFile);

  auto* example = app.add_subcommand("example", "Print a built-in game or strategy document");
  std::vector<std::string> names = examples::game_names();
  names.insert(names.end(), {"sigma", "never-stop", "uniform"});
  example->add_option("name", c.example, "Example name")->required()->check(CLI::IsMember(names));
  example->add_option("--n", c.n, "n for the sigma strategy")->check(CLI::PositiveNumber);
  example->add_option("--player", c.player, "Owner for never-stop and uniform")
      ->check(CLI::IsMember({"I", "II"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    if (c.command == "solve") {
      c.exact ? cmd_solve<Rational>(c, out) : cmd_solve<double>(c, out);
    } else if (c.command == "bracket") {
      c.exact ? cmd_bracket<Rational>(c, out) : cmd_bracket<double>(c, out);
    } else if (c.command == "evaluate") {
      c.exact ? cmd_evaluate<Rational>(c, out) : cmd_evaluate<double>(c, out);
    } else if (c.command == "best-response") {
      c.exact ? cmd_best_response<Rational>(c, out) : cmd_best_response<double>(c, out);
    } else if (c.command == "simulate") {
      cmd_simulate(c, out);
    } else if (c.command == "validate") {
      cmd_validate(c, out);
    } else {
      cmd_example(c, out);
    }
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << (c.game_path.empty() ? "" : c.game_path + ": ") << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace bwgame::cli
