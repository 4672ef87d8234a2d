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

#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace bwgame::testing {

OracleSolution lp_oracle(const std::vector<std::vector<Rational>>& a) {
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  Rational low = a[0][0];
  for (const auto& row : a) {
    for (const auto& v : row) low = std::min(low, v);
  }
  const Rational shift = Rational(1) - low;
  // max sum q  s.t.  B q <= 1, q >= 0, with B = A + shift > 0.
  // Columns 0..n-1 are q, n..n+m-1 slacks, n+m the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j] + shift;
    t[i][n + i] = 1;
    t[i][width - 1] = 1;
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -1;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw std::logic_error("lp_oracle: unbounded");
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  std::vector<Rational> q(n, Rational(0)), p(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) q[basis[i]] = t[i][width - 1];
  }
  for (std::size_t i = 0; i < m; ++i) p[i] = t[m][n + i];
  Rational sq(0), sp(0);
  for (const auto& v : q) sq += v;
  for (const auto& v : p) sp += v;
  // Certificate: primal and dual feasibility with equal objectives.
  bool ok = sq == sp && sq > 0;
  for (std::size_t i = 0; i < m && ok; ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < n; ++j) lhs += (a[i][j] + shift) * q[j];
    ok = lhs <= 1 && p[i] >= 0;
  }
  for (std::size_t j = 0; j < n && ok; ++j) {
    Rational lhs(0);
    for (std::size_t i = 0; i < m; ++i) lhs += (a[i][j] + shift) * p[i];
    ok = lhs >= 1 && q[j] >= 0;
  }
  if (!ok) throw std::logic_error("lp_oracle: certificate check failed");
  OracleSolution out;
  out.value = Rational(1) / sq - shift;
  for (auto& v : p) out.row.push_back(v / sp);
  for (auto& v : q) out.col.push_back(v / sq);
  return out;
}

Rational closed_form_2x2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  // Pure saddle: entry minimal in its row and maximal in its column.
  const Rational m[2][2] = {{a, b}, {c, d}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (m[i][j] <= m[i][1 - j] && m[i][j] >= m[1 - i][j]) return m[i][j];
    }
  }
  return (a * d - b * c) / (a + d - b - c);
}

double grid_value_2xm(const std::vector<std::vector<double>>& a, int steps) {
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s <= steps; ++s) {
    const double x = static_cast<double>(s) / steps;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < a[0].size(); ++j) worst = std::min(worst, x * a[0][j] + (1 - x) * a[1][j]);
    best = std::max(best, worst);
  }
  return best;
}

Rational play_payoff(const GameSpec& spec, const Position& p) {
  Rational raw;
  if (spec.kind == GameKind::kMatrix) {
    const std::size_t ny = spec.alphabets.num_y();
    raw = spec.matrix[p[0] / ny][p[0] % ny];
  } else {
    const auto& a = spec.automaton();
    StateId q = a.start();
    for (std::size_t i = 0; i < p.length() && !a.state(q).terminal; ++i) q = a.next(q, p[i]);
    if (!a.state(q).u) throw std::logic_error("play_payoff: unlabelled end state");
    raw = *a.state(q).u;
  }
  return spec.scale * raw + spec.offset;
}

Rational normal_form_value(const GameSpec& spec) {
  if (spec.horizon != 2) throw std::logic_error("normal_form_value needs a finite(2) game");
  const auto& al = spec.alphabets;
  const std::size_t nz = al.num_joint();
  // A pure strategy: first move, then one move per first-round joint move.
  auto plans = [&](std::size_t moves) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t slot = 0; slot < 1 + nz; ++slot) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& plan : out) {
        for (std::size_t mv = 0; mv < moves; ++mv) {
          auto extended = plan;
          extended.push_back(mv);
          next.push_back(std::move(extended));
        }
      }
      out = std::move(next);
    }
    return out;
  };
  const auto rows = plans(al.num_x());
  const auto cols = plans(al.num_y());
  std::vector<std::vector<Rational>> nf(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const JointMove z1 = al.joint(rows[i][0], cols[j][0]);
      const JointMove z2 = al.joint(rows[i][1 + z1], cols[j][1 + z1]);
      nf[i][j] = play_payoff(spec, Position({z1, z2}));
    }
  }
  return lp_oracle(nf).value;
}

Rational explicit_value(const GameSpec& spec) { return explicit_value_at(spec, Position{}); }

Rational explicit_value_at(const GameSpec& spec, const Position& from) {
  const auto& al = spec.alphabets;
  const int n = spec.kind == GameKind::kMatrix ? 1 : spec.horizon;
  std::function<Rational(const Position&)> value = [&](const Position& p) -> Rational {
    if (static_cast<int>(p.length()) == n) return play_payoff(spec, p);
    std::vector<std::vector<Rational>> m(al.num_x(), std::vector<Rational>(al.num_y()));
    for (std::size_t x = 0; x < al.num_x(); ++x) {
      for (std::size_t y = 0; y < al.num_y(); ++y) m[x][y] = value(p.extended(al.joint(x, y)));
    }
    if (al.num_x() == 2 && al.num_y() == 2) return closed_form_2x2(m[0][0], m[0][1], m[1][0], m[1][1]);
    return lp_oracle(m).value;
  };
  return value(from);
}

Rational explicit_fixed_value(const GameSpec& spec, const BehavioralStrategy& sigma) {
  const auto& al = spec.alphabets;
  const int n = spec.kind == GameKind::kMatrix ? 1 : spec.horizon;
  std::function<Rational(const Position&)> value = [&](const Position& p) -> Rational {
    if (static_cast<int>(p.length()) == n) return play_payoff(spec, p);
    const Distribution& row = sigma.distribution_at(p);
    std::optional<Rational> best;
    for (std::size_t y = 0; y < al.num_y(); ++y) {
      Rational v(0);
      for (std::size_t x = 0; x < al.num_x(); ++x) {
        if (row[x] != 0) v += row[x] * value(p.extended(al.joint(x, y)));
      }
      if (!best || v < *best) best = v;
    }
    return *best;
  };
  return value(Position{});
}

Rational stop_game_truncated_value(int d) {
  // Live with r rounds left: (Stop,Stop) pays 0, a lone Stop pays 1,
  // (Continue,Continue) continues; running out of rounds pays 0.
  Rational live(0);
  for (int r = 1; r <= d; ++r) live = closed_form_2x2(Rational(0), Rational(1), Rational(1), live);
  return live;
}

}  // namespace bwgame::testing
