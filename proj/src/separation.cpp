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

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "bwgame/game_model.hpp"
#include "bwgame/matrix_solver.hpp"

namespace bwgame {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Wolfe's nearest point algorithm: the point of minimum norm in the convex
// hull of the columns of P. Returns the convex weights.
VectorXd wolfe_min_norm(const MatrixXd& P, double eps) {
  const Eigen::Index k = P.cols();
  Eigen::Index first = 0;
  P.colwise().squaredNorm().minCoeff(&first);
  std::vector<Eigen::Index> corral{first};
  VectorXd lambda = VectorXd::Zero(k);
  lambda(first) = 1.0;
  VectorXd x = P.col(first);
  const double scale = std::max(1.0, P.colwise().squaredNorm().maxCoeff());

  for (int major = 0; major < 1000; ++major) {
    Eigen::Index j = 0;
    (x.transpose() * P).minCoeff(&j);
    if (x.squaredNorm() - x.dot(P.col(j)) <= eps * scale) break;
    if (std::find(corral.begin(), corral.end(), j) != corral.end()) break;
    corral.push_back(j);

    for (;;) {
      // Affine minimizer of the corral: min |P_S a| s.t. sum a = 1.
      const Eigen::Index s = static_cast<Eigen::Index>(corral.size());
      MatrixXd kkt = MatrixXd::Zero(s + 1, s + 1);
      for (Eigen::Index r = 0; r < s; ++r) {
        for (Eigen::Index c = 0; c < s; ++c) kkt(r, c) = P.col(corral[r]).dot(P.col(corral[c]));
        kkt(r, s) = 1.0;
        kkt(s, r) = 1.0;
      }
      VectorXd rhs = VectorXd::Zero(s + 1);
      rhs(s) = 1.0;
      VectorXd alpha = kkt.completeOrthogonalDecomposition().solve(rhs).head(s);

      if ((alpha.array() > eps).all()) {
        lambda.setZero();
        for (Eigen::Index r = 0; r < s; ++r) lambda(corral[r]) = alpha(r);
        break;
      }
      // Move from lambda toward alpha until a weight hits zero.
      double theta = 1.0;
      for (Eigen::Index r = 0; r < s; ++r) {
        double l = lambda(corral[r]);
        if (alpha(r) <= eps && l - alpha(r) > 0) theta = std::min(theta, l / (l - alpha(r)));
      }
      for (Eigen::Index r = 0; r < s; ++r) {
        lambda(corral[r]) = (1 - theta) * lambda(corral[r]) + theta * alpha(r);
      }
      std::vector<Eigen::Index> kept;
      for (auto idx : corral) {
        if (lambda(idx) > eps) {
          kept.push_back(idx);
        } else {
          lambda(idx) = 0.0;
        }
      }
      corral = std::move(kept);
      if (corral.empty()) {
        corral.push_back(j);
        lambda.setZero();
        lambda(j) = 1.0;
      }
    }
    x = P * lambda;
  }
  return lambda;
}

}  // namespace

Separation separating_hyperplane(const std::vector<std::vector<double>>& points,
                                 const std::vector<double>& b, double tol) {
  if (points.empty()) throw Error("separating_hyperplane: no points");
  const std::size_t dim = b.size();
  MatrixXd P(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(points.size()));
  VectorXd target = Eigen::Map<const VectorXd>(b.data(), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) throw Error("separating_hyperplane: dimension mismatch");
    for (std::size_t r = 0; r < dim; ++r) {
      if (!std::isfinite(points[i][r])) throw Error("separating_hyperplane: non-finite point");
      P(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = points[i][r] - b[r];
    }
  }
  VectorXd lambda = wolfe_min_norm(P, 1e-14);
  VectorXd c = P * lambda + target;
  VectorXd y = target - c;

  Separation out;
  out.nearest.assign(c.data(), c.data() + c.size());
  out.distance = y.norm();
  if (out.distance <= tol) {
    out.inside = true;
    return out;
  }
  out.normal.assign(y.data(), y.data() + y.size());
  out.offset = 0.5 * (y.dot(target) + y.dot(c));
  return out;
}

}  // namespace bwgame
