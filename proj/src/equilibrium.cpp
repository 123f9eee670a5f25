// Copyright 2026 The qpd Authors
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

#include "qpd/equilibrium.hpp"

#include <stdexcept>

#include <Eigen/Dense>

namespace qpd::game {

namespace {

struct PayoffMatrices {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
};

PayoffMatrices tabulate(std::span<const Strategy> grid_a,
                        std::span<const Strategy> grid_b,
                        const Evaluator& evaluate) {
  if (grid_a.empty() || grid_b.empty()) {
    throw std::invalid_argument("equilibrium: strategy grids must be nonempty");
  }
  const Eigen::Index na = static_cast<Eigen::Index>(grid_a.size());
  const Eigen::Index nb = static_cast<Eigen::Index>(grid_b.size());
  PayoffMatrices m{Eigen::MatrixXd(na, nb), Eigen::MatrixXd(na, nb)};
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) {
      const PayoffPair p = evaluate(grid_a[static_cast<std::size_t>(i)],
                                    grid_b[static_cast<std::size_t>(j)]);
      m.a(i, j) = p.a;
      m.b(i, j) = p.b;
    }
  }
  return m;
}

}  // namespace

std::vector<std::pair<int, int>> find_nash(std::span<const Strategy> grid_a,
                                           std::span<const Strategy> grid_b,
                                           const Evaluator& evaluate,
                                           double tol) {
  if (tol < 0.0) throw std::invalid_argument("find_nash: tol must be >= 0");
  const PayoffMatrices m = tabulate(grid_a, grid_b, evaluate);
  std::vector<std::pair<int, int>> result;
  for (Eigen::Index i = 0; i < m.a.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.a.cols(); ++j) {
      const bool a_stable = m.a(i, j) >= m.a.col(j).maxCoeff() - tol;
      const bool b_stable = m.b(i, j) >= m.b.row(i).maxCoeff() - tol;
      if (a_stable && b_stable) {
        result.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return result;
}

std::vector<std::pair<int, int>> find_pareto(std::span<const Strategy> grid_a,
                                             std::span<const Strategy> grid_b,
                                             const Evaluator& evaluate,
                                             double tol) {
  if (tol < 0.0) throw std::invalid_argument("find_pareto: tol must be >= 0");
  const PayoffMatrices m = tabulate(grid_a, grid_b, evaluate);
  std::vector<std::pair<int, int>> result;
  for (Eigen::Index i = 0; i < m.a.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.a.cols(); ++j) {
      bool dominated = false;
      for (Eigen::Index k = 0; k < m.a.rows() && !dominated; ++k) {
        for (Eigen::Index l = 0; l < m.a.cols() && !dominated; ++l) {
          if (k == i && l == j) continue;
          const bool no_worse = m.a(k, l) >= m.a(i, j) - tol &&
                                m.b(k, l) >= m.b(i, j) - tol;
          const bool strictly_better = m.a(k, l) > m.a(i, j) + tol ||
                                       m.b(k, l) > m.b(i, j) + tol;
          dominated = no_worse && strictly_better;
        }
      }
      if (!dominated) {
        result.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return result;
}

}  // namespace qpd::game
