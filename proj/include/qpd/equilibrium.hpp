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

#ifndef QPD_EQUILIBRIUM_HPP_
#define QPD_EQUILIBRIUM_HPP_

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qpd/game.hpp"

namespace qpd::game {

/// Payoff evaluator over a strategy profile. Any pathway (table lookup,
/// circuit simulation, cluster simulation) plugs in here, so one analyzer
/// audits all of them.
using Evaluator = std::function<PayoffPair(const Strategy&, const Strategy&)>;

/// Profiles (i, j) into (grid_a, grid_b) where no unilateral deviation
/// within the grid improves the deviator's payoff by more than tol.
/// Results are sorted lexicographically.
std::vector<std::pair<int, int>> find_nash(std::span<const Strategy> grid_a,
                                           std::span<const Strategy> grid_b,
                                           const Evaluator& evaluate,
                                           double tol = 1e-9);

/// Profiles not weakly dominated: no other profile is >= for both players
/// (within tol) and > for at least one (beyond tol).
std::vector<std::pair<int, int>> find_pareto(std::span<const Strategy> grid_a,
                                             std::span<const Strategy> grid_b,
                                             const Evaluator& evaluate,
                                             double tol = 1e-9);

}  // namespace qpd::game

#endif  // QPD_EQUILIBRIUM_HPP_
