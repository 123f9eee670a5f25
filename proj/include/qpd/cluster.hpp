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

#ifndef QPD_CLUSTER_HPP_
#define QPD_CLUSTER_HPP_

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpd/game.hpp"
#include "qpd/state.hpp"

namespace qpd::cluster {

/// Raised for strategies the 4-qubit resource cannot realize: U(theta, phi)
/// with theta outside {0, pi} needs a larger (six-photon) cluster.
class UnsupportedStrategyError : public std::invalid_argument {
 public:
  explicit UnsupportedStrategyError(const std::string& what)
      : std::invalid_argument(what) {}
};

enum class Construction {
  Direct,  // the four-term state written out amplitude by amplitude
  Graph,   // CP gates on the edges of the square graph, then mapped to the
           // Direct convention by H on every qubit and a swap of qubits 2,3
};

struct ClusterResource {
  StateVector state;  // always in the Direct convention
  Construction construction;
};

/// The ideal four-photon resource
///   (|0000> + |0011> + |1100> - |1111>) / 2.
StateVector ideal_cluster_state();

/// Builds the resource by either construction. Both agree up to a global
/// phase (|overlap| = 1 within 1e-10).
ClusterResource build_cluster(Construction construction);

/// Projects qubits 1 and 4 onto cos(theta)|0> + e^{i phi} sin(theta)|1>
/// (phase applied as written, i.e. on the bra side without conjugation) and
/// returns the renormalized state of qubits 2,3 — ordered (qubit 2, qubit 3)
/// — plus the joint projection probability:
///   cos t1 cos t4 |00> + e^{i p4} cos t1 sin t4 |01>
///     + e^{i p1} sin t1 cos t4 |10> - e^{i(p1+p4)} sin t1 sin t4 |11>,
/// up to normalization.
ProjectionResult project_players(const ClusterResource& resource,
                                 double theta1, double phi1, double theta4,
                                 double phi4);

/// Measurement settings and corrections realizing a strategy profile:
/// player A owns the qubit-1 projection angle and a possible sigma_y
/// correction on qubit 3; player B owns the qubit-4 angle and a correction
/// on qubit 2. Per class: c -> angle 0, no correction; d -> angle -pi/2 with
/// correction; q(alpha) -> angle alpha, no correction. Projection phases are
/// zero.
struct MeasurementPlan {
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta4 = 0.0;
  double phi4 = 0.0;
  bool correct_a = false;  // sigma_y on qubit 3
  bool correct_b = false;  // sigma_y on qubit 2
};

/// Maps a strategy profile onto a MeasurementPlan. Only {c, d, q(alpha)} are
/// realizable (General is accepted when theta is exactly 0 or pi); anything
/// else throws UnsupportedStrategyError.
MeasurementPlan strategy_to_plan(const game::Strategy& a,
                                 const game::Strategy& b);

struct ClusterOptions {
  // Test hook: disable the sigma_y corrections to observe the fault they fix.
  bool apply_corrections = true;
};

struct ClusterOutcome {
  game::PayoffPair payoffs;
  // Probability of the projection outcome that implements the profile (the
  // physical run postselects on it; the simulator projects deterministically
  // but reports it).
  double postselection_probability = 0.0;
  MeasurementPlan plan;
};

/// Plays a profile on the one-way pathway: build resource, project qubits 1
/// and 4 per plan, apply corrections, read qubit 2 as A's outcome bit and
/// qubit 3 as B's, then score with the referee.
ClusterOutcome play_cluster(const game::Strategy& a, const game::Strategy& b,
                            const game::PayoffTable& table = {},
                            const ClusterOptions& options = {});

struct ProfileComparison {
  game::Strategy a;
  game::Strategy b;
  game::PayoffPair circuit;
  game::PayoffPair cluster;
  double discrepancy = 0.0;  // max abs payoff difference over both players
};

struct EquivalenceReport {
  std::vector<ProfileComparison> profiles;
  double max_discrepancy = 0.0;
};

/// Plays every profile of grid x grid on both pathways and reports the
/// payoff discrepancies.
EquivalenceReport verify_equivalence(std::span<const game::Strategy> grid,
                                     const game::PayoffTable& table = {},
                                     const ClusterOptions& options = {});

struct ReachabilityRecord {
  double alpha = 0.0;
  // Outcome distribution of the circuit for the profile (U(alpha,0), c).
  std::array<double, 4> circuit_distribution{};
  // Exact witness: the circuit distribution is supported on {00, 11} with
  // both outcomes populated, which no product distribution q_i * r_j allows.
  bool support_witness = false;
  // Grid search (1 degree steps in theta1, theta4) over the cluster-reachable
  // product family.
  double min_total_variation = 0.0;
  double best_theta1 = 0.0;  // radians
  double best_theta4 = 0.0;
  std::array<double, 4> best_cluster_distribution{};
  bool reachable = false;
};

/// Certifies whether the circuit output for (U(alpha, 0), c) can be produced
/// by the 4-qubit cluster pathway. Reachable exactly for alpha in {0, pi}.
ReachabilityRecord reachability_check(double alpha);

}  // namespace qpd::cluster

#endif  // QPD_CLUSTER_HPP_
