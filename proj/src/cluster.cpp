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

#include "qpd/cluster.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "qpd/operators.hpp"

namespace qpd::cluster {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector2cd projection_ket(double theta, double phi) {
  // The protocol projects with cos(theta) <0| + e^{+i phi} sin(theta) <1|
  // (phase written on the bra side); project_qubit conjugates its ket, so
  // hand it the conjugate phase.
  Eigen::Vector2cd ket;
  ket << std::cos(theta),
      std::exp(Complex(0.0, -phi)) * std::sin(theta);
  return ket;
}

struct PlayerPlan {
  double angle;
  bool correct;
};

PlayerPlan player_plan(const game::Strategy& s) {
  using Kind = game::Strategy::Kind;
  switch (s.kind()) {
    case Kind::Cooperate:
      return {0.0, false};
    case Kind::Defect:
      return {-kPi / 2.0, true};
    case Kind::QuantumPhase:
      return {s.alpha(), false};
    case Kind::General:
      if (s.theta() == 0.0) return {s.phi(), false};
      if (s.theta() == kPi) return {-kPi / 2.0, true};
      throw UnsupportedStrategyError(
          "strategy " + s.to_string() +
          " is not realizable on the 4-qubit cluster: U(theta, phi) with "
          "theta outside {0, pi} requires a six-photon resource");
  }
  throw std::logic_error("unreachable");
}

std::array<double, 4> product_distribution(double theta1, double theta4) {
  const double q1 = std::sin(theta1) * std::sin(theta1);  // P(A bit = 1)
  const double r1 = std::sin(theta4) * std::sin(theta4);  // P(B bit = 1)
  return {(1 - q1) * (1 - r1), (1 - q1) * r1, q1 * (1 - r1), q1 * r1};
}

double total_variation(const std::array<double, 4>& p,
                       const std::array<double, 4>& q) {
  double tv = 0.0;
  for (std::size_t i = 0; i < 4; ++i) tv += std::abs(p[i] - q[i]);
  return tv / 2.0;
}

}  // namespace

StateVector ideal_cluster_state() {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(16);
  amps(0b0000) = 0.5;
  amps(0b0011) = 0.5;
  amps(0b1100) = 0.5;
  amps(0b1111) = -0.5;
  return StateVector::from_normalized(4, std::move(amps));
}

ClusterResource build_cluster(Construction construction) {
  if (construction == Construction::Direct) {
    return ClusterResource{ideal_cluster_state(), construction};
  }

  // Square graph state: CP between nearest neighbours of the 1-2-3-4-1 ring
  // on |+>^4, then H on every qubit and a relabeling (swap) of qubits 2,3
  // to land in the Direct convention.
  const Operator h = hadamard();
  const Operator cp = cphase();
  Eigen::VectorXcd plus = Eigen::VectorXcd::Constant(16, 0.25);
  StateVector state = StateVector::from_normalized(4, std::move(plus));
  constexpr std::array<std::pair<int, int>, 4> kBoxEdges = {
      {{1, 2}, {2, 3}, {3, 4}, {1, 4}}};
  for (const auto& [u, v] : kBoxEdges) {
    state = apply(cp, {u, v}, state);
  }
  for (int q = 1; q <= 4; ++q) {
    state = apply(h, {q}, state);
  }

  // Swap qubits 2 and 3 by reindexing amplitudes.
  const Eigen::VectorXcd& in = state.amplitudes();
  Eigen::VectorXcd swapped(16);
  for (int i = 0; i < 16; ++i) {
    const int b1 = (i >> 3) & 1, b2 = (i >> 2) & 1, b3 = (i >> 1) & 1,
              b4 = i & 1;
    swapped((b1 << 3) | (b3 << 2) | (b2 << 1) | b4) = in(i);
  }
  return ClusterResource{StateVector::from_normalized(4, std::move(swapped)),
                         construction};
}

ProjectionResult project_players(const ClusterResource& resource,
                                 double theta1, double phi1, double theta4,
                                 double phi4) {
  // Project qubit 1, after which the original qubit 4 is qubit 3 of the
  // remaining register; projecting it leaves (qubit 2, qubit 3).
  const ProjectionResult first =
      project_qubit(resource.state, 1, projection_ket(theta1, phi1));
  const ProjectionResult second =
      project_qubit(first.state, 3, projection_ket(theta4, phi4));
  return ProjectionResult{second.state,
                          first.probability * second.probability};
}

MeasurementPlan strategy_to_plan(const game::Strategy& a,
                                 const game::Strategy& b) {
  const PlayerPlan pa = player_plan(a);
  const PlayerPlan pb = player_plan(b);
  MeasurementPlan plan;
  plan.theta1 = pa.angle;
  plan.theta4 = pb.angle;
  plan.correct_a = pa.correct;
  plan.correct_b = pb.correct;
  return plan;
}

ClusterOutcome play_cluster(const game::Strategy& a, const game::Strategy& b,
                            const game::PayoffTable& table,
                            const ClusterOptions& options) {
  const MeasurementPlan plan = strategy_to_plan(a, b);
  const ClusterResource resource = build_cluster(Construction::Direct);
  ProjectionResult projected = project_players(resource, plan.theta1, plan.phi1,
                                               plan.theta4, plan.phi4);

  StateVector state = std::move(projected.state);
  if (options.apply_corrections) {
    const Operator sy = pauli_y();
    // The pair state is ordered (qubit 2, qubit 3): B's correction acts on
    // slot 1, A's on slot 2.
    if (plan.correct_b) state = apply(sy, {1}, state);
    if (plan.correct_a) state = apply(sy, {2}, state);
  }

  // Qubit 2 carries A's outcome bit and qubit 3 carries B's, so the pair
  // distribution indexes the referee directly.
  const std::vector<double> dist = bitstring_distribution(state);
  ClusterOutcome outcome;
  outcome.payoffs = game::referee_payoff({dist[0], dist[1], dist[2], dist[3]},
                                         table);
  outcome.postselection_probability = projected.probability;
  outcome.plan = plan;
  return outcome;
}

EquivalenceReport verify_equivalence(std::span<const game::Strategy> grid,
                                     const game::PayoffTable& table,
                                     const ClusterOptions& options) {
  EquivalenceReport report;
  for (const game::Strategy& a : grid) {
    for (const game::Strategy& b : grid) {
      ProfileComparison cmp{a, b, game::play_circuit(a, b, table),
                            play_cluster(a, b, table, options).payoffs, 0.0};
      cmp.discrepancy = std::max(std::abs(cmp.circuit.a - cmp.cluster.a),
                                 std::abs(cmp.circuit.b - cmp.cluster.b));
      report.max_discrepancy = std::max(report.max_discrepancy, cmp.discrepancy);
      report.profiles.push_back(std::move(cmp));
    }
  }
  return report;
}

ReachabilityRecord reachability_check(double alpha) {
  ReachabilityRecord record;
  record.alpha = alpha;

  const std::vector<double> dist = bitstring_distribution(
      game::evolve_circuit(game::Strategy::general(alpha, 0.0),
                           game::Strategy::cooperate()));
  record.circuit_distribution = {dist[0], dist[1], dist[2], dist[3]};

  // A product distribution with p01 = p10 = 0 must have p00 = 0 or p11 = 0.
  constexpr double kSupportTol = 1e-12;
  record.support_witness = record.circuit_distribution[0] > kSupportTol &&
                           record.circuit_distribution[3] > kSupportTol &&
                           record.circuit_distribution[1] < kSupportTol &&
                           record.circuit_distribution[2] < kSupportTol;

  record.min_total_variation = 2.0;
  for (int d1 = 0; d1 <= 180; ++d1) {
    for (int d4 = 0; d4 <= 180; ++d4) {
      const double t1 = d1 * kPi / 180.0;
      const double t4 = d4 * kPi / 180.0;
      const std::array<double, 4> candidate = product_distribution(t1, t4);
      const double tv = total_variation(candidate, record.circuit_distribution);
      if (tv < record.min_total_variation) {
        record.min_total_variation = tv;
        record.best_theta1 = t1;
        record.best_theta4 = t4;
        record.best_cluster_distribution = candidate;
      }
    }
  }

  record.reachable = record.min_total_variation < 1e-9;
  return record;
}

}  // namespace qpd::cluster
