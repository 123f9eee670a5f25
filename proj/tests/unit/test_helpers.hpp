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

#ifndef QPD_TESTS_UNIT_TEST_HELPERS_HPP_
#define QPD_TESTS_UNIT_TEST_HELPERS_HPP_

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "qpd/density.hpp"
#include "qpd/operators.hpp"
#include "qpd/state.hpp"

namespace qpd_test {

inline constexpr double kPi = 3.14159265358979323846;

inline qpd::StateVector random_state(int n_qubits, std::mt19937_64& engine) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd amps(Eigen::Index{1} << n_qubits);
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    amps(i) = qpd::Complex(gauss(engine), gauss(engine));
  }
  return qpd::StateVector(n_qubits, std::move(amps));
}

// Haar-ish random single-qubit unitary via random rotation angles.
inline qpd::Operator random_single_qubit_gate(std::mt19937_64& engine) {
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  return qpd::rot_z(angle(engine)) * qpd::rot_x(angle(engine)) *
         qpd::rot_z(angle(engine));
}

// Random mixture of a few random pure states: a generic physical density
// matrix for round-trip checks.
inline qpd::DensityMatrix random_density(int n_qubits,
                                         std::mt19937_64& engine,
                                         int n_components = 4) {
  std::uniform_real_distribution<double> uniform(0.1, 1.0);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  double total = 0.0;
  for (int k = 0; k < n_components; ++k) {
    const double w = uniform(engine);
    const qpd::StateVector psi = random_state(n_qubits, engine);
    rho += w * (psi.amplitudes() * psi.amplitudes().adjoint());
    total += w;
  }
  rho /= total;
  return qpd::DensityMatrix(n_qubits, std::move(rho));
}

// |<a|b>| — 1 vanishes iff the states agree up to a global phase.
inline double phase_free_distance(const qpd::StateVector& a,
                                  const qpd::StateVector& b) {
  return std::abs(std::abs(qpd::inner(a, b)) - 1.0);
}

inline double max_abs_diff(const Eigen::MatrixXcd& a,
                           const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qpd_test

#endif  // QPD_TESTS_UNIT_TEST_HELPERS_HPP_
