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

#ifndef QPD_DENSITY_HPP_
#define QPD_DENSITY_HPP_

#include <Eigen/Dense>

#include "qpd/state.hpp"

namespace qpd {

/// Physical n-qubit density matrix. Construction validates hermiticity and
/// unit trace within 1e-10 and eigenvalues >= -1e-10; raw (possibly
/// unphysical) estimates are kept as plain Eigen matrices instead.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, Eigen::MatrixXcd entries);

  static DensityMatrix pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  /// Eigenvalues in ascending order.
  Eigen::VectorXd eigenvalues() const;

 private:
  int n_qubits_;
  Eigen::MatrixXcd m_;
};

/// Overlap <psi|rho|psi> with a pure reference state. The result is the real
/// part; an imaginary residue above 1e-10 (non-Hermitian input) throws.
double fidelity_pure(const DensityMatrix& rho, const StateVector& psi);

}  // namespace qpd

#endif  // QPD_DENSITY_HPP_
