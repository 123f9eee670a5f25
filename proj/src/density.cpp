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

#include "qpd/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qpd {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenvalueTol = -1e-10;

}  // namespace

DensityMatrix::DensityMatrix(int n_qubits, Eigen::MatrixXcd entries)
    : n_qubits_(n_qubits), m_(std::move(entries)) {
  if (n_qubits_ < 1 || n_qubits_ > 12) {
    throw std::invalid_argument("DensityMatrix: n_qubits out of range");
  }
  const Eigen::Index expected = Eigen::Index{1} << n_qubits_;
  if (m_.rows() != expected || m_.cols() != expected) {
    throw std::invalid_argument("DensityMatrix: matrix must be 2^n x 2^n");
  }
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol ||
      std::abs(m_.trace().imag()) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace must equal 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_,
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenvalueTol) {
    throw std::invalid_argument(
        "DensityMatrix: negative eigenvalue " +
        std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const Eigen::VectorXcd& a = psi.amplitudes();
  return DensityMatrix(psi.n_qubits(), a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(n_qubits,
                       Eigen::MatrixXcd::Identity(dim, dim) /
                           static_cast<double>(dim));
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double fidelity_pure(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != psi.dim()) {
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  }
  const Complex f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
  if (std::abs(f.imag()) > 1e-10) {
    throw std::runtime_error("fidelity_pure: non-real overlap (|imag| = " +
                             std::to_string(std::abs(f.imag())) + ")");
  }
  return f.real();
}

}  // namespace qpd
