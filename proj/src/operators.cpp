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

#include "qpd/operators.hpp"

#include <cmath>
#include <utility>

namespace qpd {

namespace {

using namespace std::complex_literals;

Operator checked_gate(Eigen::MatrixXcd m, std::string label) {
  Operator op(std::move(m), std::move(label));
  if (!op.is_unitary(1e-12)) {
    throw std::logic_error("gate constructor produced a non-unitary matrix: " +
                           op.label());
  }
  return op;
}

void require_params(std::string_view label, std::span<const double> params,
                    std::size_t expected) {
  if (params.size() != expected) {
    throw std::invalid_argument("gate " + std::string(label) + " expects " +
                                std::to_string(expected) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

}  // namespace

Operator::Operator(Eigen::MatrixXcd entries, std::string label)
    : m_(std::move(entries)), label_(std::move(label)) {
  if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
    throw std::invalid_argument("Operator: matrix must be 2x2 or 4x4");
  }
}

bool Operator::is_unitary(double tol) const {
  const Eigen::MatrixXcd delta =
      m_ * m_.adjoint() - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  return delta.cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::dagger() const {
  return Operator(m_.adjoint(), label_.empty() ? "" : label_ + "^");
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw std::invalid_argument("Operator product: dimension mismatch");
  }
  std::string label;
  if (!lhs.label_.empty() && !rhs.label_.empty()) {
    label = lhs.label_ + "*" + rhs.label_;
  }
  return Operator(lhs.m_ * rhs.m_, std::move(label));
}

Operator kron(const Operator& lhs, const Operator& rhs) {
  const Eigen::MatrixXcd& a = lhs.matrix();
  const Eigen::MatrixXcd& b = rhs.matrix();
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  std::string label;
  if (!lhs.label().empty() && !rhs.label().empty()) {
    label = lhs.label() + "x" + rhs.label();
  }
  return Operator(std::move(out), std::move(label));
}

Operator identity_gate(int dim) {
  return checked_gate(Eigen::MatrixXcd::Identity(dim, dim), "I");
}

Operator hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return checked_gate(m / std::sqrt(2.0), "H");
}

Operator pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return checked_gate(m, "X");
}

Operator pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -1i, 1i, 0;
  return checked_gate(m, "Y");
}

Operator pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return checked_gate(m, "Z");
}

Operator cphase() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = -1;
  return checked_gate(m, "CP");
}

Operator rot_z(double alpha) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(1i * (alpha / 2.0));
  m(1, 1) = std::exp(-1i * (alpha / 2.0));
  return checked_gate(m, "Rz");
}

Operator rot_x(double alpha) {
  const double c = std::cos(alpha / 2.0);
  const Complex is = 1i * std::sin(alpha / 2.0);
  Eigen::Matrix2cd m;
  m << c, is, is, c;
  return checked_gate(m, "Rx");
}

Operator euler_rotation(double alpha, double beta, double gamma) {
  const Complex diff = std::exp(1i * (alpha - gamma));
  const Complex sum = std::exp(1i * (alpha + gamma));
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  Eigen::Matrix2cd m;
  m << diff * c, -sum * s, diff * s, sum * c;
  return checked_gate(m, "R");
}

Operator u_gate(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd m;
  m << std::exp(-1i * phi) * c, -s, s, std::exp(1i * phi) * c;
  return checked_gate(m, "U");
}

Operator gate(std::string_view label, std::span<const double> params) {
  if (label == "H") {
    require_params(label, params, 0);
    return hadamard();
  }
  if (label == "CP") {
    require_params(label, params, 0);
    return cphase();
  }
  if (label == "X") {
    require_params(label, params, 0);
    return pauli_x();
  }
  if (label == "Y") {
    require_params(label, params, 0);
    return pauli_y();
  }
  if (label == "Z") {
    require_params(label, params, 0);
    return pauli_z();
  }
  if (label == "Rz") {
    require_params(label, params, 1);
    return rot_z(params[0]);
  }
  if (label == "Rx") {
    require_params(label, params, 1);
    return rot_x(params[0]);
  }
  if (label == "R") {
    require_params(label, params, 3);
    return euler_rotation(params[0], params[1], params[2]);
  }
  if (label == "U") {
    require_params(label, params, 2);
    return u_gate(params[0], params[1]);
  }
  throw std::invalid_argument("unknown gate label: " + std::string(label));
}

}  // namespace qpd
