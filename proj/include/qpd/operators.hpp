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

#ifndef QPD_OPERATORS_HPP_
#define QPD_OPERATORS_HPP_

#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "qpd/state.hpp"

namespace qpd {

/// A 2x2 or 4x4 complex matrix acting on named qubit targets. Carries an
/// optional label for diagnostics. Named gate constructors verify unitarity
/// at construction (within 1e-12).
class Operator {
 public:
  explicit Operator(Eigen::MatrixXcd entries, std::string label = "");

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  const std::string& label() const { return label_; }

  bool is_unitary(double tol = 1e-12) const;
  Operator dagger() const;

  friend Operator operator*(const Operator& lhs, const Operator& rhs);

 private:
  Eigen::MatrixXcd m_;
  std::string label_;
};

/// Tensor product; lhs acts on the more significant sub-index bits.
Operator kron(const Operator& lhs, const Operator& rhs);

Operator identity_gate(int dim = 2);
Operator hadamard();
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

/// Controlled-phase diag(1,1,1,-1): flips the sign of |11>.
Operator cphase();

/// z-rotation exp(+i*alpha*sigma_z/2) = diag(e^{i a/2}, e^{-i a/2}).
Operator rot_z(double alpha);

/// x-rotation exp(+i*alpha*sigma_x/2); equal to H * rot_z(alpha) * H.
Operator rot_x(double alpha);

/// Single-qubit correction rotation used on the cluster output wires:
///   [ e^{i(a-g)} cos(b/2)   -e^{i(a+g)} sin(b/2) ]
///   [ e^{i(a-g)} sin(b/2)    e^{i(a+g)} cos(b/2) ]
/// Satisfies euler_rotation(0,0,0) == I and euler_rotation(0,pi,0) ==
/// -i*sigma_y (the only values the protocol uses).
Operator euler_rotation(double alpha, double beta, double gamma);

/// The two-parameter strategy family
///   [ e^{-i phi} cos(theta/2)   -sin(theta/2) ]
///   [ sin(theta/2)               e^{i phi} cos(theta/2) ]
/// u_gate(0,0) is the identity ("cooperate"), u_gate(pi,0) is the bit flip
/// [[0,-1],[1,0]] ("defect").
Operator u_gate(double theta, double phi);

/// String factory over the gate set {H, CP, X, Y, Z, Rz, Rx, R, U}.
/// Parameter counts: Rz/Rx take 1, R takes 3, U takes 2, the rest none.
/// Throws std::invalid_argument for unknown labels or wrong arity.
Operator gate(std::string_view label, std::span<const double> params = {});

}  // namespace qpd

#endif  // QPD_OPERATORS_HPP_
