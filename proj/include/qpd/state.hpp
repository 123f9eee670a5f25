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

#ifndef QPD_STATE_HPP_
#define QPD_STATE_HPP_

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qpd {

using Complex = std::complex<double>;

/// Thrown when a projective measurement lands on an (effectively) orthogonal
/// outcome, so the post-measurement state would be undefined. Signalled
/// instead of silently renormalizing a numerically-zero vector.
class ZeroProbabilityError : public std::runtime_error {
 public:
  explicit ZeroProbabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Pure n-qubit state held as a dense vector of 2^n complex amplitudes.
///
/// Basis convention: qubit labels are 1-based and qubit 1 is the *most
/// significant* bit of the basis index, i.e. |q1 q2 ... qn> sits at index
/// q1*2^(n-1) + q2*2^(n-2) + ... + qn. This lets multi-qubit kets such as
/// |0011> be written down with their natural binary reading.
///
/// The validating constructor normalizes its input and remembers the factor
/// it divided out; states produced by unitary evolution or projection use
/// from_normalized() and are never silently rescaled, so norm preservation
/// is observable in tests.
class StateVector {
 public:
  /// Builds a normalized state from raw amplitudes.
  /// Requires 1 <= n_qubits <= 12, amplitudes.size() == 2^n_qubits and a
  /// nonzero norm; throws std::invalid_argument otherwise.
  StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

  StateVector(int n_qubits, std::initializer_list<Complex> amplitudes);

  /// Wraps amplitudes that are already normalized (caller's contract).
  /// Used by internal operations so that norm drift is never masked.
  static StateVector from_normalized(int n_qubits, Eigen::VectorXcd amplitudes);

  /// Computational-basis state |bits>, where bits is read with the qubit-1
  /// MSB convention (e.g. basis_state(4, 0b0011) == |0011>).
  static StateVector basis_state(int n_qubits, std::uint64_t bits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex amplitude(std::uint64_t basis_index) const {
    return amps_(static_cast<Eigen::Index>(basis_index));
  }

  double norm() const { return amps_.norm(); }

  /// Euclidean norm of the raw amplitudes supplied at construction (the
  /// factor divided out to normalize). 1.0 for from_normalized() states.
  double normalization() const { return normalization_; }

 private:
  StateVector() = default;

  int n_qubits_ = 0;
  Eigen::VectorXcd amps_;
  double normalization_ = 1.0;
};

/// Inner product <a|b>; dimensions must match.
Complex inner(const StateVector& a, const StateVector& b);

class Operator;

/// Applies `op` to the given target qubits (1-based, distinct), identity on
/// the rest. targets[0] indexes the most significant bit of the operator's
/// own basis, so apply(cphase(), {1,2}, s) phases the |11> component of
/// qubits (1,2). The operator must be unitary; the output norm equals the
/// input norm to machine precision.
StateVector apply(const Operator& op, std::span<const int> targets,
                  const StateVector& state);
StateVector apply(const Operator& op, std::initializer_list<int> targets,
                  const StateVector& state);

struct ProjectionResult {
  StateVector state;   // renormalized post-measurement state, one qubit fewer
  double probability;  // squared norm before renormalization
};

/// Projects one qubit onto <ket| (the bra of the supplied normalized ket),
/// removing it from the register. Remaining qubits keep their relative
/// order. Throws ZeroProbabilityError if the outcome probability is below
/// 1e-14.
ProjectionResult project_qubit(const StateVector& state, int qubit,
                               const Eigen::Vector2cd& ket);

/// Born-rule probabilities |amplitude(b)|^2 indexed by basis bitstring.
/// Requires a normalized state; the result sums to 1 within 1e-12.
std::vector<double> bitstring_distribution(const StateVector& state);

}  // namespace qpd

#endif  // QPD_STATE_HPP_
