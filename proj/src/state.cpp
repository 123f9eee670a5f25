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

#include "qpd/state.hpp"

#include <cmath>
#include <utility>

#include "qpd/operators.hpp"

namespace qpd {

namespace {

constexpr int kMaxQubits = 12;

void check_register_shape(int n_qubits, Eigen::Index size) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: n_qubits must be in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n_qubits));
  }
  const Eigen::Index expected = Eigen::Index{1} << n_qubits;
  if (size != expected) {
    throw std::invalid_argument(
        "StateVector: expected " + std::to_string(expected) +
        " amplitudes for " + std::to_string(n_qubits) + " qubits, got " +
        std::to_string(size));
  }
}

// 0-based bit position of a 1-based qubit label (qubit 1 = MSB).
int bit_position(int n_qubits, int qubit) {
  if (qubit < 1 || qubit > n_qubits) {
    throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                " out of range for " +
                                std::to_string(n_qubits) + " qubits");
  }
  return n_qubits - qubit;
}

}  // namespace

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes) {
  check_register_shape(n_qubits, amplitudes.size());
  const double norm = amplitudes.norm();
  if (norm <= 0.0 || !std::isfinite(norm)) {
    throw std::invalid_argument(
        "StateVector: amplitudes must have a finite nonzero norm");
  }
  n_qubits_ = n_qubits;
  amps_ = std::move(amplitudes);
  amps_ /= norm;
  normalization_ = norm;
}

StateVector::StateVector(int n_qubits, std::initializer_list<Complex> amplitudes)
    : StateVector(n_qubits,
                  Eigen::Map<const Eigen::VectorXcd>(
                      amplitudes.begin(),
                      static_cast<Eigen::Index>(amplitudes.size()))) {}

StateVector StateVector::from_normalized(int n_qubits,
                                         Eigen::VectorXcd amplitudes) {
  check_register_shape(n_qubits, amplitudes.size());
  StateVector s;
  s.n_qubits_ = n_qubits;
  s.amps_ = std::move(amplitudes);
  s.normalization_ = 1.0;
  return s;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t bits) {
  check_register_shape(n_qubits, Eigen::Index{1} << n_qubits);
  if (bits >= (std::uint64_t{1} << n_qubits)) {
    throw std::invalid_argument("basis_state: bitstring out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
  amps(static_cast<Eigen::Index>(bits)) = 1.0;
  return from_normalized(n_qubits, std::move(amps));
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

StateVector apply(const Operator& op, std::span<const int> targets,
                  const StateVector& state) {
  const int n = state.n_qubits();
  const std::size_t k = targets.size();
  if (k == 0 || op.dim() != (1 << k)) {
    throw std::invalid_argument(
        "apply: operator dimension does not match target count");
  }
  if (!op.is_unitary(1e-10)) {
    throw std::invalid_argument("apply: operator is not unitary");
  }

  std::vector<int> pos(k);
  std::uint64_t target_mask = 0;
  for (std::size_t t = 0; t < k; ++t) {
    pos[t] = bit_position(n, targets[t]);
    const std::uint64_t bit = std::uint64_t{1} << pos[t];
    if (target_mask & bit) {
      throw std::invalid_argument("apply: duplicate target qubit");
    }
    target_mask |= bit;
  }

  // Sub-index bit t (targets[t] is the more significant the smaller t is)
  // scattered back into the full index.
  const auto scatter = [&](std::uint64_t sub) {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if ((sub >> (k - 1 - t)) & 1) out |= std::uint64_t{1} << pos[t];
    }
    return out;
  };

  const std::uint64_t dim = static_cast<std::uint64_t>(state.dim());
  const std::uint64_t sub_dim = std::uint64_t{1} << k;
  std::vector<std::uint64_t> offsets(sub_dim);
  for (std::uint64_t s = 0; s < sub_dim; ++s) offsets[s] = scatter(s);

  const Eigen::VectorXcd& in = state.amplitudes();
  const Eigen::MatrixXcd& u = op.matrix();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.dim());
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (std::uint64_t row = 0; row < sub_dim; ++row) {
      Complex acc = 0.0;
      for (std::uint64_t col = 0; col < sub_dim; ++col) {
        acc += u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) *
               in(static_cast<Eigen::Index>(base | offsets[col]));
      }
      out(static_cast<Eigen::Index>(base | offsets[row])) = acc;
    }
  }
  return StateVector::from_normalized(n, std::move(out));
}

StateVector apply(const Operator& op, std::initializer_list<int> targets,
                  const StateVector& state) {
  return apply(op, std::span<const int>(targets.begin(), targets.size()), state);
}

ProjectionResult project_qubit(const StateVector& state, int qubit,
                               const Eigen::Vector2cd& ket) {
  const int n = state.n_qubits();
  if (n < 2) {
    throw std::invalid_argument(
        "project_qubit: cannot remove the last remaining qubit");
  }
  if (std::abs(ket.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("project_qubit: ket must be normalized");
  }
  const int pos = bit_position(n, qubit);

  const Eigen::VectorXcd& in = state.amplitudes();
  const Eigen::Index out_dim = state.dim() / 2;
  Eigen::VectorXcd out(out_dim);
  const Complex b0 = std::conj(ket(0));
  const Complex b1 = std::conj(ket(1));
  const std::uint64_t low_mask = (std::uint64_t{1} << pos) - 1;
  for (std::uint64_t r = 0; r < static_cast<std::uint64_t>(out_dim); ++r) {
    const std::uint64_t i0 = ((r & ~low_mask) << 1) | (r & low_mask);
    const std::uint64_t i1 = i0 | (std::uint64_t{1} << pos);
    out(static_cast<Eigen::Index>(r)) =
        b0 * in(static_cast<Eigen::Index>(i0)) +
        b1 * in(static_cast<Eigen::Index>(i1));
  }

  const double probability = out.squaredNorm();
  if (probability < 1e-14) {
    throw ZeroProbabilityError(
        "project_qubit: outcome has (numerically) zero probability");
  }
  out /= std::sqrt(probability);
  return ProjectionResult{StateVector::from_normalized(n - 1, std::move(out)),
                          probability};
}

std::vector<double> bitstring_distribution(const StateVector& state) {
  if (std::abs(state.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "bitstring_distribution: state is not normalized");
  }
  const Eigen::VectorXcd& amps = state.amplitudes();
  std::vector<double> probs(static_cast<std::size_t>(state.dim()));
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    probs[static_cast<std::size_t>(i)] = std::norm(amps(i));
  }
  return probs;
}

}  // namespace qpd
