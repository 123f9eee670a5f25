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

#ifndef QPD_GAME_HPP_
#define QPD_GAME_HPP_

#include <array>
#include <numbers>
#include <string>
#include <string_view>

#include "qpd/operators.hpp"
#include "qpd/state.hpp"

namespace qpd::game {

/// A player's move. The named classes map onto the two-parameter unitary
/// family as c = U(0,0), d = U(pi,0) and q(alpha) = U(0,alpha); General
/// carries arbitrary (theta, phi).
class Strategy {
 public:
  enum class Kind { Cooperate, Defect, QuantumPhase, General };

  static Strategy cooperate() { return Strategy(Kind::Cooperate, 0.0, 0.0); }
  static Strategy defect() {
    return Strategy(Kind::Defect, std::numbers::pi, 0.0);
  }
  static Strategy quantum(double alpha) {
    return Strategy(Kind::QuantumPhase, 0.0, alpha);
  }
  static Strategy general(double theta, double phi) {
    return Strategy(Kind::General, theta, phi);
  }

  /// Parses the CLI shorthand: "c", "d", "q:<alpha>", "g:<theta>:<phi>"
  /// (angles in radians). Throws std::invalid_argument on malformed input.
  static Strategy parse(std::string_view text);

  Kind kind() const { return kind_; }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

  /// For QuantumPhase strategies, the phase angle alpha (== phi()).
  double alpha() const { return phi_; }

  std::string to_string() const;

 private:
  Strategy(Kind kind, double theta, double phi)
      : kind_(kind), theta_(theta), phi_(phi) {}

  Kind kind_;
  double theta_;
  double phi_;
};

/// True when (theta, phi) lies in the declared strategy space
/// theta in [0, pi], phi in [0, pi/2]. Out-of-domain values are legal inputs
/// everywhere (payoff sweeps use them); callers that care may warn.
bool in_declared_domain(const Strategy& s);

/// Payoff matrix for player A, indexed by the (A outcome, B outcome) bit
/// pair; player B is paid by the transposed table. Defaults to the standard
/// dilemma values (cc, cd, dc, dd) = (3, 0, 5, 1).
struct PayoffTable {
  double cc = 3.0;
  double cd = 0.0;
  double dc = 5.0;
  double dd = 1.0;

  /// payoff of A when A's outcome bit is `a_bit` and B's is `b_bit`.
  double entry(int a_bit, int b_bit) const;

  /// dc > cc > dd > cd — the ordering that makes defection dominant yet
  /// collectively suboptimal.
  bool is_dilemma() const { return dc > cc && cc > dd && dd > cd; }

  double min_entry() const;
  double max_entry() const;
};

struct PayoffPair {
  double a = 0.0;
  double b = 0.0;
  std::array<double, 4> probs{};  // p00, p01, p10, p11 (A's bit first)
};

/// The unitary realizing a strategy (see Strategy for the family).
Operator strategy_unitary(const Strategy& s);

/// Runs the two-qubit game circuit
///   [H(x)H] * CP * [U_A (x) U_B] * CP * [H(x)H] |00>
/// and returns the output state; qubit 1 carries A's outcome bit.
StateVector evolve_circuit(const Strategy& a, const Strategy& b);

/// Weighted sum of table entries over the outcome distribution; player B is
/// scored with the transposed table. Probabilities must sum to 1 within 1e-9.
PayoffPair referee_payoff(const std::array<double, 4>& probs,
                          const PayoffTable& table);

/// evolve_circuit + Born probabilities + referee.
PayoffPair play_circuit(const Strategy& a, const Strategy& b,
                        const PayoffTable& table = {});

/// Closed-form payoffs for the named strategy classes {c, d, q(alpha)}
/// (General with theta not in {0, pi} is rejected). An independent check on
/// play_circuit: no state simulation involved.
PayoffPair analytic_payoff(const Strategy& a, const Strategy& b,
                           const PayoffTable& table = {});

/// The classical game: both strategies must be c or d. Computed by table
/// lookup and cross-checked against the circuit with the entangling CP gates
/// removed; disagreement beyond 1e-12 raises std::logic_error.
PayoffPair play_classical(const Strategy& a, const Strategy& b,
                          const PayoffTable& table = {});

}  // namespace qpd::game

#endif  // QPD_GAME_HPP_
