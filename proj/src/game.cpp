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

#include "qpd/game.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qpd::game {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_angle(std::string_view text, std::string_view context) {
  try {
    std::size_t used = 0;
    const std::string buf(text);
    const double value = std::stod(buf, &used);
    if (used != buf.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("strategy: cannot parse angle '" +
                                std::string(text) + "' in '" +
                                std::string(context) + "'");
  }
}

// Normal form of a strategy for the closed-form payoff evaluation:
// either "defect" or "quantum phase alpha" (cooperate == q(0)).
struct NormalForm {
  bool is_defect;
  double alpha;
};

NormalForm normal_form(const Strategy& s) {
  switch (s.kind()) {
    case Strategy::Kind::Cooperate:
      return {false, 0.0};
    case Strategy::Kind::Defect:
      return {true, 0.0};
    case Strategy::Kind::QuantumPhase:
      return {false, s.alpha()};
    case Strategy::Kind::General:
      if (s.theta() == 0.0) return {false, s.phi()};
      if (s.theta() == kPi) return {true, 0.0};
      throw std::invalid_argument(
          "analytic_payoff: closed forms exist only for the classes "
          "{c, d, q(alpha)}; got " + s.to_string());
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Strategy Strategy::parse(std::string_view text) {
  if (text == "c") return cooperate();
  if (text == "d") return defect();
  if (text.rfind("q:", 0) == 0) {
    return quantum(parse_angle(text.substr(2), text));
  }
  if (text.rfind("g:", 0) == 0) {
    const std::string_view rest = text.substr(2);
    const std::size_t sep = rest.find(':');
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("strategy: expected g:<theta>:<phi>, got '" +
                                  std::string(text) + "'");
    }
    return general(parse_angle(rest.substr(0, sep), text),
                   parse_angle(rest.substr(sep + 1), text));
  }
  throw std::invalid_argument(
      "strategy: expected one of c, d, q:<alpha>, g:<theta>:<phi>; got '" +
      std::string(text) + "'");
}

std::string Strategy::to_string() const {
  std::ostringstream out;
  out.precision(10);
  switch (kind_) {
    case Kind::Cooperate:
      return "c";
    case Kind::Defect:
      return "d";
    case Kind::QuantumPhase:
      out << "q(" << phi_ << ")";
      return out.str();
    case Kind::General:
      out << "g(" << theta_ << "," << phi_ << ")";
      return out.str();
  }
  return "?";
}

bool in_declared_domain(const Strategy& s) {
  return s.theta() >= 0.0 && s.theta() <= kPi && s.phi() >= 0.0 &&
         s.phi() <= kPi / 2.0;
}

double PayoffTable::entry(int a_bit, int b_bit) const {
  if (a_bit == 0) return b_bit == 0 ? cc : cd;
  return b_bit == 0 ? dc : dd;
}

double PayoffTable::min_entry() const {
  return std::min(std::min(cc, cd), std::min(dc, dd));
}

double PayoffTable::max_entry() const {
  return std::max(std::max(cc, cd), std::max(dc, dd));
}

Operator strategy_unitary(const Strategy& s) {
  return u_gate(s.theta(), s.phi());
}

StateVector evolve_circuit(const Strategy& a, const Strategy& b) {
  const Operator h = hadamard();
  const Operator cp = cphase();
  StateVector state = StateVector::basis_state(2, 0b00);
  state = apply(h, {1}, state);
  state = apply(h, {2}, state);
  state = apply(cp, {1, 2}, state);
  state = apply(strategy_unitary(a), {1}, state);
  state = apply(strategy_unitary(b), {2}, state);
  state = apply(cp, {1, 2}, state);
  state = apply(h, {1}, state);
  state = apply(h, {2}, state);
  return state;
}

PayoffPair referee_payoff(const std::array<double, 4>& probs,
                          const PayoffTable& table) {
  double sum = 0.0;
  for (const double p : probs) {
    if (p < -1e-12) {
      throw std::invalid_argument("referee_payoff: negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "referee_payoff: probabilities sum to " + std::to_string(sum));
  }
  PayoffPair result;
  result.probs = probs;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      result.a += table.entry(i, j) * probs[static_cast<std::size_t>(i * 2 + j)];
      result.b += table.entry(j, i) * probs[static_cast<std::size_t>(i * 2 + j)];
    }
  }
  return result;
}

PayoffPair play_circuit(const Strategy& a, const Strategy& b,
                        const PayoffTable& table) {
  const std::vector<double> dist = bitstring_distribution(evolve_circuit(a, b));
  return referee_payoff({dist[0], dist[1], dist[2], dist[3]}, table);
}

PayoffPair analytic_payoff(const Strategy& a, const Strategy& b,
                           const PayoffTable& table) {
  const NormalForm na = normal_form(a);
  const NormalForm nb = normal_form(b);

  // Outcome distribution of the circuit in closed form. With both players in
  // the q class, the outcome bits follow cos^2/sin^2 of the phase angles;
  // a defector flips the roles of the opponent's terms.
  std::array<double, 4> probs{};
  const auto c2 = [](double x) { return std::cos(x) * std::cos(x); };
  const auto s2 = [](double x) { return std::sin(x) * std::sin(x); };
  if (!na.is_defect && !nb.is_defect) {
    probs = {c2(na.alpha) * c2(nb.alpha), c2(na.alpha) * s2(nb.alpha),
             s2(na.alpha) * c2(nb.alpha), s2(na.alpha) * s2(nb.alpha)};
  } else if (na.is_defect && !nb.is_defect) {
    probs = {0.0, 0.0, s2(nb.alpha), c2(nb.alpha)};
  } else if (!na.is_defect && nb.is_defect) {
    probs = {0.0, s2(na.alpha), 0.0, c2(na.alpha)};
  } else {
    probs = {1.0, 0.0, 0.0, 0.0};
  }
  return referee_payoff(probs, table);
}

PayoffPair play_classical(const Strategy& a, const Strategy& b,
                          const PayoffTable& table) {
  const bool a_defects = a.kind() == Strategy::Kind::Defect;
  const bool b_defects = b.kind() == Strategy::Kind::Defect;
  if ((a.kind() != Strategy::Kind::Cooperate && !a_defects) ||
      (b.kind() != Strategy::Kind::Cooperate && !b_defects)) {
    throw std::invalid_argument(
        "play_classical: both strategies must be c or d");
  }

  std::array<double, 4> probs{};
  probs[static_cast<std::size_t>((a_defects ? 2 : 0) + (b_defects ? 1 : 0))] =
      1.0;
  const PayoffPair lookup = referee_payoff(probs, table);

  // Same circuit without the entangling CP stages.
  const Operator h = hadamard();
  StateVector state = StateVector::basis_state(2, 0b00);
  state = apply(h, {1}, state);
  state = apply(h, {2}, state);
  state = apply(strategy_unitary(a), {1}, state);
  state = apply(strategy_unitary(b), {2}, state);
  state = apply(h, {1}, state);
  state = apply(h, {2}, state);
  const std::vector<double> dist = bitstring_distribution(state);
  const PayoffPair circuit =
      referee_payoff({dist[0], dist[1], dist[2], dist[3]}, table);

  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(lookup.probs[i] - circuit.probs[i]) > 1e-12) {
      throw std::logic_error(
          "play_classical: table lookup and disentangled circuit disagree");
    }
  }
  return lookup;
}

}  // namespace qpd::game
