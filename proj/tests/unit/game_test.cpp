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
#include <random>
#include <vector>

#include <doctest.h>

#include "qpd/equilibrium.hpp"
#include "test_helpers.hpp"

using namespace qpd;
using namespace qpd::game;
using qpd_test::kPi;

namespace {

const Strategy kC = Strategy::cooperate();
const Strategy kD = Strategy::defect();

std::vector<Strategy> quantum_grid() {
  return {kC, kD, Strategy::quantum(kPi / 4), Strategy::quantum(kPi / 2)};
}

bool contains(const std::vector<std::pair<int, int>>& set, int i, int j) {
  return std::find(set.begin(), set.end(), std::make_pair(i, j)) != set.end();
}

}  // namespace

TEST_CASE("strategy unitaries for the named classes") {
  CHECK(qpd_test::max_abs_diff(strategy_unitary(kC).matrix(),
                               Eigen::Matrix2cd::Identity()) < 1e-15);
  Eigen::Matrix2cd defect;
  defect << 0, -1, 1, 0;
  CHECK(qpd_test::max_abs_diff(strategy_unitary(kD).matrix(), defect) < 1e-12);
  Eigen::Matrix2cd q_half;
  q_half << Complex(0, -1), 0, 0, Complex(0, 1);
  CHECK(qpd_test::max_abs_diff(
            strategy_unitary(Strategy::quantum(kPi / 2)).matrix(), q_half) <
        1e-12);
}

TEST_CASE("q(0) resolves identically to c") {
  const Strategy q0 = Strategy::quantum(0.0);
  CHECK(q0.theta() == 0.0);
  CHECK(q0.phi() == 0.0);
  CHECK(qpd_test::max_abs_diff(strategy_unitary(q0).matrix(),
                               strategy_unitary(kC).matrix()) == 0.0);
}

TEST_CASE("strategy domain helper") {
  CHECK(in_declared_domain(kC));
  CHECK(in_declared_domain(kD));
  CHECK(in_declared_domain(Strategy::quantum(kPi / 2)));
  CHECK_FALSE(in_declared_domain(Strategy::quantum(kPi)));
  CHECK_FALSE(in_declared_domain(Strategy::general(-0.1, 0.0)));
}

TEST_CASE("strategy shorthand parsing") {
  CHECK(Strategy::parse("c").kind() == Strategy::Kind::Cooperate);
  CHECK(Strategy::parse("d").kind() == Strategy::Kind::Defect);
  const Strategy q = Strategy::parse("q:0.7853981633974483");
  CHECK(q.kind() == Strategy::Kind::QuantumPhase);
  CHECK(q.alpha() == doctest::Approx(kPi / 4));
  const Strategy g = Strategy::parse("g:1.0:0.3");
  CHECK(g.theta() == doctest::Approx(1.0));
  CHECK(g.phi() == doctest::Approx(0.3));

  CHECK_THROWS_AS(Strategy::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Strategy::parse("q:abc"), std::invalid_argument);
  CHECK_THROWS_AS(Strategy::parse("g:1.0"), std::invalid_argument);
}

TEST_CASE("circuit outputs for the classical corner profiles") {
  const StateVector cc = evolve_circuit(kC, kC);
  CHECK(std::abs(cc.amplitude(0b00) - 1.0) < 1e-12);

  const StateVector cd = evolve_circuit(kC, kD);
  CHECK(std::abs(cd.amplitude(0b11) + 1.0) < 1e-12);
  CHECK(std::abs(cd.amplitude(0b00)) < 1e-12);
}

TEST_CASE("circuit output for two phase strategies matches the closed form") {
  std::mt19937_64 engine(21);
  std::uniform_real_distribution<double> angle(0.0, kPi / 2);
  for (int trial = 0; trial < 25; ++trial) {
    const double a = angle(engine), b = angle(engine);
    const StateVector out =
        evolve_circuit(Strategy::quantum(a), Strategy::quantum(b));
    const Complex mi(0, -1);
    CHECK(std::abs(out.amplitude(0b00) - std::cos(a) * std::cos(b)) < 1e-12);
    CHECK(std::abs(out.amplitude(0b01) - mi * std::cos(a) * std::sin(b)) <
          1e-12);
    CHECK(std::abs(out.amplitude(0b10) - mi * std::sin(a) * std::cos(b)) <
          1e-12);
    CHECK(std::abs(out.amplitude(0b11) + std::sin(a) * std::sin(b)) < 1e-12);
  }
}

TEST_CASE("referee scores the outcome distribution against the table") {
  const PayoffTable table;
  const PayoffPair certain = referee_payoff({1, 0, 0, 0}, table);
  CHECK(certain.a == doctest::Approx(3.0));
  CHECK(certain.b == doctest::Approx(3.0));

  const PayoffPair exploit = referee_payoff({0, 0, 1, 0}, table);
  CHECK(exploit.a == doctest::Approx(5.0));
  CHECK(exploit.b == doctest::Approx(0.0));

  const PayoffPair uniform = referee_payoff({0.25, 0.25, 0.25, 0.25}, table);
  CHECK(uniform.a == doctest::Approx(9.0 / 4.0));
  CHECK(uniform.b == doctest::Approx(9.0 / 4.0));

  CHECK_THROWS_AS(referee_payoff({0.5, 0.4, 0.0, 0.0}, table),
                  std::invalid_argument);
}

TEST_CASE("payoffs of notable profiles") {
  const PayoffTable table;
  const PayoffPair dd = play_circuit(kD, kD, table);
  CHECK(dd.a == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(dd.b == doctest::Approx(3.0).epsilon(1e-12));

  const PayoffPair cd = play_circuit(kC, kD, table);
  CHECK(cd.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cd.b == doctest::Approx(1.0).epsilon(1e-12));

  const PayoffPair dq = play_circuit(kD, Strategy::quantum(kPi / 2), table);
  CHECK(dq.a == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(dq.b == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("closed-form payoffs for the named classes") {
  const PayoffTable table;
  CHECK(analytic_payoff(Strategy::quantum(kPi / 4), kC, table).a ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(analytic_payoff(kC, Strategy::quantum(kPi / 4), table).a ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(analytic_payoff(Strategy::quantum(kPi / 2), Strategy::quantum(kPi / 2),
                        table)
            .a == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(analytic_payoff(Strategy::general(1.0, 0.3), kC, table),
                  std::invalid_argument);
}

TEST_CASE("oracle: simulated payoffs equal the closed forms on a sweep") {
  const PayoffTable table;
  std::vector<Strategy> strategies = {kC, kD};
  for (int k = 0; k < 50; ++k) {
    strategies.push_back(Strategy::quantum(k * (kPi / 2) / 49.0));
  }
  double max_disc = 0.0;
  for (const Strategy& a : strategies) {
    for (const Strategy& b : strategies) {
      const PayoffPair sim = play_circuit(a, b, table);
      const PayoffPair closed = analytic_payoff(a, b, table);
      max_disc = std::max({max_disc, std::abs(sim.a - closed.a),
                           std::abs(sim.b - closed.b)});
    }
  }
  CHECK(max_disc < 1e-10);
}

TEST_CASE("property: swapping players transposes the payoffs") {
  const PayoffTable table;
  std::mt19937_64 engine(31);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  for (int trial = 0; trial < 50; ++trial) {
    const Strategy a = Strategy::general(angle(engine), angle(engine) / 2);
    const Strategy b = Strategy::general(angle(engine), angle(engine) / 2);
    const PayoffPair ab = play_circuit(a, b, table);
    const PayoffPair ba = play_circuit(b, a, table);
    CHECK(ab.b == doctest::Approx(ba.a).epsilon(1e-12));
    CHECK(ab.a == doctest::Approx(ba.b).epsilon(1e-12));
  }
}

TEST_CASE("classical play: lookup and disentangled circuit agree") {
  const PayoffTable table;
  const PayoffPair cc = play_classical(kC, kC, table);
  CHECK(cc.a == doctest::Approx(3.0));
  CHECK(cc.b == doctest::Approx(3.0));
  const PayoffPair dc = play_classical(kD, kC, table);
  CHECK(dc.a == doctest::Approx(5.0));
  CHECK(dc.b == doctest::Approx(0.0));
  const PayoffPair dd = play_classical(kD, kD, table);
  CHECK(dd.a == doctest::Approx(1.0));
  CHECK(dd.b == doctest::Approx(1.0));

  CHECK_THROWS_AS(play_classical(Strategy::quantum(0.3), kC, table),
                  std::invalid_argument);
}

TEST_CASE("classical grid: defection is the lone Nash point, not Pareto") {
  const PayoffTable table;
  const std::vector<Strategy> grid = {kC, kD};
  const Evaluator classical = [&table](const Strategy& a, const Strategy& b) {
    return play_classical(a, b, table);
  };

  const auto nash = find_nash(grid, grid, classical);
  REQUIRE(nash.size() == 1);
  CHECK(nash[0] == std::make_pair(1, 1));

  const auto pareto = find_pareto(grid, grid, classical);
  CHECK(contains(pareto, 0, 0));
  CHECK_FALSE(contains(pareto, 1, 1));
}

TEST_CASE("quantum grid: mutual defection resolves the dilemma") {
  const PayoffTable table;
  const std::vector<Strategy> grid = quantum_grid();
  const Evaluator quantum = [&table](const Strategy& a, const Strategy& b) {
    return play_circuit(a, b, table);
  };

  const auto nash = find_nash(grid, grid, quantum);
  CHECK(contains(nash, 1, 1));
  CHECK_FALSE(contains(nash, 3, 3));  // q(pi/2) pair loses to deviation to d

  const auto pareto = find_pareto(grid, grid, quantum);
  CHECK(contains(pareto, 1, 1));

  const PayoffPair dd = play_circuit(kD, kD, table);
  CHECK(dd.a == doctest::Approx(3.0));
  CHECK(dd.b == doctest::Approx(3.0));
}

TEST_CASE("the three-strategy grid already resolves the dilemma") {
  const PayoffTable table;
  const std::vector<Strategy> grid = {kC, kD, Strategy::quantum(kPi / 2)};
  const Evaluator quantum = [&table](const Strategy& a, const Strategy& b) {
    return play_circuit(a, b, table);
  };
  const auto nash = find_nash(grid, grid, quantum);
  const auto pareto = find_pareto(grid, grid, quantum);
  CHECK(contains(nash, 1, 1));
  CHECK(contains(pareto, 1, 1));
}

TEST_CASE("degenerate table: every profile is Nash and Pareto") {
  PayoffTable flat;
  flat.cc = flat.cd = flat.dc = flat.dd = 2.0;
  CHECK_FALSE(flat.is_dilemma());
  const std::vector<Strategy> grid = quantum_grid();
  const Evaluator quantum = [&flat](const Strategy& a, const Strategy& b) {
    return play_circuit(a, b, flat);
  };
  CHECK(find_nash(grid, grid, quantum).size() == grid.size() * grid.size());
  CHECK(find_pareto(grid, grid, quantum).size() == grid.size() * grid.size());
}

TEST_CASE("single profile grid is vacuously Pareto") {
  const std::vector<Strategy> just_c = {kC};
  const Evaluator eval = [](const Strategy& a, const Strategy& b) {
    return play_circuit(a, b, PayoffTable{});
  };
  const auto pareto = find_pareto(just_c, just_c, eval);
  REQUIRE(pareto.size() == 1);
  CHECK(pareto[0] == std::make_pair(0, 0));
}
