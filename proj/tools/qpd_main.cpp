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

// Command-line surface: play single profiles, sweep the payoff surface,
// verify circuit/cluster equivalence, run the tomography pipeline and audit
// equilibria. Reports are JSON (CSV for sweeps) and are byte-reproducible
// for a fixed seed when --no-timestamp is set.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpd/cluster.hpp"
#include "qpd/density.hpp"
#include "qpd/equilibrium.hpp"
#include "qpd/game.hpp"
#include "qpd/rng.hpp"
#include "qpd/tomography.hpp"
#include "qpd/version.hpp"

namespace {

namespace game = qpd::game;
namespace cluster = qpd::cluster;
namespace tomo = qpd::tomo;
using nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;
constexpr int kExitValidation = 2;
constexpr int kExitCheckFailed = 3;

struct CommonOptions {
  std::string table_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool no_timestamp = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions* opts,
                      bool with_format = true) {
  cmd->add_option("--table", opts->table_path,
                  "payoff table JSON file with fields cc, cd, dc, dd");
  cmd->add_option("--out", opts->out_path, "write the report to this path");
  if (with_format) {
    cmd->add_option("--format", opts->format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  }
  cmd->add_option("--seed", opts->seed, "master random seed (echoed in output)");
  cmd->add_flag("--no-timestamp", opts->no_timestamp,
                "omit the timestamp field for byte-reproducible output");
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

ordered_json report_skeleton(const std::string& command,
                             const CommonOptions& opts) {
  ordered_json doc;
  doc["schema"] = 1;
  doc["tool"] = "qpd";
  doc["version"] = qpd::kVersion;
  doc["command"] = command;
  doc["seed"] = opts.seed;
  if (!opts.no_timestamp) doc["timestamp"] = iso_timestamp();
  return doc;
}

game::PayoffTable load_table(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open payoff table file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
    game::PayoffTable table;
    table.cc = doc.at("cc").get<double>();
    table.cd = doc.at("cd").get<double>();
    table.dc = doc.at("dc").get<double>();
    table.dd = doc.at("dd").get<double>();
    if (!table.is_dilemma()) {
      std::cerr << "warning: payoff table violates the dilemma ordering "
                   "dc > cc > dd > cd\n";
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("payoff table file " + path + ": " + e.what());
  }
}

ordered_json table_json(const game::PayoffTable& t) {
  return ordered_json{{"cc", t.cc}, {"cd", t.cd}, {"dc", t.dc}, {"dd", t.dd}};
}

void write_text(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write output file: " + out_path);
    }
    out << text;
  }
}

void emit_report(const ordered_json& doc, const CommonOptions& opts) {
  write_text(doc.dump(2) + "\n", opts.out_path);
}

game::Strategy parse_strategy_checked(const std::string& text) {
  const game::Strategy s = game::Strategy::parse(text);
  if (!game::in_declared_domain(s)) {
    std::cerr << "warning: strategy " << s.to_string()
              << " lies outside the declared domain theta in [0, pi], "
                 "phi in [0, pi/2]\n";
  }
  return s;
}

ordered_json payoff_json(const game::PayoffPair& pair) {
  ordered_json doc;
  doc["payoff_a"] = pair.a;
  doc["payoff_b"] = pair.b;
  doc["probs"] = ordered_json{{"p00", pair.probs[0]},
                              {"p01", pair.probs[1]},
                              {"p10", pair.probs[2]},
                              {"p11", pair.probs[3]}};
  return doc;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// --- play --------------------------------------------------------------------

int cmd_play(const std::string& a_text, const std::string& b_text,
             const CommonOptions& opts) {
  if (opts.format != "json") {
    throw std::invalid_argument("play supports only --format json");
  }
  const game::Strategy a = parse_strategy_checked(a_text);
  const game::Strategy b = parse_strategy_checked(b_text);
  const game::PayoffTable table = load_table(opts.table_path);

  ordered_json doc = report_skeleton("play", opts);
  doc["config"] = ordered_json{{"a", a.to_string()},
                               {"b", b.to_string()},
                               {"table", table_json(table)}};

  const game::PayoffPair circuit = game::play_circuit(a, b, table);
  ordered_json result;
  result["circuit"] = payoff_json(circuit);
  try {
    const cluster::ClusterOutcome outcome = cluster::play_cluster(a, b, table);
    result["cluster"] = payoff_json(outcome.payoffs);
    result["cluster"]["postselection_probability"] =
        outcome.postselection_probability;
    result["max_discrepancy"] =
        std::max(std::abs(circuit.a - outcome.payoffs.a),
                 std::abs(circuit.b - outcome.payoffs.b));
  } catch (const cluster::UnsupportedStrategyError&) {
    result["cluster"] =
        ordered_json{{"status", "unreachable (six-photon resource required)"}};
  }
  doc["result"] = std::move(result);
  emit_report(doc, opts);
  return 0;
}

// --- sweep -------------------------------------------------------------------

// Composite strategy axis: s in [0,1] walks U(theta,0) from theta = pi down
// to 0 (defect to cooperate), s in [1,2] walks U(0,phi) with phi from 0 to
// pi/2 (cooperate to the fully quantum move).
game::Strategy axis_strategy(double s) {
  if (s <= 1.0) return game::Strategy::general(kPi * (1.0 - s), 0.0);
  return game::Strategy::general(0.0, (s - 1.0) * kPi / 2.0);
}

int cmd_sweep(int grid, const CommonOptions& opts) {
  if (grid < 2) {
    throw std::invalid_argument("sweep: --grid must be at least 2");
  }
  const game::PayoffTable table = load_table(opts.table_path);

  std::vector<double> params(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) {
    params[static_cast<std::size_t>(i)] = 2.0 * i / (grid - 1);
  }

  struct Row {
    double sa, sb;
    game::PayoffPair pair;
  };
  std::vector<Row> rows;
  rows.reserve(params.size() * params.size());
  for (const double sa : params) {
    for (const double sb : params) {
      rows.push_back(
          {sa, sb, game::play_circuit(axis_strategy(sa), axis_strategy(sb),
                                      table)});
    }
  }

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "axisA_param,axisB_param,payoffA,payoffB,p00,p01,p10,p11\n";
    for (const Row& row : rows) {
      out << format_double(row.sa) << ',' << format_double(row.sb) << ','
          << format_double(row.pair.a) << ',' << format_double(row.pair.b);
      for (const double p : row.pair.probs) out << ',' << format_double(p);
      out << '\n';
    }
    write_text(out.str(), opts.out_path);
    return 0;
  }

  ordered_json doc = report_skeleton("sweep", opts);
  doc["config"] = ordered_json{
      {"grid", grid},
      {"axis", "s in [0,1]: U(pi(1-s),0); s in [1,2]: U(0,(s-1)pi/2)"},
      {"table", table_json(table)}};
  ordered_json out_rows = ordered_json::array();
  for (const Row& row : rows) {
    out_rows.push_back(ordered_json{{"axisA_param", row.sa},
                                    {"axisB_param", row.sb},
                                    {"payoffA", row.pair.a},
                                    {"payoffB", row.pair.b},
                                    {"p00", row.pair.probs[0]},
                                    {"p01", row.pair.probs[1]},
                                    {"p10", row.pair.probs[2]},
                                    {"p11", row.pair.probs[3]}});
  }
  doc["result"] = ordered_json{{"rows", std::move(out_rows)}};
  emit_report(doc, opts);
  return 0;
}

// --- verify ------------------------------------------------------------------

int cmd_verify(int grid, bool skip_corrections, const CommonOptions& opts) {
  if (opts.format != "json") {
    throw std::invalid_argument("verify supports only --format json");
  }
  if (grid < 0) {
    throw std::invalid_argument("verify: --grid must be >= 0");
  }
  const game::PayoffTable table = load_table(opts.table_path);

  std::vector<game::Strategy> strategies = {
      game::Strategy::cooperate(), game::Strategy::defect(),
      game::Strategy::quantum(kPi / 4), game::Strategy::quantum(kPi / 2)};
  for (int k = 0; k < grid; ++k) {
    const double alpha = grid == 1 ? 0.0 : k * (kPi / 2) / (grid - 1);
    strategies.push_back(game::Strategy::quantum(alpha));
  }

  const cluster::EquivalenceReport report = cluster::verify_equivalence(
      strategies, table, cluster::ClusterOptions{!skip_corrections});

  const cluster::ProfileComparison* worst = nullptr;
  for (const auto& profile : report.profiles) {
    if (worst == nullptr || profile.discrepancy > worst->discrepancy) {
      worst = &profile;
    }
  }

  constexpr double kTolerance = 1e-8;
  const bool pass = report.max_discrepancy <= kTolerance;

  ordered_json doc = report_skeleton("verify", opts);
  doc["config"] = ordered_json{{"grid", grid},
                               {"strategies", strategies.size()},
                               {"corrections", !skip_corrections},
                               {"table", table_json(table)}};
  ordered_json result;
  result["profiles"] = report.profiles.size();
  result["max_discrepancy"] = report.max_discrepancy;
  result["tolerance"] = kTolerance;
  if (worst != nullptr) {
    result["worst_profile"] = ordered_json{{"a", worst->a.to_string()},
                                           {"b", worst->b.to_string()},
                                           {"discrepancy", worst->discrepancy}};
  }
  result["pass"] = pass;
  doc["result"] = std::move(result);
  emit_report(doc, opts);
  return pass ? 0 : kExitCheckFailed;
}

// --- tomo --------------------------------------------------------------------

tomo::NoiseModel parse_noise(const std::string& text) {
  if (text == "none") return {tomo::NoiseKind::None, 0.0};
  const std::size_t sep = text.find(':');
  if (sep != std::string::npos) {
    const std::string kind = text.substr(0, sep);
    double param = 0.0;
    try {
      param = std::stod(text.substr(sep + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("noise: cannot parse parameter in '" + text +
                                  "'");
    }
    if (kind == "werner") return {tomo::NoiseKind::Werner, param};
    if (kind == "dephased") return {tomo::NoiseKind::Dephased, param};
  }
  throw std::invalid_argument(
      "noise: expected none, werner:<p> or dephased:<sigma>; got '" + text +
      "'");
}

std::string derived_counts_path(const std::string& out_path) {
  const std::filesystem::path path(out_path);
  std::filesystem::path sibling = path;
  sibling.replace_filename(path.stem().string() + "_counts.json");
  return sibling.string();
}

int cmd_tomo(const std::string& noise_text, std::int64_t n, int runs,
             const std::string& counts_out, const CommonOptions& opts) {
  if (opts.format != "json") {
    throw std::invalid_argument("tomo supports only --format json");
  }
  if (n < 1) throw std::invalid_argument("tomo: --n must be >= 1");
  if (runs < 2) throw std::invalid_argument("tomo: --runs must be >= 2");
  const tomo::NoiseModel model = parse_noise(noise_text);

  const qpd::StateVector target = cluster::ideal_cluster_state();
  const qpd::DensityMatrix rho =
      tomo::noise_state(model, target, qpd::mix_seed(opts.seed, 1));
  const auto settings = tomo::generate_settings();
  const auto counts =
      tomo::simulate_counts(rho, settings, n, qpd::mix_seed(opts.seed, 2));

  std::string counts_path = counts_out;
  if (counts_path.empty() && !opts.out_path.empty()) {
    counts_path = derived_counts_path(opts.out_path);
  }
  if (!counts_path.empty()) {
    std::ofstream out(counts_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write counts file: " + counts_path);
    }
    tomo::write_counts_json(out, {opts.seed, n, counts});
  }

  const qpd::DensityMatrix recon = tomo::reconstruct(counts);
  const double f_data = qpd::fidelity_pure(recon, target);
  const tomo::FidelityReport mc = tomo::monte_carlo_fidelity(
      counts, target, runs, qpd::mix_seed(opts.seed, 3));

  Eigen::VectorXd eigenvalues = recon.eigenvalues();
  std::vector<double> spectrum(eigenvalues.data(),
                               eigenvalues.data() + eigenvalues.size());
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());

  ordered_json doc = report_skeleton("tomo", opts);
  doc["config"] = ordered_json{{"noise", noise_text},
                               {"n_per_setting", n},
                               {"runs", runs},
                               {"settings", settings.size()}};
  ordered_json result;
  result["F"] = f_data;
  result["F_mc_mean"] = mc.fidelity;
  result["sigma_F"] = mc.sigma;
  result["runs"] = mc.runs;
  result["witness"] = tomo::witness(f_data);
  result["eigenvalues"] = spectrum;
  if (!counts_path.empty()) result["counts_file"] = counts_path;
  doc["result"] = std::move(result);
  emit_report(doc, opts);
  return 0;
}

// --- analyze -----------------------------------------------------------------

ordered_json profile_list(const std::vector<std::pair<int, int>>& profiles,
                          const std::vector<game::Strategy>& grid) {
  ordered_json out = ordered_json::array();
  for (const auto& [i, j] : profiles) {
    out.push_back(ordered_json{
        {"a", grid[static_cast<std::size_t>(i)].to_string()},
        {"b", grid[static_cast<std::size_t>(j)].to_string()},
        {"index", ordered_json::array({i, j})}});
  }
  return out;
}

ordered_json analyze_grid(const std::vector<game::Strategy>& grid,
                          const game::Evaluator& evaluate) {
  const auto nash = game::find_nash(grid, grid, evaluate);
  const auto pareto = game::find_pareto(grid, grid, evaluate);

  bool resolved = false;
  for (const auto& profile : nash) {
    resolved = resolved ||
               std::find(pareto.begin(), pareto.end(), profile) != pareto.end();
  }

  ordered_json strategies = ordered_json::array();
  for (const game::Strategy& s : grid) strategies.push_back(s.to_string());

  ordered_json payoffs_a = ordered_json::array();
  ordered_json payoffs_b = ordered_json::array();
  for (const game::Strategy& a : grid) {
    ordered_json row_a = ordered_json::array();
    ordered_json row_b = ordered_json::array();
    for (const game::Strategy& b : grid) {
      const game::PayoffPair pair = evaluate(a, b);
      row_a.push_back(pair.a);
      row_b.push_back(pair.b);
    }
    payoffs_a.push_back(std::move(row_a));
    payoffs_b.push_back(std::move(row_b));
  }

  ordered_json doc;
  doc["strategies"] = std::move(strategies);
  doc["payoffs_a"] = std::move(payoffs_a);
  doc["payoffs_b"] = std::move(payoffs_b);
  doc["nash"] = profile_list(nash, grid);
  doc["pareto"] = profile_list(pareto, grid);
  doc["dilemma_resolved"] = resolved;
  return doc;
}

int cmd_analyze(const CommonOptions& opts) {
  if (opts.format != "json") {
    throw std::invalid_argument("analyze supports only --format json");
  }
  const game::PayoffTable table = load_table(opts.table_path);

  const std::vector<game::Strategy> classical_grid = {
      game::Strategy::cooperate(), game::Strategy::defect()};
  const std::vector<game::Strategy> quantum_grid = {
      game::Strategy::cooperate(), game::Strategy::defect(),
      game::Strategy::quantum(kPi / 4), game::Strategy::quantum(kPi / 2)};

  ordered_json doc = report_skeleton("analyze", opts);
  doc["config"] = ordered_json{{"table", table_json(table)}};
  ordered_json result;
  result["classical"] = analyze_grid(
      classical_grid, [&table](const game::Strategy& a, const game::Strategy& b) {
        return game::play_classical(a, b, table);
      });
  result["quantum"] = analyze_grid(
      quantum_grid, [&table](const game::Strategy& a, const game::Strategy& b) {
        return game::play_circuit(a, b, table);
      });
  doc["result"] = std::move(result);
  emit_report(doc, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quantum Prisoner's Dilemma on a simulated one-way quantum computer"};
  app.require_subcommand(1);

  CommonOptions play_opts, sweep_opts, verify_opts, tomo_opts, analyze_opts;
  std::string a_text, b_text;
  int sweep_grid = 17;
  int verify_grid = 50;
  bool skip_corrections = false;
  std::string noise_text = "none";
  std::int64_t tomo_n = 500;
  int tomo_runs = 100;
  std::string counts_out;

  CLI::App* play = app.add_subcommand(
      "play", "play one profile on the circuit and cluster pathways");
  play->add_option("--a", a_text, "strategy of player A (c, d, q:<alpha>, g:<theta>:<phi>)")
      ->required();
  play->add_option("--b", b_text, "strategy of player B")->required();
  add_common_flags(play, &play_opts);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "payoff surface over the composite defect->cooperate->quantum axis");
  sweep->add_option("--grid", sweep_grid, "samples per axis (default 17)");
  add_common_flags(sweep, &sweep_opts);

  CLI::App* verify = app.add_subcommand(
      "verify", "check circuit/cluster payoff equivalence over a strategy grid");
  verify->add_option("--grid", verify_grid,
                     "number of extra phase-sweep strategies (default 50)");
  verify->add_flag("--skip-corrections", skip_corrections)->group("");
  add_common_flags(verify, &verify_opts);

  CLI::App* tomo_cmd = app.add_subcommand(
      "tomo", "simulate tomography of the resource state and reconstruct it");
  tomo_cmd->add_option("--noise", noise_text,
                       "noise model: none, werner:<p>, dephased:<sigma>");
  tomo_cmd->add_option("--n", tomo_n, "events per setting (default 500)");
  tomo_cmd->add_option("--runs", tomo_runs,
                       "Monte Carlo resampling runs (default 100)");
  tomo_cmd->add_option("--counts-out", counts_out,
                       "write the simulated counts file to this path");
  add_common_flags(tomo_cmd, &tomo_opts);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Nash and Pareto sets for the classical and quantum grids");
  add_common_flags(analyze, &analyze_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*play) return cmd_play(a_text, b_text, play_opts);
    if (*sweep) return cmd_sweep(sweep_grid, sweep_opts);
    if (*verify) return cmd_verify(verify_grid, skip_corrections, verify_opts);
    if (*tomo_cmd)
      return cmd_tomo(noise_text, tomo_n, tomo_runs, counts_out, tomo_opts);
    if (*analyze) return cmd_analyze(analyze_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
