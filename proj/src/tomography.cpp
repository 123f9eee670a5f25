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

#include "qpd/tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qpd/rng.hpp"

namespace qpd::tomo {

namespace {

using namespace std::complex_literals;

constexpr Eigen::Index kDim = 16;
constexpr int kNumPauliStrings = 256;  // 4^4, digits I < X < Y < Z

// +1 / -1 eigenvectors per basis.
Eigen::Vector2cd eigenstate(PauliBasis basis, int bit) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Vector2cd v;
  switch (basis) {
    case PauliBasis::Z:
      v << (bit == 0 ? 1.0 : 0.0), (bit == 0 ? 0.0 : 1.0);
      return v;
    case PauliBasis::X:
      v << s, (bit == 0 ? s : -s);
      return v;
    case PauliBasis::Y:
      v << s, (bit == 0 ? 1i * s : -1i * s);
      return v;
  }
  throw std::logic_error("unreachable");
}

char basis_char(PauliBasis b) {
  switch (b) {
    case PauliBasis::Z: return 'Z';
    case PauliBasis::X: return 'X';
    case PauliBasis::Y: return 'Y';
  }
  throw std::logic_error("unreachable");
}

// Pauli strings are base-4 numbers with digits 0=I, 1=X, 2=Y, 3=Z and
// qubit 1 as the most significant digit.
int pauli_digit(int string_index, int qubit) {
  return (string_index >> (2 * (kNumQubits - qubit))) & 3;
}

int letter_of_basis(PauliBasis b) {
  switch (b) {
    case PauliBasis::Z: return 3;
    case PauliBasis::X: return 1;
    case PauliBasis::Y: return 2;
  }
  throw std::logic_error("unreachable");
}

const std::array<Eigen::Matrix2cd, 4>& pauli_matrices() {
  static const std::array<Eigen::Matrix2cd, 4> kMatrices = [] {
    std::array<Eigen::Matrix2cd, 4> m;
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, -1i, 1i, 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  return kMatrices;
}

// 16x16 matrix of a 4-letter Pauli string.
Eigen::MatrixXcd pauli_string_matrix(int string_index) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int qubit = 1; qubit <= kNumQubits; ++qubit) {
    const Eigen::Matrix2cd& p = pauli_matrices()[static_cast<std::size_t>(
        pauli_digit(string_index, qubit))];
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(i * 2, j * 2, 2, 2) = out(i, j) * p;
      }
    }
    out = std::move(next);
  }
  return out;
}

const std::vector<Eigen::MatrixXcd>& pauli_string_table() {
  static const std::vector<Eigen::MatrixXcd> kTable = [] {
    std::vector<Eigen::MatrixXcd> table;
    table.reserve(kNumPauliStrings);
    for (int p = 0; p < kNumPauliStrings; ++p) {
      table.push_back(pauli_string_matrix(p));
    }
    return table;
  }();
  return kTable;
}

void require_four_qubits(const DensityMatrix& rho, const char* where) {
  if (rho.n_qubits() != kNumQubits) {
    throw std::invalid_argument(std::string(where) +
                                ": expected a 4-qubit density matrix");
  }
}

// Index of a setting in generate_settings() order.
int setting_index(const MeasurementSetting& setting) {
  int idx = 0;
  for (const PauliBasis b : setting.bases) {
    idx = idx * 3 + static_cast<int>(b);
  }
  return idx;
}

}  // namespace

std::string MeasurementSetting::label() const {
  std::string out;
  for (const PauliBasis b : bases) out.push_back(basis_char(b));
  return out;
}

MeasurementSetting MeasurementSetting::from_label(std::string_view label) {
  if (label.size() != kNumQubits) {
    throw std::invalid_argument("setting label must have 4 characters, got '" +
                                std::string(label) + "'");
  }
  MeasurementSetting s;
  for (int i = 0; i < kNumQubits; ++i) {
    switch (label[static_cast<std::size_t>(i)]) {
      case 'Z': s.bases[static_cast<std::size_t>(i)] = PauliBasis::Z; break;
      case 'X': s.bases[static_cast<std::size_t>(i)] = PauliBasis::X; break;
      case 'Y': s.bases[static_cast<std::size_t>(i)] = PauliBasis::Y; break;
      default:
        throw std::invalid_argument("setting label may contain only Z, X, Y");
    }
  }
  return s;
}

std::vector<MeasurementSetting> generate_settings() {
  std::vector<MeasurementSetting> settings;
  settings.reserve(kNumSettings);
  for (int idx = 0; idx < kNumSettings; ++idx) {
    MeasurementSetting s;
    int rest = idx;
    for (int qubit = kNumQubits - 1; qubit >= 0; --qubit) {
      s.bases[static_cast<std::size_t>(qubit)] =
          static_cast<PauliBasis>(rest % 3);
      rest /= 3;
    }
    settings.push_back(s);
  }
  return settings;
}

Eigen::VectorXcd outcome_ket(const MeasurementSetting& setting, int outcome) {
  if (outcome < 0 || outcome >= kOutcomes) {
    throw std::invalid_argument("outcome index out of range");
  }
  Eigen::VectorXcd ket = Eigen::VectorXcd::Ones(1);
  for (int qubit = 1; qubit <= kNumQubits; ++qubit) {
    const int bit = (outcome >> (kNumQubits - qubit)) & 1;
    const Eigen::Vector2cd local =
        eigenstate(setting.bases[static_cast<std::size_t>(qubit - 1)], bit);
    Eigen::VectorXcd next(ket.size() * 2);
    for (Eigen::Index i = 0; i < ket.size(); ++i) {
      next(2 * i) = ket(i) * local(0);
      next(2 * i + 1) = ket(i) * local(1);
    }
    ket = std::move(next);
  }
  return ket;
}

DensityMatrix noise_state(const NoiseModel& model, const StateVector& base,
                          std::uint64_t seed) {
  const Eigen::VectorXcd& amps = base.amplitudes();
  switch (model.kind) {
    case NoiseKind::None:
      return DensityMatrix::pure(base);
    case NoiseKind::Werner: {
      const double p = model.param;
      if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("werner weight must be in [0, 1]");
      }
      const Eigen::Index dim = amps.size();
      Eigen::MatrixXcd rho = p * (amps * amps.adjoint()) +
                             (1.0 - p) / static_cast<double>(dim) *
                                 Eigen::MatrixXcd::Identity(dim, dim);
      return DensityMatrix(base.n_qubits(), std::move(rho));
    }
    case NoiseKind::Dephased: {
      if (model.param < 0.0) {
        throw std::invalid_argument("dephasing std must be >= 0");
      }
      constexpr int kDraws = 200;
      const Eigen::Index dim = amps.size();
      const std::uint64_t branch_bit = std::uint64_t{1}
                                       << (base.n_qubits() - 1);
      std::mt19937_64 engine(mix_seed(seed, 0));
      std::normal_distribution<double> gauss(0.0, model.param);
      Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
      for (int k = 0; k < kDraws; ++k) {
        const Complex phase = std::exp(Complex(0.0, gauss(engine)));
        Eigen::VectorXcd shifted = amps;
        for (Eigen::Index i = 0; i < dim; ++i) {
          if (static_cast<std::uint64_t>(i) & branch_bit) shifted(i) *= phase;
        }
        rho += shifted * shifted.adjoint();
      }
      rho /= static_cast<double>(kDraws);
      return DensityMatrix(base.n_qubits(), std::move(rho));
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<SettingFrequencies> ideal_frequencies(
    const DensityMatrix& rho, std::span<const MeasurementSetting> settings) {
  require_four_qubits(rho, "ideal_frequencies");
  std::vector<SettingFrequencies> out;
  out.reserve(settings.size());
  for (const MeasurementSetting& setting : settings) {
    SettingFrequencies f{setting, {}};
    for (int o = 0; o < kOutcomes; ++o) {
      const Eigen::VectorXcd ket = outcome_ket(setting, o);
      const double p = std::real(ket.dot(rho.matrix() * ket));
      f.frequencies[static_cast<std::size_t>(o)] = std::max(p, 0.0);
    }
    out.push_back(f);
  }
  return out;
}

std::vector<CountRecord> simulate_counts(
    const DensityMatrix& rho, std::span<const MeasurementSetting> settings,
    std::int64_t n_per_setting, std::uint64_t seed) {
  if (n_per_setting < 1) {
    throw std::invalid_argument("simulate_counts: n_per_setting must be >= 1");
  }
  const std::vector<SettingFrequencies> probs =
      ideal_frequencies(rho, settings);
  std::vector<CountRecord> out;
  out.reserve(settings.size());
  for (std::size_t s = 0; s < probs.size(); ++s) {
    std::mt19937_64 engine(
        mix_seed(seed, static_cast<std::uint64_t>(
                           setting_index(probs[s].setting))));
    CountRecord record{probs[s].setting, {}};
    for (int o = 0; o < kOutcomes; ++o) {
      const double mean =
          static_cast<double>(n_per_setting) *
          probs[s].frequencies[static_cast<std::size_t>(o)];
      if (mean > 0.0) {
        std::poisson_distribution<std::int64_t> poisson(mean);
        record.counts[static_cast<std::size_t>(o)] = poisson(engine);
      }
    }
    out.push_back(record);
  }
  return out;
}

std::vector<SettingFrequencies> normalize_counts(
    std::span<const CountRecord> counts) {
  std::array<bool, kNumSettings> seen{};
  std::vector<SettingFrequencies> out;
  out.reserve(counts.size());
  for (const CountRecord& record : counts) {
    const int idx = setting_index(record.setting);
    if (seen[static_cast<std::size_t>(idx)]) {
      throw std::invalid_argument("normalize_counts: duplicate setting " +
                                  record.setting.label());
    }
    seen[static_cast<std::size_t>(idx)] = true;
    std::int64_t total = 0;
    for (const std::int64_t c : record.counts) {
      if (c < 0) {
        throw std::invalid_argument("normalize_counts: negative count in " +
                                    record.setting.label());
      }
      total += c;
    }
    if (total == 0) {
      throw std::invalid_argument(
          "normalize_counts: all-zero counts in setting " +
          record.setting.label());
    }
    SettingFrequencies f{record.setting, {}};
    for (int o = 0; o < kOutcomes; ++o) {
      f.frequencies[static_cast<std::size_t>(o)] =
          static_cast<double>(record.counts[static_cast<std::size_t>(o)]) /
          static_cast<double>(total);
    }
    out.push_back(f);
  }
  const bool complete = std::all_of(seen.begin(), seen.end(),
                                    [](bool b) { return b; });
  if (!complete) {
    throw std::invalid_argument(
        "normalize_counts: all 81 settings are required");
  }
  return out;
}

Eigen::MatrixXcd linear_inversion(std::span<const SettingFrequencies> freqs) {
  if (freqs.size() != kNumSettings) {
    throw std::invalid_argument(
        "linear_inversion: all 81 settings are required");
  }

  // Every Pauli string is measurable in each setting whose bases match it on
  // its support; averaging the per-setting empirical expectations is the
  // least-squares solution because the design matrix has orthogonal columns.
  std::array<double, kNumPauliStrings> sums{};
  std::array<int, kNumPauliStrings> hits{};
  for (const SettingFrequencies& f : freqs) {
    std::array<int, kNumQubits> letters{};
    for (int qubit = 1; qubit <= kNumQubits; ++qubit) {
      letters[static_cast<std::size_t>(qubit - 1)] =
          letter_of_basis(f.setting.bases[static_cast<std::size_t>(qubit - 1)]);
    }
    for (int mask = 0; mask < kOutcomes; ++mask) {
      int string_index = 0;
      for (int qubit = 1; qubit <= kNumQubits; ++qubit) {
        const bool active = (mask >> (kNumQubits - qubit)) & 1;
        string_index =
            string_index * 4 +
            (active ? letters[static_cast<std::size_t>(qubit - 1)] : 0);
      }
      double expectation = 0.0;
      for (int o = 0; o < kOutcomes; ++o) {
        const int parity = std::popcount(static_cast<unsigned>(o & mask)) & 1;
        expectation += (parity ? -1.0 : 1.0) *
                       f.frequencies[static_cast<std::size_t>(o)];
      }
      sums[static_cast<std::size_t>(string_index)] += expectation;
      hits[static_cast<std::size_t>(string_index)] += 1;
    }
  }

  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kDim, kDim);
  for (int p = 0; p < kNumPauliStrings; ++p) {
    const double coefficient =
        sums[static_cast<std::size_t>(p)] / hits[static_cast<std::size_t>(p)];
    rho += coefficient * pauli_string_table()[static_cast<std::size_t>(p)];
  }
  rho /= static_cast<double>(kDim);
  return rho;
}

DensityMatrix nearest_physical(const Eigen::MatrixXcd& hermitian) {
  if (hermitian.rows() != kDim || hermitian.cols() != kDim) {
    throw std::invalid_argument("nearest_physical: expected a 16x16 matrix");
  }
  const Eigen::MatrixXcd sym = (hermitian + hermitian.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  Eigen::VectorXd values = solver.eigenvalues();

  // Euclidean projection of the spectrum onto the probability simplex.
  std::vector<double> sorted(values.data(), values.data() + values.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate =
        (1.0 - cumulative) / static_cast<double>(k + 1);
    if (sorted[k] + candidate > 0.0) shift = candidate;
  }
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values(i) = std::max(values(i) + shift, 0.0);
  }

  const Eigen::MatrixXcd rho = solver.eigenvectors() * values.asDiagonal() *
                               solver.eigenvectors().adjoint();
  return DensityMatrix(kNumQubits, rho);
}

DensityMatrix reconstruct_frequencies(
    std::span<const SettingFrequencies> freqs) {
  return nearest_physical(linear_inversion(freqs));
}

DensityMatrix reconstruct(std::span<const CountRecord> counts) {
  const std::vector<SettingFrequencies> freqs = normalize_counts(counts);
  return reconstruct_frequencies(freqs);
}

FidelityReport monte_carlo_fidelity(std::span<const CountRecord> counts,
                                    const StateVector& target, int runs,
                                    std::uint64_t seed) {
  if (runs < 2) {
    throw std::invalid_argument("monte_carlo_fidelity: runs must be >= 2");
  }
  std::vector<double> fidelities;
  fidelities.reserve(static_cast<std::size_t>(runs));
  std::vector<CountRecord> resampled(counts.begin(), counts.end());
  for (int run = 0; run < runs; ++run) {
    std::mt19937_64 engine(mix_seed(seed, static_cast<std::uint64_t>(run)));
    for (std::size_t s = 0; s < resampled.size(); ++s) {
      for (int o = 0; o < kOutcomes; ++o) {
        const std::int64_t observed =
            counts[s].counts[static_cast<std::size_t>(o)];
        if (observed > 0) {
          std::poisson_distribution<std::int64_t> poisson(
              static_cast<double>(observed));
          resampled[s].counts[static_cast<std::size_t>(o)] = poisson(engine);
        } else {
          resampled[s].counts[static_cast<std::size_t>(o)] = 0;
        }
      }
    }
    fidelities.push_back(fidelity_pure(reconstruct(resampled), target));
  }

  FidelityReport report;
  report.runs = runs;
  report.fidelity =
      std::accumulate(fidelities.begin(), fidelities.end(), 0.0) /
      static_cast<double>(runs);
  double ss = 0.0;
  for (const double f : fidelities) {
    ss += (f - report.fidelity) * (f - report.fidelity);
  }
  report.sigma = std::sqrt(ss / static_cast<double>(runs - 1));
  report.witness = witness(report.fidelity);
  return report;
}

bool witness(double fidelity) { return fidelity > 0.5; }

}  // namespace qpd::tomo
