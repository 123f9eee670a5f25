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

#ifndef QPD_TOMOGRAPHY_HPP_
#define QPD_TOMOGRAPHY_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qpd/density.hpp"
#include "qpd/state.hpp"

namespace qpd::tomo {

inline constexpr int kNumQubits = 4;
inline constexpr int kNumSettings = 81;        // 3^4 local Pauli bases
inline constexpr int kOutcomes = 16;           // 2^4 projectors per setting

enum class PauliBasis : int { Z = 0, X = 1, Y = 2 };

/// One local measurement setting: a Pauli basis per qubit. Each setting has
/// 16 outcome projectors (tensor products of the per-qubit eigenstates),
/// indexed by the outcome bitstring with qubit 1 as the most significant
/// bit; bit 0 selects the +1 eigenstate.
struct MeasurementSetting {
  std::array<PauliBasis, kNumQubits> bases{};

  std::string label() const;  // e.g. "ZXYZ", qubit 1 first
  static MeasurementSetting from_label(std::string_view label);
};

/// All 81 settings in lexicographic order (Z < X < Y), "ZZZZ" first.
std::vector<MeasurementSetting> generate_settings();

/// 16-dimensional ket of one outcome projector.
Eigen::VectorXcd outcome_ket(const MeasurementSetting& setting, int outcome);

enum class NoiseKind { None, Werner, Dephased };

struct NoiseModel {
  NoiseKind kind = NoiseKind::None;
  double param = 0.0;  // Werner: mixing weight p; Dephased: phase std (rad)
};

/// Produces the noisy preparation:
///  - None: |base><base|;
///  - Werner: p |base><base| + (1-p) I / 2^n;
///  - Dephased: a random relative phase between the qubit-1 = 0 and
///    qubit-1 = 1 branches, Gaussian with the given std, averaged over 200
///    seeded draws.
DensityMatrix noise_state(const NoiseModel& model, const StateVector& base,
                          std::uint64_t seed = 0);

struct CountRecord {
  MeasurementSetting setting;
  std::array<std::int64_t, kOutcomes> counts{};
};

/// Simulates Poissonian counts: for every projector the count is drawn from
/// Poisson(n_per_setting * Tr(rho * proj)). Deterministic in (rho, settings,
/// n, seed); each setting uses its own derived stream so evaluation order
/// does not matter.
std::vector<CountRecord> simulate_counts(
    const DensityMatrix& rho, std::span<const MeasurementSetting> settings,
    std::int64_t n_per_setting, std::uint64_t seed);

struct SettingFrequencies {
  MeasurementSetting setting;
  std::array<double, kOutcomes> frequencies{};
};

/// Exact outcome probabilities Tr(rho * proj) per setting — the infinite-
/// statistics limit of simulate_counts.
std::vector<SettingFrequencies> ideal_frequencies(
    const DensityMatrix& rho, std::span<const MeasurementSetting> settings);

/// Per-setting normalization of counts. Requires all 81 settings, each with
/// a positive total; throws std::invalid_argument otherwise.
std::vector<SettingFrequencies> normalize_counts(
    std::span<const CountRecord> counts);

/// Least-squares linear inversion of setting frequencies onto the Hermitian
/// operator space. With the overcomplete local-Pauli settings the solution
/// is the per-Pauli-string average of the empirical expectation values over
/// all compatible settings. The output is Hermitian with unit trace but may
/// have negative eigenvalues; it is returned raw.
Eigen::MatrixXcd linear_inversion(std::span<const SettingFrequencies> freqs);

/// Frobenius-nearest density matrix to a Hermitian estimate: eigenvalues are
/// projected onto the probability simplex, eigenvectors kept.
DensityMatrix nearest_physical(const Eigen::MatrixXcd& hermitian);

/// linear_inversion + nearest_physical.
DensityMatrix reconstruct(std::span<const CountRecord> counts);
DensityMatrix reconstruct_frequencies(std::span<const SettingFrequencies> freqs);

struct FidelityReport {
  double fidelity = 0.0;  // mean over Monte Carlo runs
  double sigma = 0.0;     // sample standard deviation over runs
  int runs = 0;
  bool witness = false;   // fidelity > 0.5
};

/// Error bar for the reconstructed fidelity: every count is resampled from
/// Poisson(observed count), the state is re-reconstructed and its fidelity
/// with `target` recomputed; mean and std over the runs are reported.
/// Requires runs >= 2. Run r uses the stream derived from (seed, r).
FidelityReport monte_carlo_fidelity(std::span<const CountRecord> counts,
                                    const StateVector& target, int runs = 100,
                                    std::uint64_t seed = 0);

/// Genuine four-partite entanglement witness: true iff fidelity with the
/// ideal cluster state exceeds 1/2, the ceiling for biseparable states.
bool witness(double fidelity);

// --- counts file (JSON) -----------------------------------------------------

struct CountsFile {
  std::uint64_t seed = 0;
  std::int64_t n_per_setting = 0;
  std::vector<CountRecord> records;
};

/// Schema: {"seed": u64, "N": i64, "settings": [{"bases": "ZXYZ",
/// "counts": [16 ints]}, ...]}.
void write_counts_json(std::ostream& out, const CountsFile& file);
CountsFile read_counts_json(std::istream& in);

}  // namespace qpd::tomo

#endif  // QPD_TOMOGRAPHY_HPP_
