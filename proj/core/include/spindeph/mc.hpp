// Copyright 2026 The spindeph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

#include "spindeph/physics.hpp"
#include "spindeph/rng.hpp"
#include "spindeph/types.hpp"

namespace spindeph::mc {

/// Initial motional state: thermal distribution plus an optional
/// fixed-magnitude coherent drive of uniformly random phase.
struct MotionalPrep {
  ThermalState thermal = ThermalState::from_nbar(1.0);
  double coherent_drive_mag = 0.0;  ///< |alpha_d| >= 0

  void validate() const;
};

struct DetectionConfig {
  int n_ions = 1;
  double photon_rate_per_ion = 0.0;  ///< counts/s; 0 disables photon sampling
  double detection_time = 0.0;       ///< s
  double background_dephasing_std = 0.0;  ///< rad, from phi_odf = 0 calibration
  std::uint64_t rng_seed = 0;

  void validate() const;
};

/// One simulated experiment sequence.
struct ShotRecord {
  Complex alpha_k{0.0, 0.0};  ///< sampled initial motional state
  double theta_total = 0.0;   ///< net Bloch-vector rotation, rad
  double p_up = 0.0;          ///< single-spin up probability for this shot
  int n_up = -1;              ///< projective outcome, -1 if absent (photon-only data)
  long photons = -1;          ///< detected photon count, -1 if photon path disabled
};

/// Photon-count histogram in bright-state-normalized units.
struct Histogram {
  std::vector<double> bin_edges;  ///< size counts.size()+1, strictly increasing
  std::vector<long> counts;
  double normalization = 1.0;  ///< counts at which the bright state maps to 1
};

/// Mean photon count with every spin bright: N * rate * t_det. Falls back to
/// N when the photon path is disabled (histograms then bin n_up/N).
double bright_state_normalization(const DetectionConfig& det);

/// Draws alpha_k = sqrt(-ln(u)/beta) e^{i phi} (thermal coherent state, so
/// |alpha_k|^2 is exponential with mean 1/beta) plus, when configured,
/// |alpha_d| e^{i phi'} with an independent uniform phase.
Complex sample_initial_state(const MotionalPrep& prep, SplitMix64& rng);

/// Simulates one full sequence: samples the initial state, applies the
/// spin-dependent displacement and rotation theta_coh = 4 Im{alpha* alpha_k},
/// adds the background dephasing rotation N(0, background_std^2) and the
/// spin-motion entanglement rotation N(0, 4|alpha|^2) (the Gaussian rotation
/// whose harmonics e^{-2 m^2 |alpha|^2} reproduce the displaced-state overlap
/// factors exactly, so collective spin moments match the closed forms), then
/// draws n_up ~ Binomial(N, p_up) and photons ~ Poisson(n_up * rate * t).
ShotRecord simulate_shot(const OdfSequence& seq, const TrapConfig& trap,
                         const DetectionConfig& det, const MotionalPrep& prep,
                         FinalPulsePhase delta_phi, SplitMix64& rng);

/// Runs n_shots independent sequences. Shot k uses the stream
/// derive_stream(det.rng_seed, k), so results are identical for any thread
/// count and execution order. n_threads = 0 picks hardware concurrency.
std::vector<ShotRecord> run_experiment(const OdfSequence& seq,
                                       const TrapConfig& trap,
                                       const DetectionConfig& det,
                                       const MotionalPrep& prep,
                                       FinalPulsePhase delta_phi, long n_shots,
                                       int n_threads = 0);

/// Per-shot value binned by build_histogram: photons/normalization when the
/// photon path is enabled, otherwise n_up/N.
std::vector<double> normalized_counts(const std::vector<ShotRecord>& shots,
                                      const DetectionConfig& det);

/// Bins shots at the given width in bright-normalized units. Edges start at
/// floor(min/width)*width; the total count equals the number of shots.
Histogram build_histogram(const std::vector<ShotRecord>& shots,
                          const DetectionConfig& det, double bin_width);

/// Number of modes of the histogram after moving-average smoothing:
/// local maxima whose topographic prominence is at least prominence_frac of
/// the global maximum. A thermal state gives 1; a strong coherent drive of
/// random phase splits the distribution and gives 2.
int count_modes(const Histogram& hist, int smooth_window = 5,
                double prominence_frac = 0.15);

}  // namespace spindeph::mc
