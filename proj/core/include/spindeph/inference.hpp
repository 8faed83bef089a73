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
#include <string>
#include <vector>

#include "spindeph/least_squares.hpp"
#include "spindeph/mc.hpp"
#include "spindeph/types.hpp"

namespace spindeph::infer {

enum class Method { VarianceDephasing, LineshapeFit, HeatingFit };

std::string method_name(Method m);

/// An inferred physical quantity with a 1-sigma standard error.
///
/// For thermometry estimates the value is the mean occupation in the
/// coherent-state model's sense: the mean of |alpha_0|^2 over the thermal
/// ensemble, i.e. 1/beta. Temperature follows linearly as
/// T = hbar*omega_z/(k_B) * value; the exact Bose nbar differs by ~1/2 and
/// is available through ThermalState::from_inv_beta(value).nbar().
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  Method method = Method::VarianceDephasing;
  long n_samples = 0;
  bool below_resolution = false;  ///< inferred occupation fell below zero
  bool saturated = false;         ///< dephasing variance at/past saturation
};

/// One point of a detuning sweep of the delta_phi = 0 sequence.
struct SweepPoint {
  double detuning_delta = 0.0;  ///< rad/s
  double p_up_mean = 0.0;
  double p_up_err = 0.0;
};

/// One point of a heating-rate measurement.
struct HeatingPoint {
  double delay = 0.0;  ///< s
  double nbar = 0.0;
  double nbar_err = 0.0;
};

enum class BackgroundMode {
  None,         ///< no background-dephasing correction
  Analytic,     ///< subtract det.background_dephasing_std^2
  Calibration,  ///< subtract the variance measured from phi_odf = 0 shots
};

struct NbarEstimatorOptions {
  BackgroundMode background = BackgroundMode::Analytic;
  /// phi_odf = 0 shots for BackgroundMode::Calibration.
  const std::vector<mc::ShotRecord>* calibration = nullptr;
  int bootstrap_resamples = 1000;
  std::uint64_t bootstrap_seed = 0x9e3779b97f4a7c15ULL;
};

/// Thermometry from the measured spin second moment (delta_phi = pi/2 data).
/// Per shot, S_z is formed from photon counts (or n_up when the photon path
/// is off); the second moment is corrected for Poisson photon noise, the
/// projection-noise term N/4 is subtracted and the rest normalized by
/// N(N-1)/4 to give sigma^2. Background dephasing is removed in the
/// log-contrast domain and the mean occupation follows from
/// nbar_from_sigma. Standard errors come from a nonparametric bootstrap.
Estimate estimate_nbar(const std::vector<mc::ShotRecord>& shots,
                       const mc::DetectionConfig& det, double alpha_mag,
                       const NbarEstimatorOptions& options = {});

struct LineshapeOptions {
  double init_inv_beta = 10.0;
  double init_offset = 0.0;
  bool fit_contrast = false;  ///< optional multiplicative contrast parameter
  double contrast = 1.0;      ///< fixed contrast when not fitted
  int max_iterations = 200;
};

struct LineshapeFit {
  Estimate inv_beta;       ///< fitted 1/beta (the paper-level "nbar")
  double temperature = 0;  ///< K, linear conversion of inv_beta
  double temperature_err = 0;
  double offset = 0;  ///< detuning-independent background level
  double offset_err = 0;
  double contrast = 1.0;
  double contrast_err = 0;
  double chi2 = 0;
};

/// Weighted least-squares fit of the Bloch-vector-length lineshape
///   P_up(delta) = offset + contrast * (1 - e^{-2|alpha_SE(delta)|^2 (2/beta+1)})/2
/// over a detuning sweep, with alpha_SE(delta) computed from the sequence
/// and trap. Throws fit_error when the fit does not converge or the data
/// cannot identify the temperature (e.g. zero force).
LineshapeFit fit_lineshape(const std::vector<SweepPoint>& points,
                           const TrapConfig& trap, const OdfSequence& seq,
                           int n_ions, const LineshapeOptions& options = {});

struct HeatingFit {
  Estimate rate;  ///< dnbar/dt, 1/s
  double intercept = 0.0;
  double intercept_err = 0.0;
  double chi2 = 0.0;
};

/// Weighted linear fit nbar(t) = nbar_0 + (dnbar/dt) t. Points with
/// non-positive errors get unit weight. Throws std::invalid_argument unless
/// two distinct delays are present.
HeatingFit fit_heating_rate(const std::vector<HeatingPoint>& points);

/// Exact Bose conversions, mutual inverses to machine precision.
double nbar_to_temperature(double nbar, const TrapConfig& trap);
double temperature_to_nbar(double kelvin, const TrapConfig& trap);

}  // namespace spindeph::infer
