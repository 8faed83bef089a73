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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spindeph/mc.hpp"
#include "spindeph/types.hpp"

namespace spindeph {

/// Raised on malformed configuration input; the message names the file,
/// line and field.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full description of one simulated experiment.
struct RunConfig {
  TrapConfig trap;
  OdfSequence sequence;
  mc::DetectionConfig detection;
  mc::MotionalPrep prep;
  long shots = 1000;
  FinalPulsePhase delta_phi = FinalPulsePhase::Quadrature;
  double bin_width = 0.02;  ///< histogram bin width, bright-normalized units

  void validate() const;
};

/// Loads a run configuration. Files starting with '{' are parsed as JSON
/// (either a bare config object or a provenance envelope containing one,
/// so any emitted provenance file can be re-run directly); anything else is
/// parsed as the INI-style key=value format with human units:
///
///   [trap]       mass_amu charge_e omega_z_khz omega_c_mhz omega_r_khz gamma_mhz
///   [sequence]   kind {spin-echo|ramsey} f0_yn detuning_hz arm_us pi_us
///                phi_odf_deg phi0_deg
///   [detection]  n_ions photon_rate_per_ion_hz detection_ms
///                background_std_mrad seed
///   [prep]       one of: temperature_mk | nbar | inv_beta; coherent_drive
///   [run]        shots delta_phi {0|pi/2} bin_width
///
/// All values are converted to SI at parse time.
RunConfig load_run_config(const std::string& path);

/// Exact SI serialization; from_json(to_json(c)) reproduces c bit-for-bit.
nlohmann::json run_config_to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& j);

/// Versioned provenance envelope embedding the fully resolved config and
/// seed; every CLI output JSON carries one so results can be regenerated.
nlohmann::json provenance_envelope(const std::string& command,
                                   const RunConfig& config);

}  // namespace spindeph
