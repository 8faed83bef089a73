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

#include <complex>

namespace spindeph {

/// Phase-space amplitude of the harmonic oscillator (dimensionless).
/// Sequential commuting displacements add.
using Complex = std::complex<double>;

/// Static trap and ion parameters. All frequencies are angular (rad/s).
struct TrapConfig {
  double ion_mass = 0.0;    ///< kg
  double ion_charge = 0.0;  ///< C
  double omega_z = 0.0;     ///< axial trap frequency, rad/s
  double omega_c = 0.0;     ///< cyclotron frequency, rad/s
  double omega_r = 0.0;     ///< crystal rotation frequency, rad/s
  double gamma = 0.0;       ///< cooling-transition linewidth, rad/s

  /// Throws std::domain_error unless mass, charge, omega_z, omega_c and
  /// gamma are positive, omega_r is non-negative and omega_r < omega_c.
  void validate() const;
};

enum class SequenceKind {
  RamseySingleArm,  ///< single free-evolution period of duration tau
  SpinEchoTwoArm,   ///< two tau arms separated by a pi pulse
};

/// Spin-dependent-force pulse-sequence parameters.
struct OdfSequence {
  double f0 = 0.0;              ///< force magnitude F0, N
  double detuning_delta = 0.0;  ///< delta = mu - omega_z, rad/s
  double arm_duration_tau = 0.0;  ///< duration of each drive arm, s
  double pi_pulse_time = 0.0;     ///< t_pi, s
  double phi_odf = 0.0;  ///< drive phase advance in the second arm, rad, [0, 2pi)
  double phi0 = 0.0;     ///< drive phase at the start of the first arm, rad
  SequenceKind kind = SequenceKind::SpinEchoTwoArm;

  void validate() const;
};

/// Thermal occupation of a single harmonic mode. The canonical parameter is
/// beta = hbar*omega_z/(k_B T); nbar and temperature are exact functions of
/// it. Coherent-state formulas use inv_beta, Fock-state formulas use nbar;
/// the two agree to O(1) only through the exact Bose relation kept here.
class ThermalState {
 public:
  static ThermalState from_beta(double beta);
  static ThermalState from_inv_beta(double inv_beta);
  /// beta = ln(1 + 1/nbar), the exact inverse of nbar = 1/(e^beta - 1).
  static ThermalState from_nbar(double nbar);
  static ThermalState from_temperature(double kelvin, const TrapConfig& trap);

  double beta() const { return beta_; }
  double inv_beta() const { return 1.0 / beta_; }
  /// nbar = 1/(e^beta - 1), evaluated with expm1 for small beta.
  double nbar() const;
  /// T = hbar*omega_z/(k_B*beta).
  double temperature(const TrapConfig& trap) const;

 private:
  explicit ThermalState(double beta);
  double beta_;
};

/// Phase of the final pi/2 pulse relative to the first.
enum class FinalPulsePhase {
  InPhase,     ///< delta_phi = 0: measures Bloch vector length
  Quadrature,  ///< delta_phi = pi/2: rotates xy-plane dephasing onto z
};

}  // namespace spindeph
