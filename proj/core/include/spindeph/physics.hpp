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

#include "spindeph/types.hpp"

namespace spindeph {

/// Thrown when a measured dephasing variance is at or past the point where
/// the mean-occupation inversion diverges (sigma^2 >= 1/2).
class saturation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground-state wavefunction size z0 = sqrt(hbar / (2 M omega_z)) of a
/// single trapped ion, in meters.
double ground_state_size(const TrapConfig& trap);

/// Dimensionless radial confinement parameter
/// beta_r = omega_r (Omega_c - omega_r) / omega_z^2 - 1/2.
/// A single-plane crystal requires beta_r << 1.
double trap_beta_r(const TrapConfig& trap);

/// Doppler cooling limit T = hbar*gamma / (2 k_B), in kelvin, for a cooling
/// transition of angular linewidth gamma (rad/s).
double doppler_limit(double gamma);

/// Spin-dependent displacement acquired during a single resonant
/// (delta = 0) drive arm:  alpha = -i F0 z0 tau / (2 hbar sqrt(N)) e^{i phi0}.
/// |alpha| is independent of the drive phase.
Complex resonant_displacement(const OdfSequence& seq, const TrapConfig& trap,
                              int n_ions);

/// Spin-dependent displacement after one detuned drive arm of duration tau,
///   alpha = F0 z0 / (2 hbar sqrt(N)) * (1 - e^{i delta tau})/delta * e^{i phi0},
/// with the removable singularity at delta = 0 evaluated by series for
/// |delta*tau| < 1e-8.
Complex single_arm_displacement(const OdfSequence& seq, const TrapConfig& trap,
                                int n_ions);

/// Net spin-dependent displacement after the full two-arm spin-echo drive,
///   alpha_SE = F0 z0 / (2 hbar sqrt(N)) * (1 - e^{i delta tau})/delta
///              * (e^{i phi0} - e^{i [phi0 + delta (tau + t_pi) + phi_odf]}).
/// The sign flip between arms reflects the intermediate pi pulse; the
/// accumulated drive-vs-oscillator phase delta*(tau + t_pi) enters the
/// second arm. phi_odf = 0 at delta = 0 cancels the excitation exactly;
/// phi_odf = pi makes the arms reinforce.
Complex spin_echo_displacement(const OdfSequence& seq, const TrapConfig& trap,
                               int n_ions);

/// Displacement for the configured sequence kind (single arm or spin echo).
Complex sequence_displacement(const OdfSequence& seq, const TrapConfig& trap,
                              int n_ions);

/// Coherent z rotation of the composite Bloch vector produced by the
/// spin-dependent displacement alpha acting on initial coherent state
/// alpha0:  theta_coh = 4 Im{conj(alpha) * alpha0}.
double coherent_rotation_angle(Complex alpha, Complex alpha0);

struct BlochExpectations {
  double sx;    ///< <S_x> before the final pi/2 pulse
  double sy;    ///< <S_y> before the final pi/2 pulse
  double sz;    ///< <S_z> after the final pi/2 pulse
  double p_up;  ///< single-spin probability of measuring up
};

/// Expectation values for N spins given the spin-dependent displacement and
/// the initial coherent state. The spin-motion entanglement contrast
/// e^{-2|alpha|^2} multiplies every oscillating term.
///   delta_phi = pi/2:  <S_z> = (N/2) sin(theta) e^{-2|alpha|^2}
///   delta_phi = 0:     <S_z> = -(N/2) cos(theta) e^{-2|alpha|^2}
BlochExpectations bloch_expectations(Complex alpha, Complex alpha0, int n_ions,
                                     FinalPulsePhase delta_phi);

/// Thermal second moment of the coherent rotation angle,
/// <theta_coh^2>_th = 8 |alpha|^2 / beta.
double thermal_theta_variance(Complex alpha, const ThermalState& state);

/// Thermally averaged spin-up probability for the delta_phi = 0 sequence,
/// P_up = (1 - e^{-2|alpha|^2 (2/beta + 1)}) / 2.  Lies in [0, 1/2).
double thermal_p_up(Complex alpha, const ThermalState& state);

/// Normalized motional-dephasing contribution to the spin second moment for
/// the delta_phi = pi/2 sequence,
///   sigma^2 = (1 - e^{-8|alpha|^2 (2/beta + 1)}) / 2,
/// where <<S_z^2>>_th = N/4 + N(N-1)/4 * sigma^2.  Lies in [0, 1/2).
double thermal_sigma_sq(Complex alpha, const ThermalState& state);

/// Inverts thermal_sigma_sq for the mean occupation:
///   nbar = ln[1/(1 - 2 sigma^2)] / (16 |alpha|^2) - 1/2.
/// Values below zero are returned as-is (callers flag them as below
/// resolution). Throws saturation_error for sigma_sq >= 1/2 and
/// std::domain_error for alpha_mag <= 0.
double nbar_from_sigma(double sigma_sq, double alpha_mag);

/// Laguerre polynomial L_n(x) by the stable upward three-term recurrence
/// with extended-precision accumulation. Requires n >= 0, x >= 0 and
/// n <= 10^4 (larger orders are outside the supported regime).
double laguerre(int n, double x);

/// Spin-up probability when the mode starts in Fock state |n>:
/// P_up^(n) = (1 - L_n(4|alpha|^2) e^{-2|alpha|^2}) / 2.
double fock_p_up(int n, Complex alpha);

/// Boltzmann-weighted thermal average of fock_p_up, in closed form:
/// P_up = (1 - e^{-2|alpha|^2 (2 nbar + 1)}) / 2.
double fock_thermal_p_up(double nbar, Complex alpha);

/// Brute-force route to fock_thermal_p_up: (1-e^-beta) sum_n P_up^(n) e^{-beta n},
/// truncated once the Boltzmann tail drops below 1e-14 (hard cap n = 10^6).
double fock_thermal_p_up_sum(double nbar, Complex alpha);

/// Two-spin correlator <sigma^z_1 sigma^z_2> for initial Fock state |n>:
/// (1 - L_n(16|alpha|^2) e^{-8|alpha|^2}) / 2.
double fock_two_spin_correlator(int n, Complex alpha);

/// Thermal average of the two-spin correlator:
/// (1 - e^{-8|alpha|^2 (2 nbar + 1)}) / 2.
double fock_thermal_two_spin_correlator(double nbar, Complex alpha);

/// Thermal average of the Laguerre polynomial itself,
/// (1 - e^{-beta}) sum_n L_n(x) e^{-beta n}, by truncated sum. Identity:
/// equals e^{-x nbar} with nbar = 1/(e^beta - 1).
double thermal_laguerre_sum(double x, double beta);

/// Classical precession angle Phi_P = (F0 Z_A cos(phase) / hbar) * tau for an
/// ion oscillating with amplitude Z_A under a resonant spin-dependent force.
double classical_precession(double f0, double z_amp, double phase, double tau);

}  // namespace spindeph
