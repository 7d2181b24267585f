// Copyright 2026 The ybxsim Authors
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

#ifndef YBX_NMR_HPP
#define YBX_NMR_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ybx/qstate.hpp"

namespace ybx {

/// Spin system parameters. Config stores Hz; the Hamiltonian is built in
/// rad/s with hbar = 1. In the rotating frame chemical shifts are zeroed
/// (on-resonance, frame-selective pulses); "lab" keeps them.
struct MoleculeConfig {
  enum class Frame { rotating, lab };

  int n = 0;
  std::vector<double> shifts_hz;
  std::vector<std::vector<double>> j_hz;  // symmetric, zero diagonal
  std::vector<double> t2_s;
  Frame frame = Frame::rotating;
  std::string description;

  void validate() const;
  double effective_shift_hz(int spin) const;  // 1-based

  static MoleculeConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
  static MoleculeConfig load(const std::string& path);
  void save(const std::string& path) const;
};

/// One event of a line-oriented pulse program. Angles are stored in degrees
/// exactly as parsed so that parse -> serialize -> parse round-trips
/// identically.
struct PulseEvent {
  enum class Kind { rotation, delay, gradient, shaped };

  Kind kind = Kind::gradient;
  std::vector<int> qubits;    // rotation targets (1-based)
  double angle_deg = 0.0;     // rotation angle
  double phase_deg = 0.0;     // rotation phase (0 = x, 90 = y)
  double duration_s = 0.0;    // rotation dur= / delay t=
  bool has_pair = false;      // delay: evolve only the named coupling pair
  int pair_i = 0, pair_j = 0;
  std::string shaped_file;    // shaped: control-grid JSON path
  int line = 0;               // 1-based source line, 0 if built in code

  bool operator==(const PulseEvent&) const = default;
};

/// Ordered pulse program in the text format
///   rot q=<i[,j,...]> angle=<deg> phase=<deg> dur=<s>
///   delay t=<s> [pair=<i,j>]
///   grad
///   shaped file=<path>
/// '#' starts a comment line.
struct PulseSequence {
  std::vector<PulseEvent> events;

  static PulseSequence parse_text(const std::string& text);
  static PulseSequence load(const std::string& path);
  std::string serialize() const;
  void save(const std::string& path) const;

  int gradient_count() const;
  /// Throws with "line N: ..." messages on qubit/pair indices invalid for m.
  void validate_against(const MoleculeConfig& m) const;

  bool operator==(const PulseSequence&) const = default;
};

/// H/hbar = sum_j 2 pi nu_j Iz_j + sum_{j<k} 2 pi J_jk Iz_j Iz_k, in rad/s,
/// diagonal in the computational basis.
ComplexMatrix hamiltonian(const MoleculeConfig& m);

/// rho -> exp(-iHt) rho exp(iHt); with noise, dephases every spin by its T2
/// over t.
DensityMatrix evolve_free(const DensityMatrix& rho, double t,
                          const MoleculeConfig& m, bool noise);

/// Pulsed-field-gradient crusher: zeroes every off-diagonal element.
DensityMatrix apply_gradient(const DensityMatrix& rho);

/// Left-fold of the sequence events over rho0. Delays with a named pair
/// evolve only that J coupling (refocused model); rotations are exact
/// hard-pulse unitaries; shaped events run a control grid through the pulse
/// propagator. With noise, every event of nonzero duration dephases all
/// spins.
DensityMatrix run_sequence(const DensityMatrix& rho0, const PulseSequence& seq,
                           const MoleculeConfig& m, bool noise);

/// Pseudo-pure-state preparation for a 3-spin system built from controlled
/// polarization transfers: per-spin split pulses, J-delays and two gradient
/// crushers. phi1/phi2 are the anchored angles in radians; the overload uses
/// the defaults 98.2 deg and 135.59 deg.
PulseSequence prepare_pps_sequence(const MoleculeConfig& m, double phi1_rad,
                                   double phi2_rad);
PulseSequence prepare_pps_sequence(const MoleculeConfig& m);

/// Thermal-equilibrium-like diagonal state I/2^n + (eps/4) sum_j Iz_j
/// (homonuclear: equal polarization on every spin).
DensityMatrix thermal_like_state(const MoleculeConfig& m, Polarization eps);

/// Direction cosine between the traceless parts of rho and pps(|0...0>, eps),
/// in [-1, 1]. Errors when rho has (numerically) no traceless part.
double pps_fidelity(const DensityMatrix& rho, Polarization eps);

}  // namespace ybx

#endif  // YBX_NMR_HPP
