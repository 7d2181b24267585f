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

#ifndef YBX_PROTOCOL_HPP
#define YBX_PROTOCOL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ybx/braid.hpp"
#include "ybx/qstate.hpp"

namespace ybx {

enum class SweepMode { fig2, fig3a, fig3b, custom };
enum class NoiseModel { ideal, t2 };

/// Parameter scan and noise settings for the interferometric circuit.
/// Grids include both endpoints 0 and 2pi.
///   fig2:  theta1 = -theta3, theta2 = 0, theta3 in [0, 2pi]
///   fig3a: theta2 = theta3 = 0, theta1 in [0, 2pi]
///   fig3b: theta1 = 2*theta2, theta3 = pi/2, theta1 in [0, 2pi]
struct SweepSpec {
  SweepMode mode = SweepMode::fig2;
  int points = 64;
  NoiseModel noise = NoiseModel::ideal;
  double epsilon = 1e-5;
  std::vector<SpectralAngles> custom;

  // t2-model event durations (stated model constants, scaled by
  // duration_scale) and per-qubit dephasing times.
  double rotation_duration_s = 10e-6;
  double fredkin_duration_s = 3e-3;
  double duration_scale = 1.0;
  std::vector<double> t2_s = {0.08, 0.09, 0.08};

  void validate() const;
};

struct ProtocolResult {
  SpectralAngles angles;
  double overlap_direct = 0.0;        // |<phi1|phi3>|^2 from 2x2 states
  cxd magnetization{0.0, 0.0};        // raw complex readout on qubit 2
  double normalized_magnetization = 0.0;
  double theory = 0.0;                // closed-form curve for the mode
};

/// Output states of the two interferometer arms:
/// phi1 = A(t1)B(t2)A(t3)|+>, phi3 = B(t3)A(t2)B(t1)|+>.
std::pair<PureState, PureState> phi_states(const SpectralAngles& angles);

/// Controlled-SWAP permutation on n qubits (1-based indices).
ComplexMatrix fredkin(int control, std::pair<int, int> targets, int n);

/// Closed-form predicted overlap for a sweep mode at the given angles.
double theory_overlap(SweepMode mode, const SpectralAngles& angles);

/// Readout of the reference circuit (angles all zero, ideal), used to
/// normalize magnetizations.
cxd reference_magnetization(const SweepSpec& spec);

/// Full circuit: PPS -> Ry(pi/2) on 1,3 -> LHS on 1 / RHS on 3 -> Ry(pi/2)
/// on 2 -> controlled-SWAP(2; 1,3) -> complex magnetization of qubit 2.
ProtocolResult run_circuit(const SpectralAngles& angles, const SweepSpec& spec,
                           std::optional<cxd> reference = std::nullopt);

/// Same interferometer with caller-supplied single-qubit arm states instead
/// of the protocol rotations (swap-test identity hook).
ProtocolResult run_circuit_with_states(const PureState& phi1,
                                       const PureState& phi3,
                                       const SweepSpec& spec,
                                       std::optional<cxd> reference = std::nullopt);

std::vector<ProtocolResult> run_sweep(const SweepSpec& spec);

}  // namespace ybx

#endif  // YBX_PROTOCOL_HPP
