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

#include "ybx/protocol.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ybx/linalg.hpp"

namespace ybx {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix ry_half_pi() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, -s}, {s, s}};
}

struct CircuitStep {
  ComplexMatrix u;
  double duration_s;
};

DensityMatrix apply_step(DensityMatrix rho, const CircuitStep& step,
                         const SweepSpec& spec) {
  rho = apply_unitary(rho, step.u);
  if (spec.noise == NoiseModel::t2 && step.duration_s > 0.0) {
    const double t = step.duration_s * spec.duration_scale;
    for (int q = 1; q <= rho.qubits(); ++q) {
      rho = dephase(rho, q, t, spec.t2_s.at(q - 1));
    }
  }
  return rho;
}

// Interferometer tail shared by the protocol and the injected-state variant:
// ancilla rotation, controlled-SWAP, complex magnetization of qubit 2.
cxd interferometer_readout(DensityMatrix rho, const SweepSpec& spec) {
  rho = apply_step(rho, {embed(ry_half_pi(), {2}, 3), spec.rotation_duration_s},
                   spec);
  rho = apply_step(rho, {fredkin(2, {1, 3}, 3), spec.fredkin_duration_s}, spec);
  return xy_magnetization(rho, 2);
}

cxd circuit_magnetization(const SpectralAngles& angles, const SweepSpec& spec) {
  DensityMatrix rho = pps(PureState::computational(3, 0),
                          Polarization(spec.epsilon));
  const ComplexMatrix ry13 =
      embed(ry_half_pi(), {1}, 3) * embed(ry_half_pi(), {3}, 3);
  rho = apply_step(rho, {ry13, spec.rotation_duration_s}, spec);

  // LHS A(t1)B(t2)A(t3) on qubit 1 and RHS B(t3)A(t2)B(t1) on qubit 3, as
  // three parallel single-spin rotation events (rightmost factor first).
  const CircuitStep lhs_rhs[3] = {
      {embed(A_theta(angles.theta3), {1}, 3) *
           embed(B_theta(angles.theta1), {3}, 3),
       spec.rotation_duration_s},
      {embed(B_theta(angles.theta2), {1}, 3) *
           embed(A_theta(angles.theta2), {3}, 3),
       spec.rotation_duration_s},
      {embed(A_theta(angles.theta1), {1}, 3) *
           embed(B_theta(angles.theta3), {3}, 3),
       spec.rotation_duration_s},
  };
  for (const CircuitStep& step : lhs_rhs) rho = apply_step(rho, step, spec);
  return interferometer_readout(std::move(rho), spec);
}

SpectralAngles mode_angles(const SweepSpec& spec, int index) {
  const double t = 2.0 * kPi * static_cast<double>(index) /
                   static_cast<double>(spec.points - 1);
  switch (spec.mode) {
    case SweepMode::fig2:
      return {-t, 0.0, t};
    case SweepMode::fig3a:
      return {t, 0.0, 0.0};
    case SweepMode::fig3b:
      return {t, t / 2.0, kPi / 2.0};
    case SweepMode::custom:
      return spec.custom.at(index);
  }
  throw std::logic_error("mode_angles: unknown mode");
}

}  // namespace

void SweepSpec::validate() const {
  if (mode == SweepMode::custom) {
    if (custom.size() < 2) {
      throw std::invalid_argument("SweepSpec: custom mode needs >= 2 triples");
    }
  } else if (points < 2) {
    throw std::invalid_argument("SweepSpec: points must be >= 2");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("SweepSpec: epsilon outside [0, 1]");
  }
  if (t2_s.size() != 3) {
    throw std::invalid_argument("SweepSpec: need one T2 per qubit (3)");
  }
  for (double t2 : t2_s) {
    if (!(t2 > 0.0)) throw std::invalid_argument("SweepSpec: T2 must be > 0");
  }
}

std::pair<PureState, PureState> phi_states(const SpectralAngles& angles) {
  const PureState plus = PureState::plus();
  const PureState phi1 = plus.apply(A_theta(angles.theta3))
                             .apply(B_theta(angles.theta2))
                             .apply(A_theta(angles.theta1));
  const PureState phi3 = plus.apply(B_theta(angles.theta1))
                             .apply(A_theta(angles.theta2))
                             .apply(B_theta(angles.theta3));
  return {phi1, phi3};
}

ComplexMatrix fredkin(int control, std::pair<int, int> targets, int n) {
  const int a = targets.first;
  const int b = targets.second;
  if (control < 1 || control > n || a < 1 || a > n || b < 1 || b > n) {
    throw std::invalid_argument("fredkin: qubit index out of range");
  }
  if (control == a || control == b || a == b) {
    throw std::invalid_argument("fredkin: indices must be distinct");
  }
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t cbit = std::size_t{1} << (n - control);
  const std::size_t abit = std::size_t{1} << (n - a);
  const std::size_t bbit = std::size_t{1} << (n - b);
  ComplexMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t row = col;
    if (col & cbit) {
      const bool va = (col & abit) != 0;
      const bool vb = (col & bbit) != 0;
      if (va != vb) row = col ^ abit ^ bbit;
    }
    u(row, col) = cxd(1.0, 0.0);
  }
  return u;
}

double theory_overlap(SweepMode mode, const SpectralAngles& angles) {
  switch (mode) {
    case SweepMode::fig2:
      return 1.0;
    case SweepMode::fig3a: {
      const double c = std::cos(angles.theta1);
      return c * c;
    }
    case SweepMode::fig3b: {
      const double s = std::sin(1.5 * angles.theta1);
      return s * s;
    }
    case SweepMode::custom: {
      const auto [phi1, phi3] = phi_states(angles);
      return overlap(phi1, phi3);
    }
  }
  throw std::logic_error("theory_overlap: unknown mode");
}

cxd reference_magnetization(const SweepSpec& spec) {
  SweepSpec ideal = spec;
  ideal.noise = NoiseModel::ideal;
  return circuit_magnetization({0.0, 0.0, 0.0}, ideal);
}

ProtocolResult run_circuit(const SpectralAngles& angles, const SweepSpec& spec,
                           std::optional<cxd> reference) {
  spec.validate();
  const cxd ref = reference.value_or(reference_magnetization(spec));
  ProtocolResult out;
  out.angles = angles;
  const auto [phi1, phi3] = phi_states(angles);
  out.overlap_direct = overlap(phi1, phi3);
  out.magnetization = circuit_magnetization(angles, spec);
  out.normalized_magnetization = (out.magnetization / ref).real();
  out.theory = theory_overlap(spec.mode, angles);
  return out;
}

ProtocolResult run_circuit_with_states(const PureState& phi1,
                                       const PureState& phi3,
                                       const SweepSpec& spec,
                                       std::optional<cxd> reference) {
  if (phi1.qubits() != 1 || phi3.qubits() != 1) {
    throw std::invalid_argument(
        "run_circuit_with_states: arm states must be single-qubit");
  }
  const cxd ref = reference.value_or(reference_magnetization(spec));
  const PureState joint =
      phi1.tensor(PureState::computational(1, 0)).tensor(phi3);
  DensityMatrix rho = pps(joint, Polarization(spec.epsilon));
  ProtocolResult out;
  out.overlap_direct = overlap(phi1, phi3);
  out.magnetization = interferometer_readout(std::move(rho), spec);
  out.normalized_magnetization = (out.magnetization / ref).real();
  out.theory = out.overlap_direct;
  return out;
}

std::vector<ProtocolResult> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const cxd ref = reference_magnetization(spec);
  const int count = spec.mode == SweepMode::custom
                        ? static_cast<int>(spec.custom.size())
                        : spec.points;
  std::vector<ProtocolResult> results;
  results.reserve(count);
  for (int i = 0; i < count; ++i) {
    results.push_back(run_circuit(mode_angles(spec, i), spec, ref));
  }
  return results;
}

}  // namespace ybx
