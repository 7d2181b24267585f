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

#ifndef YBX_GRAPE_HPP
#define YBX_GRAPE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ybx/nmr.hpp"

namespace ybx {

/// Piecewise-constant RF controls: per segment, per spin, x and y quadrature
/// amplitudes in rad/s.
struct ControlGrid {
  int n_spins = 0;
  int segments = 0;
  double dt_s = 0.0;
  std::vector<double> amplitudes;  // [segment][spin][quadrature], flattened

  double& amp(int seg, int spin, int quad) {
    return amplitudes[(static_cast<std::size_t>(seg) * n_spins + spin) * 2 +
                      quad];
  }
  double amp(int seg, int spin, int quad) const {
    return amplitudes[(static_cast<std::size_t>(seg) * n_spins + spin) * 2 +
                      quad];
  }

  void validate() const;
  double total_duration_s() const { return segments * dt_s; }

  static ControlGrid from_json_text(const std::string& text);
  std::string to_json_text() const;
  static ControlGrid load(const std::string& path);
  void save(const std::string& path) const;
};

struct EnsembleMember {
  double rf_scale = 1.0;
  double shift_offset_hz = 0.0;
  double weight = 1.0;
};

/// RF-miscalibration / off-resonance ensemble the optimizer averages over.
struct RobustnessEnsemble {
  std::vector<EnsembleMember> members;

  static RobustnessEnsemble trivial();
  /// rf scales {0.95, 1.0, 1.05} x shift offsets {-5, 0, +5} Hz, uniform
  /// weights.
  static RobustnessEnsemble default_robust();

  void validate() const;
};

/// Time-ordered product of segment exponentials for one ensemble member:
/// U = prod_k exp(-i (H_drift + member-offset + rf_scale * controls_k) dt).
ComplexMatrix propagator(const ControlGrid& c, const MoleculeConfig& m,
                         const EnsembleMember& member);

/// |Tr(target^dag u)|^2 / dim^2, global-phase invariant, in [0, 1].
double fidelity(const ComplexMatrix& u, const ComplexMatrix& target);

/// Ensemble-weighted exact gradient of the fidelity with respect to every
/// control amplitude (eigendecomposition of each segment generator).
std::vector<double> gradient(const ControlGrid& c, const ComplexMatrix& target,
                             const MoleculeConfig& m,
                             const RobustnessEnsemble& ens);

struct OptimizerConfig {
  int segments = 50;
  double dt_s = 10e-6;
  int max_iters = 2000;
  double threshold = 0.9999;      // ensemble-average fidelity target
  std::uint64_t seed = 1;
  double amplitude_cap = 2.0 * 3.14159265358979323846 * 20e3;  // rad/s
  double gradient_tol = 1e-12;
};

struct OptimizeReport {
  bool converged = false;
  int iterations = 0;
  double ensemble_fidelity = 0.0;
  std::vector<double> member_fidelities;
  std::vector<double> fidelity_trace;  // per accepted iterate

  std::string to_json_text() const;
};

/// Gradient ascent with backtracking line search; monotone in the ensemble
/// average, deterministic for a given seed. Initial amplitudes are random at
/// 1% of the cap; the cap is enforced by projection after each step.
std::pair<ControlGrid, OptimizeReport> optimize(const ComplexMatrix& target,
                                                const MoleculeConfig& m,
                                                const RobustnessEnsemble& ens,
                                                const OptimizerConfig& cfg);

}  // namespace ybx

#endif  // YBX_GRAPE_HPP
