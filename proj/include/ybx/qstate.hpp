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

#ifndef YBX_QSTATE_HPP
#define YBX_QSTATE_HPP

#include <vector>

#include "ybx/complex_matrix.hpp"

namespace ybx {

/// Normalized pure state of n qubits; qubit 1 is the most significant bit of
/// the amplitude index.
class PureState {
 public:
  PureState(int n, std::vector<cxd> amplitudes);
  static PureState computational(int n, std::size_t basis_index);
  static PureState plus();  // single-qubit |+>

  int qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<cxd>& amplitudes() const { return amp_; }
  cxd amplitude(std::size_t i) const { return amp_[i]; }

  PureState apply(const ComplexMatrix& u) const;
  PureState tensor(const PureState& rhs) const;

 private:
  int n_;
  std::vector<cxd> amp_;
};

/// Thermal polarization, dimensionless in [0, 1].
struct Polarization {
  double epsilon = 1e-5;
  explicit Polarization(double e);
};

class DensityMatrix {
 public:
  DensityMatrix(int n, ComplexMatrix m);
  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n);

  int qubits() const { return n_; }
  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  ComplexMatrix& matrix() { return m_; }

  /// Full physicality check: Hermitian within 1e-10, unit trace within 1e-10,
  /// smallest eigenvalue >= -1e-9. Throws on violation.
  void validate_physical() const;

 private:
  int n_;
  ComplexMatrix m_;
};

/// Pseudo-pure state (1-eps)/N * I + eps |psi><psi|.
DensityMatrix pps(const PureState& psi, Polarization eps);

/// U rho U^dag; u must be unitary within 1e-10.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// Tr(rho (sigma_x + i sigma_y) on qubit q), the complex transverse
/// magnetization of one spin. q is 1-based.
cxd xy_magnetization(const DensityMatrix& rho, int q);

/// Phase damping of qubit q: off-diagonals in q's basis shrink by
/// exp(-t/t2); populations untouched.
DensityMatrix dephase(const DensityMatrix& rho, int q, double t, double t2);

/// |<a|b>|^2
double overlap(const PureState& a, const PureState& b);

}  // namespace ybx

#endif  // YBX_QSTATE_HPP
