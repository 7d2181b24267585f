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

#include "ybx/qstate.hpp"

#include <cmath>
#include <string>

#include "ybx/linalg.hpp"

namespace ybx {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || static_cast<std::size_t>(n) > max_qubits()) {
    throw std::invalid_argument("qubit count " + std::to_string(n) +
                                " outside 1.." + std::to_string(max_qubits()));
  }
}

}  // namespace

PureState::PureState(int n, std::vector<cxd> amplitudes)
    : n_(n), amp_(std::move(amplitudes)) {
  check_qubit_count(n);
  if (amp_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("PureState: amplitude count != 2^n");
  }
  double norm2 = 0.0;
  for (const cxd& a : amp_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("PureState: non-finite amplitude");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument("PureState: norm^2 deviates from 1 by " +
                                std::to_string(std::abs(norm2 - 1.0)));
  }
}

PureState PureState::computational(int n, std::size_t basis_index) {
  check_qubit_count(n);
  std::vector<cxd> amp(std::size_t{1} << n, cxd(0.0, 0.0));
  amp.at(basis_index) = cxd(1.0, 0.0);
  return PureState(n, std::move(amp));
}

PureState PureState::plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState(1, {cxd(s, 0.0), cxd(s, 0.0)});
}

PureState PureState::apply(const ComplexMatrix& u) const {
  if (u.rows() != dim() || u.cols() != dim()) {
    throw std::invalid_argument("PureState::apply: dimension mismatch");
  }
  std::vector<cxd> out(dim(), cxd(0.0, 0.0));
  for (std::size_t r = 0; r < dim(); ++r) {
    cxd s(0.0, 0.0);
    for (std::size_t c = 0; c < dim(); ++c) s += u(r, c) * amp_[c];
    out[r] = s;
  }
  return PureState(n_, std::move(out));
}

PureState PureState::tensor(const PureState& rhs) const {
  std::vector<cxd> out;
  out.reserve(dim() * rhs.dim());
  for (const cxd& a : amp_) {
    for (const cxd& b : rhs.amp_) out.push_back(a * b);
  }
  return PureState(n_ + rhs.n_, std::move(out));
}

Polarization::Polarization(double e) : epsilon(e) {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw std::invalid_argument("Polarization: epsilon outside [0, 1]");
  }
}

DensityMatrix::DensityMatrix(int n, ComplexMatrix m) : n_(n), m_(std::move(m)) {
  check_qubit_count(n);
  const std::size_t d = std::size_t{1} << n;
  if (m_.rows() != d || m_.cols() != d) {
    throw std::invalid_argument("DensityMatrix: matrix is not 2^n x 2^n");
  }
  if (!m_.all_finite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  if (m_.hermitian_asymmetry() > 1e-10) {
    throw std::invalid_argument("DensityMatrix: not Hermitian, asymmetry " +
                                std::to_string(m_.hermitian_asymmetry()));
  }
  if (std::abs(m_.trace() - cxd(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1");
  }
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = psi.amplitude(r) * std::conj(psi.amplitude(c));
    }
  }
  return DensityMatrix(psi.qubits(), std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = cxd(1.0 / d, 0.0);
  return DensityMatrix(n, std::move(m));
}

void DensityMatrix::validate_physical() const {
  const Eigensystem es = hermitian_eigensystem(m_);
  if (es.values.front() < -1e-9) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(es.values.front()));
  }
}

DensityMatrix pps(const PureState& psi, Polarization eps) {
  const std::size_t d = psi.dim();
  ComplexMatrix m(d, d);
  const double mixed = (1.0 - eps.epsilon) / static_cast<double>(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = eps.epsilon * psi.amplitude(r) * std::conj(psi.amplitude(c));
    }
    m(r, r) += mixed;
  }
  return DensityMatrix(psi.qubits(), std::move(m));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  }
  const double defect = u.unitarity_defect();
  if (defect > 1e-10) {
    throw std::invalid_argument("apply_unitary: matrix not unitary, defect " +
                                std::to_string(defect));
  }
  ComplexMatrix out = u * rho.matrix() * u.dagger();
  // Round off Hermiticity drift from the two products.
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = r; c < out.cols(); ++c) {
      const cxd sym = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = sym;
      out(c, r) = std::conj(sym);
    }
  }
  return DensityMatrix(rho.qubits(), std::move(out));
}

cxd xy_magnetization(const DensityMatrix& rho, int q) {
  if (q < 1 || q > rho.qubits()) {
    throw std::invalid_argument("xy_magnetization: qubit index out of range");
  }
  // Tr(rho (sx + i sy)) = 2 * sum over pairs rho[c | bit, c] with bit(q) = 0
  // in column c. Qubit 1 is the MSB.
  const std::size_t bit = std::size_t{1} << (rho.qubits() - q);
  cxd s(0.0, 0.0);
  for (std::size_t c = 0; c < rho.dim(); ++c) {
    if (c & bit) continue;
    s += rho.matrix()(c | bit, c);
  }
  return 2.0 * s;
}

DensityMatrix dephase(const DensityMatrix& rho, int q, double t, double t2) {
  if (q < 1 || q > rho.qubits()) {
    throw std::invalid_argument("dephase: qubit index out of range");
  }
  if (t < 0.0) throw std::invalid_argument("dephase: negative time");
  if (!(t2 > 0.0)) throw std::invalid_argument("dephase: t2 must be positive");
  const double f = std::exp(-t / t2);
  const std::size_t bit = std::size_t{1} << (rho.qubits() - q);
  ComplexMatrix m = rho.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (((r ^ c) & bit) != 0) m(r, c) *= f;
    }
  }
  return DensityMatrix(rho.qubits(), std::move(m));
}

double overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  cxd ip(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    ip += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return std::norm(ip);
}

}  // namespace ybx
