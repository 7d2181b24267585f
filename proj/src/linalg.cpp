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

#include "ybx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

namespace ybx {

std::size_t max_qubits() {
  static const std::size_t q = [] {
    if (const char* env = std::getenv("YBXSIM_MAX_QUBITS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v <= 24) return static_cast<std::size_t>(v);
    }
    return std::size_t{12};
  }();
  return q;
}

std::size_t dimension_cap() { return std::size_t{1} << max_qubits(); }

ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }
ComplexMatrix pauli_y() { return {{0, cxd(0, -1)}, {cxd(0, 1), 0}}; }
ComplexMatrix pauli_z() { return {{1, 0}, {0, -1}}; }
ComplexMatrix spin_x() { return {{0, 0.5}, {0.5, 0}}; }
ComplexMatrix spin_y() { return {{0, cxd(0, -0.5)}, {cxd(0, 0.5), 0}}; }
ComplexMatrix spin_z() { return {{0.5, 0}, {0, -0.5}}; }
ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s}, {s, -s}};
}
ComplexMatrix swap_gate() {
  return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > dimension_cap() || cols > dimension_cap()) {
    throw std::invalid_argument(
        "kron: result dimension " + std::to_string(std::max(rows, cols)) +
        " exceeds cap " + std::to_string(dimension_cap()));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cxd aij = a(i, j);
      if (aij == cxd(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& sites,
                    int n) {
  const std::size_t k = sites.size();
  if (n < 1 || static_cast<std::size_t>(n) > max_qubits()) {
    throw std::invalid_argument("embed: qubit count " + std::to_string(n) +
                                " outside 1.." + std::to_string(max_qubits()));
  }
  const std::size_t opdim = std::size_t{1} << k;
  if (op.rows() != opdim || op.cols() != opdim) {
    throw std::invalid_argument("embed: operator is not 2^k x 2^k for k = " +
                                std::to_string(k));
  }
  std::set<int> seen;
  for (int s : sites) {
    if (s < 1 || s > n) {
      throw std::invalid_argument("embed: site " + std::to_string(s) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("embed: duplicate site " + std::to_string(s));
    }
  }

  // Qubit q occupies bit (n - q); sites[0] is the operator's most significant
  // qubit.
  const std::size_t dim = std::size_t{1} << n;
  std::vector<int> shift(k);
  for (std::size_t i = 0; i < k; ++i) shift[i] = n - sites[i];

  ComplexMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    std::size_t sub_r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      sub_r = (sub_r << 1) | ((r >> shift[i]) & 1u);
    }
    std::size_t base = r;
    for (std::size_t i = 0; i < k; ++i) base &= ~(std::size_t{1} << shift[i]);
    for (std::size_t sub_c = 0; sub_c < opdim; ++sub_c) {
      const cxd v = op(sub_r, sub_c);
      if (v == cxd(0.0, 0.0)) continue;
      std::size_t c = base;
      for (std::size_t i = 0; i < k; ++i) {
        c |= ((sub_c >> (k - 1 - i)) & 1u) << shift[i];
      }
      out(r, c) = v;
    }
  }
  return out;
}

PhaseMatch equal_up_to_global_phase(const ComplexMatrix& a,
                                    const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("equal_up_to_global_phase: dimension mismatch");
  }
  // Phase from the largest-modulus entry pair.
  std::size_t best = 0;
  double best_mod = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double m = std::min(std::abs(a.data()[i]), std::abs(b.data()[i]));
    if (m > best_mod) {
      best_mod = m;
      best = i;
    }
  }
  if (a.max_abs() <= tol) {
    throw std::invalid_argument(
        "equal_up_to_global_phase: zero matrix, phase undefined");
  }
  PhaseMatch r;
  if (best_mod == 0.0) return r;  // supports disagree entirely
  const cxd ratio = a.data()[best] / b.data()[best];
  r.phase = ratio / std::abs(ratio);
  r.equal = a.frobenius_distance(b * r.phase) <= tol;
  return r;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& h, double tol) {
  if (!h.is_square()) {
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  }
  const double asym = h.hermitian_asymmetry();
  if (asym > 1e-12 * std::max(1.0, h.max_abs())) {
    throw std::invalid_argument(
        "hermitian_eigensystem: input not Hermitian, max asymmetry " +
        std::to_string(asym));
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(h.max_abs(), 1e-300);
  const double off_tol = tol * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    }
    if (off <= off_tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cxd apq = a(p, q);
        const double beta = std::abs(apq);
        if (beta <= off_tol * 1e-3) continue;
        const cxd phase = apq / beta;  // e^{i phi}
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        // Zero the (p,q) element of the 2x2 Hermitian block: smaller root of
        // t^2 - 2 theta t - 1 = 0 with theta = (gamma - alpha) / (2 beta).
        double t;
        if (alpha == gamma) {
          t = 1.0;
        } else {
          const double theta = (gamma - alpha) / (2.0 * beta);
          t = -(theta >= 0.0 ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cxd sp = s * phase;             // s e^{i phi}
        const cxd spc = s * std::conj(phase); // s e^{-i phi}

        // A <- J^dag A J with J = I except J(p,p)=c, J(p,q)=-sp, J(q,p)=spc,
        // J(q,q)=c. Columns first, then rows.
        for (std::size_t r = 0; r < n; ++r) {
          const cxd arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp + spc * arq;
          a(r, q) = -sp * arp + c * arq;
        }
        for (std::size_t col = 0; col < n; ++col) {
          const cxd apc = a(p, col), aqc = a(q, col);
          a(p, col) = c * apc + sp * aqc;
          a(q, col) = -spc * apc + c * aqc;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const cxd vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp + spc * vrq;
          v(r, q) = -sp * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  Eigensystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double t) {
  if (!h.is_square()) {
    throw std::invalid_argument("unitary_from_hermitian: matrix not square");
  }
  const double asym = h.hermitian_asymmetry();
  if (asym > 1e-12 * std::max(1.0, h.max_abs())) {
    throw std::invalid_argument(
        "unitary_from_hermitian: input not Hermitian, max asymmetry " +
        std::to_string(asym));
  }
  const Eigensystem es = hermitian_eigensystem(h);
  const std::size_t n = h.rows();
  std::vector<cxd> ph(n);
  for (std::size_t k = 0; k < n; ++k) {
    ph[k] = std::exp(cxd(0.0, -es.values[k] * t));
  }
  // U = V diag(e^{-i lambda t}) V^dag
  ComplexMatrix scaled = es.vectors;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) scaled(r, k) *= ph[k];
  }
  return scaled * es.vectors.dagger();
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  const double scale = std::max(m.max_abs(), 1e-300);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    }
    if (std::abs(a(piv, col)) <= 1e-13 * scale) {
      throw std::invalid_argument("inverse: matrix is singular");
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const cxd d = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cxd f = a(r, col);
      if (f == cxd(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace ybx
