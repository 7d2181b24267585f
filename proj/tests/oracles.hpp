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

// Test-only oracles, independent of the implementation paths they check.

#ifndef YBXSIM_TESTS_ORACLES_HPP
#define YBXSIM_TESTS_ORACLES_HPP

#include <cmath>
#include <random>

#include "ybx/complex_matrix.hpp"

namespace oracles {

using ybx::ComplexMatrix;
using ybx::cxd;

// Deterministic uniform in [0, 1) from raw mt19937_64 bits.
inline double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r,
                                   std::size_t c, double scale = 1.0) {
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = cxd(uniform(rng, -scale, scale), uniform(rng, -scale, scale));
    }
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n,
                                      double scale = 1.0) {
  ComplexMatrix m = random_matrix(rng, n, n, scale);
  return (m + m.dagger()) * cxd(0.5, 0.0);
}

// Matrix exponential by scaling-and-squaring of the Taylor series; the
// independent check for the eigendecomposition route.
inline ComplexMatrix expm_series(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  double norm = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < n; ++c) row += std::abs(m(r, c));
    norm = std::max(norm, row);
  }
  int s = 0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++s;
  }
  ComplexMatrix t = m * cxd(std::ldexp(1.0, -s), 0.0);
  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 40; ++k) {
    term = term * t * cxd(1.0 / k, 0.0);
    sum += term;
    if (term.frobenius_norm() < 1e-20) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

// exp(-i h t) via the series route.
inline ComplexMatrix expm_minus_i_ht(const ComplexMatrix& h, double t) {
  return expm_series(h * cxd(0.0, -t));
}

// Haar-ish random unitary: exp(-i H) for random Hermitian H. Exactly unitary
// up to roundoff, which is all the negative controls need.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t n) {
  return expm_minus_i_ht(random_hermitian(rng, n, 2.0), 1.0);
}

inline std::vector<cxd> random_state_amplitudes(std::mt19937_64& rng,
                                                std::size_t dim) {
  std::vector<cxd> a(dim);
  double norm2 = 0.0;
  for (cxd& v : a) {
    v = cxd(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    norm2 += std::norm(v);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cxd& v : a) v *= inv;
  return a;
}

}  // namespace oracles

#endif  // YBXSIM_TESTS_ORACLES_HPP
