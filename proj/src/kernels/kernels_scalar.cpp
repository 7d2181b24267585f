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

#include "ybx/kernels.hpp"

namespace ybx::kernels::detail {

void matmul_scalar(std::size_t m, std::size_t k, std::size_t n,
                   const cxd* a, const cxd* b, cxd* c) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cxd(0.0, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const cxd* arow = a + i * k;
    cxd* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cxd aip = arow[p];
      if (aip == cxd(0.0, 0.0)) continue;
      const cxd* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aip * brow[j];
    }
  }
}

void axpy_scalar(std::size_t n, cxd alpha, const cxd* x, cxd* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_scalar(std::size_t n, cxd alpha, cxd* x) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double norm_sq_scalar(std::size_t n, const cxd* a) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return s;
}

double dist_sq_scalar(std::size_t n, const cxd* a, const cxd* b) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    s += dr * dr + di * di;
  }
  return s;
}

}  // namespace ybx::kernels::detail
