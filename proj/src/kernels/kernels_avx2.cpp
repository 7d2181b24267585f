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

// AVX2/FMA variants of the complex kernels. One __m256d holds two interleaved
// complex doubles [re0, im0, re1, im1]. Complex multiply-accumulate uses the
// swap/fmaddsub pattern:
//   (ar + i*ai) * (br + i*bi) = (ar*br - ai*bi) + i*(ar*bi + ai*br)
//   t   = ai * [bi, br]              (pairwise-swapped b)
//   out = fmaddsub(ar, [br, bi], t)  = [ar*br - ai*bi, ar*bi + ai*br]

#include "ybx/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace ybx::kernels::detail {

namespace {

inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
  const __m256d bswap = _mm256_permute_pd(b, 0x5);
  const __m256d t = _mm256_mul_pd(ai, bswap);
  return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, t));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void matmul_avx2(std::size_t m, std::size_t k, std::size_t n,
                 const cxd* a, const cxd* b, cxd* c) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cxd(0.0, 0.0);
  const std::size_t n2 = n & ~std::size_t(1);
  for (std::size_t i = 0; i < m; ++i) {
    const cxd* arow = a + i * k;
    double* crow = cd + 2 * i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const __m256d ar = _mm256_set1_pd(arow[p].real());
      const __m256d ai = _mm256_set1_pd(arow[p].imag());
      const double* brow = bd + 2 * p * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, cmul_acc(cv, ar, ai, bv));
      }
      if (j < n) {
        const cxd aip = arow[p];
        c[i * n + j] += aip * b[p * n + j];
      }
    }
  }
}

void axpy_avx2(std::size_t n, cxd alpha, const cxd* x, cxd* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  const std::size_t n2 = n & ~std::size_t(1);
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, cmul_acc(yv, ar, ai, xv));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(std::size_t n, cxd alpha, cxd* x) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  double* xd = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  const std::size_t n2 = n & ~std::size_t(1);
  for (; i < n2; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d sw = _mm256_permute_pd(xv, 0x5);
    const __m256d t = _mm256_mul_pd(ai, sw);
    _mm256_storeu_pd(xd + 2 * i, _mm256_fmaddsub_pd(ar, xv, t));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

double norm_sq_avx2(std::size_t n, const cxd* a) {
  const double* ad = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const std::size_t n2 = n & ~std::size_t(1);
  for (; i < n2; i += 2) {
    const __m256d v = _mm256_loadu_pd(ad + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return s;
}

double dist_sq_avx2(std::size_t n, const cxd* a, const cxd* b) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  const std::size_t n2 = n & ~std::size_t(1);
  for (; i < n2; i += 2) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(ad + 2 * i), _mm256_loadu_pd(bd + 2 * i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    s += dr * dr + di * di;
  }
  return s;
}

}  // namespace ybx::kernels::detail

#else
#error "kernels_avx2.cpp must be compiled with -mavx2 -mfma"
#endif
