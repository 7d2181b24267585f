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

#ifndef YBX_KERNELS_HPP
#define YBX_KERNELS_HPP

#include <complex>
#include <cstddef>

// Dense complex arithmetic kernels. Scalar reference implementations are the
// ground truth; an AVX2 variant is selected at runtime when available and is
// equivalence-tested against the scalar path. The env var YBXSIM_SIMD
// (scalar|avx2|auto) overrides the automatic choice.
namespace ybx::kernels {

using cxd = std::complex<double>;

enum class Backend { scalar, avx2 };

Backend active();
const char* backend_name(Backend b);

// c = a * b, row-major; a is m x k, b is k x n, c is m x n. c must not alias
// a or b and is overwritten.
void matmul(std::size_t m, std::size_t k, std::size_t n,
            const cxd* a, const cxd* b, cxd* c);

// y += alpha * x
void axpy(std::size_t n, cxd alpha, const cxd* x, cxd* y);

// x *= alpha
void scal(std::size_t n, cxd alpha, cxd* x);

// sum_i |a_i|^2
double norm_sq(std::size_t n, const cxd* a);

// sum_i |a_i - b_i|^2
double dist_sq(std::size_t n, const cxd* a, const cxd* b);

namespace detail {

// Per-backend entry points, exposed so tests can compare them directly.
void matmul_scalar(std::size_t m, std::size_t k, std::size_t n,
                   const cxd* a, const cxd* b, cxd* c);
void axpy_scalar(std::size_t n, cxd alpha, const cxd* x, cxd* y);
void scal_scalar(std::size_t n, cxd alpha, cxd* x);
double norm_sq_scalar(std::size_t n, const cxd* a);
double dist_sq_scalar(std::size_t n, const cxd* a, const cxd* b);

bool avx2_available();
void matmul_avx2(std::size_t m, std::size_t k, std::size_t n,
                 const cxd* a, const cxd* b, cxd* c);
void axpy_avx2(std::size_t n, cxd alpha, const cxd* x, cxd* y);
void scal_avx2(std::size_t n, cxd alpha, cxd* x);
double norm_sq_avx2(std::size_t n, const cxd* a);
double dist_sq_avx2(std::size_t n, const cxd* a, const cxd* b);

}  // namespace detail

}  // namespace ybx::kernels

#endif  // YBX_KERNELS_HPP
