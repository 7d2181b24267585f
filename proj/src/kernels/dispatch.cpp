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

#include <cstdlib>
#include <cstring>

namespace ybx::kernels {

namespace detail {

bool avx2_available() {
#if YBXSIM_HAVE_AVX2_TU && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#if !YBXSIM_HAVE_AVX2_TU
// Stubs keep the dispatch table well-formed when the AVX2 TU is not built
// (non-x86 hosts). avx2_available() is false there, so they are never called.
void matmul_avx2(std::size_t m, std::size_t k, std::size_t n,
                 const cxd* a, const cxd* b, cxd* c) {
  matmul_scalar(m, k, n, a, b, c);
}
void axpy_avx2(std::size_t n, cxd alpha, const cxd* x, cxd* y) {
  axpy_scalar(n, alpha, x, y);
}
void scal_avx2(std::size_t n, cxd alpha, cxd* x) { scal_scalar(n, alpha, x); }
double norm_sq_avx2(std::size_t n, const cxd* a) { return norm_sq_scalar(n, a); }
double dist_sq_avx2(std::size_t n, const cxd* a, const cxd* b) {
  return dist_sq_scalar(n, a, b);
}
#endif

}  // namespace detail

namespace {

Backend select_backend() {
  const char* env = std::getenv("YBXSIM_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && detail::avx2_available()) {
      return Backend::avx2;
    }
    if (std::strcmp(env, "avx2") == 0) return Backend::scalar;
  }
  return detail::avx2_available() ? Backend::avx2 : Backend::scalar;
}

}  // namespace

Backend active() {
  static const Backend b = select_backend();
  return b;
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

void matmul(std::size_t m, std::size_t k, std::size_t n,
            const cxd* a, const cxd* b, cxd* c) {
  if (active() == Backend::avx2) {
    detail::matmul_avx2(m, k, n, a, b, c);
  } else {
    detail::matmul_scalar(m, k, n, a, b, c);
  }
}

void axpy(std::size_t n, cxd alpha, const cxd* x, cxd* y) {
  if (active() == Backend::avx2) {
    detail::axpy_avx2(n, alpha, x, y);
  } else {
    detail::axpy_scalar(n, alpha, x, y);
  }
}

void scal(std::size_t n, cxd alpha, cxd* x) {
  if (active() == Backend::avx2) {
    detail::scal_avx2(n, alpha, x);
  } else {
    detail::scal_scalar(n, alpha, x);
  }
}

double norm_sq(std::size_t n, const cxd* a) {
  return active() == Backend::avx2 ? detail::norm_sq_avx2(n, a)
                                   : detail::norm_sq_scalar(n, a);
}

double dist_sq(std::size_t n, const cxd* a, const cxd* b) {
  return active() == Backend::avx2 ? detail::dist_sq_avx2(n, a, b)
                                   : detail::dist_sq_scalar(n, a, b);
}

}  // namespace ybx::kernels
