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

#include "ybx/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ybx/kernels.hpp"

namespace ybx {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cxd(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cxd>> rows) {
  rows_ = rows.size();
  if (rows_ == 0) throw std::invalid_argument("ComplexMatrix: empty init list");
  cols_ = rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("ComplexMatrix: ragged init list");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = cxd(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cxd>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matmul: inner dimensions disagree (" +
                                std::to_string(cols_) + " vs " +
                                std::to_string(rhs.rows_) + ")");
  }
  ComplexMatrix out(rows_, rhs.cols_);
  kernels::matmul(rows_, cols_, rhs.cols_, data(), rhs.data(), out.data());
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  ComplexMatrix out = *this;
  out += rhs;
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  ComplexMatrix out = *this;
  out -= rhs;
  return out;
}

ComplexMatrix ComplexMatrix::operator*(cxd s) const {
  ComplexMatrix out = *this;
  out *= s;
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("add: dimension mismatch");
  }
  kernels::axpy(data_.size(), cxd(1.0, 0.0), rhs.data(), data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("sub: dimension mismatch");
  }
  kernels::axpy(data_.size(), cxd(-1.0, 0.0), rhs.data(), data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cxd s) {
  kernels::scal(data_.size(), s, data());
  return *this;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

cxd ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix not square");
  cxd t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::norm_sq(data_.size(), data()));
}

double ComplexMatrix::frobenius_distance(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("frobenius_distance: dimension mismatch");
  }
  return std::sqrt(kernels::dist_sq(data_.size(), data(), rhs.data()));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cxd& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const cxd& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double ComplexMatrix::hermitian_asymmetry() const {
  if (!is_square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  return is_square() && hermitian_asymmetry() <= tol;
}

double ComplexMatrix::unitarity_defect() const {
  if (!is_square()) return std::numeric_limits<double>::infinity();
  return (dagger() * (*this)).frobenius_distance(identity(rows_));
}

bool ComplexMatrix::is_unitary(double tol) const {
  return is_square() && unitarity_defect() <= tol;
}

}  // namespace ybx
