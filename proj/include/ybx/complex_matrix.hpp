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

#ifndef YBX_COMPLEX_MATRIX_HPP
#define YBX_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

using cxd = std::complex<double>;

/// Dense complex matrix in row-major order. Value type; immutable sharing
/// between threads is safe.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<cxd>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cxd>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cxd& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cxd& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const cxd* data() const { return data_.data(); }
  cxd* data() { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(cxd s) const;
  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cxd s);

  ComplexMatrix dagger() const;
  ComplexMatrix transpose() const;
  cxd trace() const;

  double frobenius_norm() const;
  double frobenius_distance(const ComplexMatrix& rhs) const;
  double max_abs() const;

  bool all_finite() const;
  /// Largest |a_ij - conj(a_ji)| over all entries.
  double hermitian_asymmetry() const;
  bool is_hermitian(double tol = 1e-12) const;
  /// ||U^dag U - I||_F
  double unitarity_defect() const;
  bool is_unitary(double tol = 1e-10) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> data_;
};

inline ComplexMatrix operator*(cxd s, const ComplexMatrix& m) { return m * s; }

}  // namespace ybx

#endif  // YBX_COMPLEX_MATRIX_HPP
