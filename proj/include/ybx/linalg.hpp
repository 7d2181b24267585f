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

#ifndef YBX_LINALG_HPP
#define YBX_LINALG_HPP

#include <vector>

#include "ybx/complex_matrix.hpp"

namespace ybx {

// Dimension cap for tensor-product construction. Defaults to 2^12; the env
// var YBXSIM_MAX_QUBITS overrides the exponent.
std::size_t max_qubits();
std::size_t dimension_cap();

// Pauli matrices and friends.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix spin_x();  // sigma_x / 2
ComplexMatrix spin_y();
ComplexMatrix spin_z();
ComplexMatrix hadamard();
ComplexMatrix swap_gate();

/// Kronecker product; rejects results above the configured dimension cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Embeds a 2^k x 2^k operator acting on the listed qubits (1-based, listed
/// order = operator's qubit order) into an n-qubit space, identity elsewhere.
/// Qubit 1 is the most significant bit of computational-basis indices.
ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& sites,
                    int n);

struct PhaseMatch {
  bool equal = false;
  cxd phase{1.0, 0.0};  // lambda with ||a - lambda*b||_F <= tol when equal
};

PhaseMatch equal_up_to_global_phase(const ComplexMatrix& a,
                                    const ComplexMatrix& b, double tol = 1e-10);

struct Eigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Cyclic complex Jacobi diagonalization; input must be Hermitian.
Eigensystem hermitian_eigensystem(const ComplexMatrix& h, double tol = 1e-12);

/// exp(-i h t) for Hermitian h, via eigendecomposition.
ComplexMatrix unitary_from_hermitian(const ComplexMatrix& h, double t);

/// Gauss-Jordan inverse with partial pivoting.
ComplexMatrix inverse(const ComplexMatrix& m);

}  // namespace ybx

#endif  // YBX_LINALG_HPP
