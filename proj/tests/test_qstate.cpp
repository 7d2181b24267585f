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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ybx/linalg.hpp"
#include "ybx/qstate.hpp"

using namespace ybx;
using oracles::random_state_amplitudes;
using oracles::random_unitary;
using oracles::uniform;

TEST_CASE("pps pure and maximally mixed limits") {
  const PureState ooo = PureState::computational(3, 0);
  const DensityMatrix pure = pps(ooo, Polarization(1.0));
  CHECK(pure.matrix().frobenius_distance(
            DensityMatrix::pure(ooo).matrix()) < 1e-15);

  const DensityMatrix mixed = pps(ooo, Polarization(0.0));
  CHECK(mixed.matrix().frobenius_distance(
            DensityMatrix::maximally_mixed(3).matrix()) < 1e-15);
}

TEST_CASE("pps diagonal at thermal polarization") {
  const double eps = 1e-5;
  const DensityMatrix rho = pps(PureState::computational(3, 0),
                                Polarization(eps));
  CHECK(std::abs(rho.matrix()(0, 0).real() - (eps + (1.0 - eps) / 8.0)) <
        1e-16);
  for (std::size_t i = 1; i < 8; ++i) {
    CHECK(std::abs(rho.matrix()(i, i).real() - (1.0 - eps) / 8.0) < 1e-16);
  }
  CHECK(std::abs(rho.matrix().trace() - cxd(1.0, 0.0)) < 1e-15);
}

TEST_CASE("pps output is physical for random states and polarizations") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const PureState psi(n, random_state_amplitudes(rng, std::size_t{1} << n));
    const DensityMatrix rho = pps(psi, Polarization(uniform(rng, 0.0, 1.0)));
    rho.validate_physical();  // throws on violation
  }
}

TEST_CASE("apply_unitary basics") {
  const DensityMatrix zero = DensityMatrix::pure(PureState::computational(1, 0));
  CHECK(apply_unitary(zero, ComplexMatrix::identity(2))
            .matrix()
            .frobenius_distance(zero.matrix()) < 1e-14);

  const DensityMatrix one = apply_unitary(zero, pauli_x());
  CHECK(std::abs(one.matrix()(1, 1) - cxd(1.0, 0.0)) < 1e-14);

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  const DensityMatrix still = apply_unitary(mixed, hadamard());
  CHECK(still.matrix().frobenius_distance(mixed.matrix()) < 1e-14);

  CHECK_THROWS_AS(apply_unitary(zero, pauli_x() * cxd(1.1, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("apply_unitary preserves trace and eigenvalue multiset") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const std::size_t dim = std::size_t{1} << n;
    const PureState psi(n, random_state_amplitudes(rng, dim));
    const DensityMatrix rho = pps(psi, Polarization(uniform(rng, 0.1, 1.0)));
    const DensityMatrix rotated = apply_unitary(rho, random_unitary(rng, dim));
    CHECK(std::abs(rotated.matrix().trace() - cxd(1.0, 0.0)) < 1e-12);
    auto ev1 = hermitian_eigensystem(rho.matrix()).values;
    auto ev2 = hermitian_eigensystem(rotated.matrix()).values;
    for (std::size_t i = 0; i < dim; ++i) {
      CHECK(std::abs(ev1[i] - ev2[i]) < 1e-9);
    }
  }
}

TEST_CASE("xy_magnetization on the axis states") {
  const PureState plus = PureState::plus();
  CHECK(std::abs(xy_magnetization(DensityMatrix::pure(plus), 1) -
                 cxd(1.0, 0.0)) < 1e-14);

  const PureState zero = PureState::computational(1, 0);
  CHECK(std::abs(xy_magnetization(DensityMatrix::pure(zero), 1)) < 1e-14);

  // sigma_y eigenstate with eigenvalue -1: (|0> - i|1>)/sqrt(2)
  const double s = 1.0 / std::sqrt(2.0);
  const PureState minus_i(1, {cxd(s, 0.0), cxd(0.0, -s)});
  CHECK(std::abs(xy_magnetization(DensityMatrix::pure(minus_i), 1) -
                 cxd(0.0, -1.0)) < 1e-14);

  CHECK_THROWS_AS(xy_magnetization(DensityMatrix::pure(zero), 2),
                  std::invalid_argument);
}

TEST_CASE("pps magnetization scales exactly with epsilon") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const PureState psi(n, random_state_amplitudes(rng, std::size_t{1} << n));
    const int q = 1 + static_cast<int>(rng() % n);
    const cxd pure_mag = xy_magnetization(DensityMatrix::pure(psi), q);
    for (double eps : {1e-5, 1e-3, 0.7}) {
      const cxd mag = xy_magnetization(pps(psi, Polarization(eps)), q);
      CHECK(std::abs(mag - eps * pure_mag) < 1e-12);
    }
  }
}

TEST_CASE("dephase limits and scalar factor") {
  const DensityMatrix plus = DensityMatrix::pure(PureState::plus());
  CHECK(dephase(plus, 1, 0.0, 0.08)
            .matrix()
            .frobenius_distance(plus.matrix()) == 0.0);

  const DensityMatrix gone = dephase(plus, 1, 1e6, 0.08);
  CHECK(gone.matrix().frobenius_distance(
            DensityMatrix::maximally_mixed(1).matrix()) < 1e-12);

  const DensityMatrix e1 = dephase(plus, 1, 0.08, 0.08);
  CHECK(std::abs(e1.matrix()(0, 1).real() - std::exp(-1.0) / 2.0) < 1e-15);
  CHECK(std::abs(e1.matrix()(0, 0).real() - 0.5) < 1e-15);

  CHECK_THROWS_AS(dephase(plus, 1, -1.0, 0.08), std::invalid_argument);
}

TEST_CASE("dephase preserves trace and positivity on random states") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const PureState psi(n, random_state_amplitudes(rng, std::size_t{1} << n));
    DensityMatrix rho = pps(psi, Polarization(uniform(rng, 0.2, 1.0)));
    for (int step = 0; step < 3; ++step) {
      rho = dephase(rho, 1 + static_cast<int>(rng() % n),
                    uniform(rng, 0.0, 0.2), 0.08);
    }
    rho.validate_physical();
  }
}

TEST_CASE("overlap basics") {
  const PureState zero = PureState::computational(1, 0);
  const PureState one = PureState::computational(1, 1);
  const PureState plus = PureState::plus();
  CHECK(std::abs(overlap(plus, plus) - 1.0) < 1e-14);
  CHECK(std::abs(overlap(zero, one)) < 1e-14);
  CHECK(std::abs(overlap(plus, zero) - 0.5) < 1e-14);
  CHECK_THROWS_AS(overlap(zero, PureState::computational(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("overlap stays within [0, 1] for random pairs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PureState a(2, random_state_amplitudes(rng, 4));
    const PureState b(2, random_state_amplitudes(rng, 4));
    const double o = overlap(a, b);
    CHECK(o >= 0.0);
    CHECK(o <= 1.0 + 1e-12);
  }
}
