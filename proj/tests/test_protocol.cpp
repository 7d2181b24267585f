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

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ybx/linalg.hpp"
#include "ybx/protocol.hpp"

using namespace ybx;
using oracles::random_state_amplitudes;
using oracles::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

PureState random_qubit(std::mt19937_64& rng) {
  return PureState(1, random_state_amplitudes(rng, 2));
}

}  // namespace

TEST_CASE("phi_states cancel when theta2 = 0 and theta1 = -theta3") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const double t = uniform(rng, -6.0, 6.0);
    const auto [phi1, phi3] = phi_states({t, 0.0, -t});
    const PureState plus = PureState::plus();
    CHECK(overlap(phi1, plus) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(overlap(phi3, plus) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("phi_states at (pi/2, 0, 0)") {
  const auto [phi1, phi3] = phi_states({kPi / 2.0, 0.0, 0.0});
  // phi1 = A(pi/2)|+> = (-i|0> + i|1>)/sqrt(2)
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(phi1.amplitude(0) - cxd(0.0, -s)) < 1e-14);
  CHECK(std::abs(phi1.amplitude(1) - cxd(0.0, s)) < 1e-14);
  // phi3 = B(pi/2)|+> = i|+>
  CHECK(std::abs(phi3.amplitude(0) - cxd(0.0, s)) < 1e-14);
  CHECK(std::abs(phi3.amplitude(1) - cxd(0.0, s)) < 1e-14);
  CHECK(overlap(phi1, phi3) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("phi_states overlap law for the fig3a line") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const double t1 = uniform(rng, 0.0, 2.0 * kPi);
    const auto [phi1, phi3] = phi_states({t1, 0.0, 0.0});
    const double c = std::cos(t1);
    CHECK(overlap(phi1, phi3) == doctest::Approx(c * c).epsilon(1e-12));
  }
}

TEST_CASE("fredkin is the controlled-swap permutation") {
  const ComplexMatrix f = fredkin(2, {1, 3}, 3);
  // Basis oracle: with the control bit set, the target bits exchange.
  for (std::size_t col = 0; col < 8; ++col) {
    const bool ctrl = (col >> 1) & 1u;
    std::size_t expect = col;
    if (ctrl) {
      const std::size_t b1 = (col >> 2) & 1u;
      const std::size_t b3 = col & 1u;
      expect = (col & 0b010u) | (b3 << 2) | b1;
    }
    for (std::size_t row = 0; row < 8; ++row) {
      CHECK(f(row, col) == cxd(row == expect ? 1.0 : 0.0, 0.0));
    }
  }
  // |011> -> |110>
  CHECK(f(0b110, 0b011) == cxd(1.0, 0.0));
  // Involution.
  CHECK((f * f).frobenius_distance(ComplexMatrix::identity(8)) == 0.0);
  CHECK(f.unitarity_defect() < 1e-15);

  CHECK_THROWS_AS(fredkin(1, {1, 3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(fredkin(2, {1, 4}, 3), std::invalid_argument);
}

TEST_CASE("run_circuit reproduces the figure points") {
  SweepSpec spec;
  spec.mode = SweepMode::fig2;
  const ProtocolResult fig2 = run_circuit({-1.234, 0.0, 1.234}, spec);
  CHECK(std::abs(fig2.normalized_magnetization - 1.0) <= 1e-9);
  CHECK(std::abs(fig2.magnetization.imag() / spec.epsilon) <= 1e-9);

  spec.mode = SweepMode::fig3a;
  const ProtocolResult fig3a = run_circuit({kPi / 2.0, 0.0, 0.0}, spec);
  CHECK(std::abs(fig3a.normalized_magnetization) <= 1e-9);

  spec.mode = SweepMode::fig3b;
  const ProtocolResult fig3b =
      run_circuit({kPi / 3.0, kPi / 6.0, kPi / 2.0}, spec);
  CHECK(std::abs(fig3b.normalized_magnetization - 1.0) <= 1e-9);
}

TEST_CASE("circuit readout equals the direct overlap in ideal mode") {
  SweepSpec spec;
  std::mt19937_64 rng(23);
  const cxd ref = reference_magnetization(spec);
  for (int i = 0; i < 40; ++i) {
    const SpectralAngles a{uniform(rng, 0.0, 2.0 * kPi),
                           uniform(rng, 0.0, 2.0 * kPi),
                           uniform(rng, 0.0, 2.0 * kPi)};
    const ProtocolResult r = run_circuit(a, spec, ref);
    CHECK(std::abs(r.normalized_magnetization - r.overlap_direct) <= 1e-9);
    CHECK(r.overlap_direct >= 0.0);
    CHECK(r.overlap_direct <= 1.0 + 1e-12);
    CHECK(std::abs(r.magnetization.imag() / spec.epsilon) <= 1e-9);
  }
}

TEST_CASE("run_sweep fig2 is unity everywhere") {
  SweepSpec spec;
  spec.mode = SweepMode::fig2;
  spec.points = 64;
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 64);
  double mean = 0.0;
  for (const ProtocolResult& r : rows) {
    CHECK(std::abs(r.normalized_magnetization - 1.0) <= 1e-9);
    CHECK(r.theory == 1.0);
    mean += r.normalized_magnetization;
  }
  CHECK(std::abs(mean / 64.0 - 1.0) <= 1e-9);
}

TEST_CASE("run_sweep fig3a follows cos^2 on the coarse grid") {
  SweepSpec spec;
  spec.mode = SweepMode::fig3a;
  spec.points = 9;
  const auto rows = run_sweep(spec);
  const double expect[9] = {1.0, 0.5, 0.0, 0.5, 1.0, 0.5, 0.0, 0.5, 1.0};
  for (int i = 0; i < 9; ++i) {
    CHECK(std::abs(rows[i].normalized_magnetization - expect[i]) <= 1e-9);
    CHECK(std::abs(rows[i].theory - expect[i]) <= 1e-12);
  }
}

TEST_CASE("run_sweep fig3b satisfied exactly at pi/3, pi, 5pi/3") {
  SweepSpec spec;
  spec.mode = SweepMode::fig3b;
  spec.points = 361;
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 361);
  for (int i = 0; i < 361; ++i) {
    const ProtocolResult& r = rows[i];
    const double s = std::sin(1.5 * r.angles.theta1);
    CHECK(std::abs(r.normalized_magnetization - s * s) <= 1e-9);
    if (i == 60 || i == 180 || i == 300) {
      CHECK(std::abs(r.normalized_magnetization - 1.0) <= 1e-9);
    } else {
      const double d = std::min({std::abs(r.angles.theta1 - kPi / 3.0),
                                 std::abs(r.angles.theta1 - kPi),
                                 std::abs(r.angles.theta1 - 5.0 * kPi / 3.0)});
      if (d >= 0.05) CHECK(r.normalized_magnetization <= 1.0 - 1e-4);
    }
  }
}

TEST_CASE("swap-test identity for injected random arm states") {
  SweepSpec spec;
  std::mt19937_64 rng(29);
  const cxd ref = reference_magnetization(spec);
  for (int i = 0; i < 1000; ++i) {
    const PureState p1 = random_qubit(rng);
    const PureState p3 = random_qubit(rng);
    const ProtocolResult r = run_circuit_with_states(p1, p3, spec, ref);
    CHECK(std::abs(r.normalized_magnetization - r.overlap_direct) <= 1e-9);
    CHECK(std::abs((r.magnetization / ref).imag()) <= 1e-9);
  }
}

TEST_CASE("magnetization is linear in epsilon after normalization") {
  const SpectralAngles a{0.9, 0.4, 1.7};
  double first = -1.0;
  for (double eps : {1e-5, 1e-3, 1.0}) {
    SweepSpec spec;
    spec.epsilon = eps;
    const ProtocolResult r = run_circuit(a, spec);
    if (first < 0.0) {
      first = r.normalized_magnetization;
    } else {
      CHECK(std::abs(r.normalized_magnetization - first) <= 1e-9);
    }
  }
}

TEST_CASE("consistency holds iff normalized magnetization is unity") {
  SweepSpec spec;
  const cxd ref = reference_magnetization(spec);
  constexpr int kGrid = 40;
  int checked = 0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      for (int k = 0; k < kGrid; ++k) {
        const SpectralAngles a{2.0 * kPi * i / kGrid, 2.0 * kPi * j / kGrid,
                               2.0 * kPi * k / kGrid};
        const auto [phi1, phi3] = phi_states(a);
        const ProtocolResult r =
            run_circuit_with_states(phi1, phi3, spec, ref);
        const bool unity = std::abs(r.normalized_magnetization - 1.0) <= 1e-9;
        const bool consistent = ybe2d_residual(a) <= 1e-8;
        CHECK(unity == consistent);
        ++checked;
      }
    }
  }
  CHECK(checked == kGrid * kGrid * kGrid);
}

TEST_CASE("t2 model damps monotonically with event durations") {
  SweepSpec spec;
  spec.noise = NoiseModel::t2;
  const SpectralAngles a{0.5, theta2_consistent(0.5, 1.1), 1.1};
  double prev = 1.0 + 1e-12;
  for (double scale : {1.0, 2.0, 4.0}) {
    spec.duration_scale = scale;
    const ProtocolResult r = run_circuit(a, spec);
    CHECK(r.normalized_magnetization > 0.0);
    CHECK(r.normalized_magnetization <= 1.0);
    CHECK(r.normalized_magnetization < prev);
    prev = r.normalized_magnetization;
  }
}

TEST_CASE("sweep spec validation") {
  SweepSpec spec;
  spec.points = 1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.points = 2;
  spec.epsilon = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.epsilon = 1e-5;
  spec.mode = SweepMode::custom;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.custom = {{0, 0, 0}, {1, 0, 0}};
  CHECK_NOTHROW(spec.validate());
  spec.t2_s = {0.08, -1.0, 0.08};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("custom sweeps report the direct overlap as theory") {
  SweepSpec spec;
  spec.mode = SweepMode::custom;
  spec.custom = {{0.3, 0.1, 0.9}, {1.0, 2.0, 3.0}, {0.0, 0.0, 0.0}};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 3);
  for (const ProtocolResult& r : rows) {
    CHECK(r.theory == doctest::Approx(r.overlap_direct).epsilon(1e-14));
    CHECK(std::abs(r.normalized_magnetization - r.overlap_direct) <= 1e-9);
  }
}
