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
#include "ybx/braid.hpp"
#include "ybx/linalg.hpp"

using namespace ybx;
using oracles::random_unitary;
using oracles::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

// Test-local subscript placement for two-site operators on three strands,
// independent of embed(): <x1 x2 x3| R_ab |y1 y2 y3> = R[(xa xb),(ya yb)]
// when the remaining strand indices agree.
ComplexMatrix place_pair_oracle(const ComplexMatrix& r, int a, int b) {
  ComplexMatrix out(8, 8);
  const auto bit = [](std::size_t v, int site) {
    return (v >> (3 - site)) & 1u;
  };
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      bool others_match = true;
      for (int s = 1; s <= 3; ++s) {
        if (s != a && s != b && bit(x, s) != bit(y, s)) others_match = false;
      }
      if (!others_match) continue;
      const std::size_t rx = (bit(x, a) << 1) | bit(x, b);
      const std::size_t ry = (bit(y, a) << 1) | bit(y, b);
      out(x, y) = r(rx, ry);
    }
  }
  return out;
}

// Four-dimensional Temperley-Lieb generator at loop weight sqrt(2): the
// rank-one q-deformed singlet pairing E = |u><v| with
// |u> = q^{1/2}|01> - q^{-1/2}|10> and the matching bilinear row, q =
// e^{i pi/4} so that <v|u> = q + q^{-1} = sqrt(2). E / sqrt(2) is idempotent.
ComplexMatrix deformed_singlet_tl() {
  const cxd qh = std::exp(cxd(0.0, kPi / 8.0));
  const cxd u[4] = {0.0, qh, -1.0 / qh, 0.0};
  const cxd v[4] = {0.0, qh, -1.0 / qh, 0.0};
  ComplexMatrix e(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) e(r, c) = u[r] * v[c];
  }
  return e;
}

}  // namespace

TEST_CASE("braid constants satisfy ABA = BAB and are unitary") {
  const ComplexMatrix a = braid_A();
  const ComplexMatrix b = braid_B();
  CHECK((a * b * a).frobenius_distance(b * a * b) <= 1e-12);
  CHECK(a.unitarity_defect() <= 1e-14);
  CHECK(b.unitarity_defect() <= 1e-14);
}

TEST_CASE("braid constants match the parametric family up far a phase") {
  const PhaseMatch pa = equal_up_to_global_phase(braid_A(), A_theta(kPi / 4.0));
  CHECK(pa.equal);
  CHECK(std::abs(pa.phase - std::exp(cxd(0.0, kPi / 8.0))) < 1e-12);

  const PhaseMatch pb = equal_up_to_global_phase(braid_B(), B_theta(-kPi / 4.0));
  CHECK(pb.equal);
  CHECK(std::abs(pb.phase - std::exp(cxd(0.0, kPi / 8.0))) < 1e-12);
}

TEST_CASE("parametric operators: special values and rotation identities") {
  CHECK(A_theta(0.0).frobenius_distance(ComplexMatrix::identity(2)) == 0.0);
  CHECK(B_theta(kPi).frobenius_distance(ComplexMatrix::identity(2) *
                                        cxd(-1.0, 0.0)) < 1e-15);
  // B(theta) = H A(-theta) H
  const ComplexMatrix h = hadamard();
  CHECK(B_theta(0.3).frobenius_distance(h * A_theta(-0.3) * h) < 1e-12);
  // A and B as exponentials of the spin operators
  CHECK(A_theta(0.77).frobenius_distance(
            unitary_from_hermitian(spin_z(), 2.0 * 0.77)) < 1e-13);
  CHECK(B_theta(0.77).frobenius_distance(
            unitary_from_hermitian(spin_x(), -2.0 * 0.77)) < 1e-13);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const double t = uniform(rng, -10.0, 10.0);
    CHECK(A_theta(t).unitarity_defect() < 1e-13);
    CHECK(B_theta(t).unitarity_defect() < 1e-13);
  }
}

TEST_CASE("temperley-lieb generators satisfy the algebra") {
  const TLGenerators g = tl_generators();
  const double d = g.loop_weight;
  CHECK(d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK((g.t1 * g.t1).frobenius_distance(g.t1 * d) <= 1e-12);
  CHECK((g.t2 * g.t2).frobenius_distance(g.t2 * d) <= 1e-12);
  CHECK((g.t1 * g.t2 * g.t1).frobenius_distance(g.t1) <= 1e-12);
  CHECK((g.t2 * g.t1 * g.t2).frobenius_distance(g.t2) <= 1e-12);

  // T2 is d times a rank-1 projector: eigenvalues {0, sqrt(2)}.
  const Eigensystem es = hermitian_eigensystem(g.t2);
  CHECK(std::abs(es.values[0]) < 1e-14);
  CHECK(std::abs(es.values[1] - d) < 1e-14);
}

TEST_CASE("restriction identity behind the T1 derivation") {
  // A(theta) = e^{i theta} (I + (e^{-2i theta} - 1) diag(1, 0))
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const double t = uniform(rng, -kPi, kPi);
    const cxd a = std::exp(cxd(0.0, t));
    ComplexMatrix rhs = ComplexMatrix::identity(2);
    rhs(0, 0) += std::exp(cxd(0.0, -2.0 * t)) - 1.0;
    rhs *= a;
    CHECK(A_theta(t).frobenius_distance(rhs) < 1e-13);
  }
}

TEST_CASE("yang_baxterize reproduces the parametric operators") {
  CHECK(yang_baxterize(kPi / 4.0, TLSite::pair12)
            .frobenius_distance(A_theta(kPi / 4.0)) < 1e-12);
  CHECK(yang_baxterize(0.0, TLSite::pair23)
            .frobenius_distance(ComplexMatrix::identity(2)) < 1e-14);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const double t = uniform(rng, -2.0 * kPi, 2.0 * kPi);
    CHECK(yang_baxterize(t, TLSite::pair12).frobenius_distance(A_theta(t)) <
          1e-12);
    CHECK(yang_baxterize(t, TLSite::pair23).frobenius_distance(B_theta(t)) <
          1e-12);
    CHECK(yang_baxterize(t, TLSite::pair23).unitarity_defect() < 1e-12);
  }
}

TEST_CASE("theta_from_rapidity fixed points and phase property") {
  const RapidityAngle r0 = theta_from_rapidity({0.0, +1});
  CHECK(r0.theta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(r0.gamma - cxd(1.0, 0.0)) < 1e-15);

  CHECK(theta_from_rapidity({1.0, +1}).theta ==
        doctest::Approx(-kPi / 4.0).epsilon(1e-14));
  CHECK(theta_from_rapidity({-1.0, +1}).theta ==
        doctest::Approx(kPi / 4.0).epsilon(1e-14));

  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const Rapidity r{uniform(rng, -50.0, 50.0), (rng() & 1) ? +1 : -1};
    const RapidityAngle ra = theta_from_rapidity(r);
    const cxd num(1.0 + r.w * r.w, 2.0 * r.zeta * r.w);
    const cxd ratio = num / std::conj(num);
    CHECK(std::abs(ratio) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(std::exp(cxd(0.0, -2.0 * ra.theta)) - ratio) <= 1e-12);
    CHECK(ra.theta > -kPi / 2.0);
    CHECK(ra.theta <= kPi / 2.0);
    CHECK(std::abs(ra.gamma - std::exp(cxd(0.0, ra.theta))) < 1e-15);
  }
}

TEST_CASE("theta2_consistent known values") {
  // theta1 = -theta3, theta2 = 0 (taking theta3 in the principal region)
  CHECK(theta2_consistent(-0.3, 0.3) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(theta2_consistent(kPi / 4.0, kPi / 4.0) ==
        doctest::Approx(kPi / 4.0).epsilon(1e-14));
  CHECK(theta2_consistent(kPi / 3.0, kPi / 2.0) ==
        doctest::Approx(kPi / 6.0).epsilon(1e-14));
}

TEST_CASE("theta2_consistent rejects the degenerate point") {
  CHECK_THROWS_WITH_AS(theta2_consistent(3.0 * kPi / 4.0, kPi / 4.0),
                       doctest::Contains("indeterminate"), std::domain_error);
}

TEST_CASE("consistency grid satisfies the matrix relation") {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double t1 = 2.0 * kPi * i / 100.0;
      const double t3 = 2.0 * kPi * j / 100.0;
      const double t2 = theta2_consistent(t1, t3);
      worst = std::max(worst, ybe2d_residual({t1, t2, t3}));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("ybe2d_residual known values") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    const double t = uniform(rng, -6.0, 6.0);
    CHECK(ybe2d_residual({t, 0.0, -t}) <= 1e-13);
  }
  CHECK(ybe2d_residual({kPi / 2.0, 0.0, 0.0}) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ybe2d_residual({kPi / 3.0, kPi / 6.0, kPi / 2.0}) <= 1e-12);
}

TEST_CASE("ybe2d reversal symmetry with swapped roles") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    const SpectralAngles t{uniform(rng, 0.0, 2.0 * kPi),
                           uniform(rng, 0.0, 2.0 * kPi),
                           uniform(rng, 0.0, 2.0 * kPi)};
    const double fwd = ybe2d_residual(t);
    // Swapping A <-> B and reversing the triple rewrites the same equation
    // with its sides exchanged, so the norm is unchanged.
    const ComplexMatrix lhs =
        B_theta(t.theta3) * A_theta(t.theta2) * B_theta(t.theta1);
    const ComplexMatrix rhs =
        A_theta(t.theta1) * B_theta(t.theta2) * A_theta(t.theta3);
    CHECK(fwd == lhs.frobenius_distance(rhs));
  }
}

TEST_CASE("canonical angle reduction lands in [0, 2pi)") {
  const SpectralAngles a{-0.1, 7.0, 13.0};
  const SpectralAngles c = a.canonical();
  for (double v : {c.theta1, c.theta2, c.theta3}) {
    CHECK(v >= 0.0);
    CHECK(v < 2.0 * kPi);
  }
  CHECK(c.theta1 == doctest::Approx(2.0 * kPi - 0.1));
}

TEST_CASE("braid_relations_residual trivial, braid and non-braid inputs") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(braid_relations_residual({i2, i2, i2}) == 0.0);
  CHECK(braid_relations_residual({braid_A(), braid_B()}) <= 1e-12);
  CHECK(braid_relations_residual({pauli_x(), pauli_z()}) > 0.1);

  ComplexMatrix sing(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_WITH_AS(braid_relations_residual({sing, i2}),
                       doctest::Contains("singular"), std::invalid_argument);
}

TEST_CASE("additive YBE: identity, swap and diagonal-phase families") {
  const auto id = [](double, double) { return ComplexMatrix::identity(4); };
  CHECK(ybe_additive_residual(id, 0.0, 1.0, 2.0) == 0.0);

  const auto swp = [](double, double) { return swap_gate(); };
  CHECK(ybe_additive_residual(swp, 0.3, 0.6, 0.9) <= 1e-13);

  const auto diag = [](double vi, double vj) {
    return ComplexMatrix::diagonal(
        {cxd(1, 0), cxd(1, 0), cxd(1, 0), std::exp(cxd(0.0, vi - vj))});
  };
  CHECK(ybe_additive_residual(diag, 0.1, 0.7, 1.3) <= 1e-12);
}

TEST_CASE("additive YBE agrees with the independent placement oracle") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix r12m = oracles::random_matrix(rng, 4, 4);
    const ComplexMatrix r13m = oracles::random_matrix(rng, 4, 4);
    const ComplexMatrix r23m = oracles::random_matrix(rng, 4, 4);
    const auto table = [&](double vi, double vj) {
      if (vi == 1.0 && vj == 2.0) return r12m;
      if (vi == 1.0 && vj == 3.0) return r13m;
      return r23m;
    };
    const double got = ybe_additive_residual(table, 1.0, 2.0, 3.0);
    const ComplexMatrix a = place_pair_oracle(r12m, 1, 2);
    const ComplexMatrix b = place_pair_oracle(r13m, 1, 3);
    const ComplexMatrix c = place_pair_oracle(r23m, 2, 3);
    const double expect = (a * b * c).frobenius_distance(c * b * a);
    CHECK(got == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("multiplicative YBE: identity, TL braid point, negative controls") {
  const auto id = [](double) { return ComplexMatrix::identity(4); };
  CHECK(ybe_multiplicative_residual(id, 2.0, 3.0) == 0.0);

  // Braid element sigma = A I + A^{-1} E from the TL projector family at
  // d = -A^2 - A^{-2} = sqrt(2) with A = e^{3 i pi / 8}.
  const cxd a = std::exp(cxd(0.0, 3.0 * kPi / 8.0));
  const ComplexMatrix e = deformed_singlet_tl();
  const ComplexMatrix sigma = ComplexMatrix::identity(4) * a + e * (1.0 / a);

  // The family's TL identities, checked on strand pairs first.
  const ComplexMatrix e12 = embed(e, {1, 2}, 3);
  const ComplexMatrix e23 = embed(e, {2, 3}, 3);
  CHECK((e * e).frobenius_distance(e * std::sqrt(2.0)) < 1e-14);
  CHECK((e12 * e23 * e12).frobenius_distance(e12) < 1e-13);
  CHECK((e23 * e12 * e23).frobenius_distance(e23) < 1e-13);

  const auto constant = [&](double) { return sigma; };
  const double mres = ybe_multiplicative_residual(constant, 0.4, 1.7);
  CHECK(mres <= 1e-12);
  // Reduces to the braid relation on the same embedded matrices.
  const ComplexMatrix s12 = embed(sigma, {1, 2}, 3);
  const ComplexMatrix s23 = embed(sigma, {2, 3}, 3);
  const double braid_res = braid_relations_residual({sigma, sigma});
  CHECK(mres ==
        doctest::Approx((s12 * s23 * s12).frobenius_distance(s23 * s12 * s23))
            .epsilon(1e-12));
  CHECK(braid_res <= 1e-12);

  std::mt19937_64 rng(47);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix u = random_unitary(rng, 4);
    const auto rc = [&](double) { return u; };
    if (ybe_multiplicative_residual(rc, 0.5, 2.0) > 1e-3) ++violations;
  }
  CHECK(violations >= 99);
}
