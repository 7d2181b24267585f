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

#include "ybx/braid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ybx/linalg.hpp"

namespace ybx {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_2pi(double x) {
  double y = std::fmod(x, 2.0 * kPi);
  if (y < 0.0) y += 2.0 * kPi;
  return y;
}

}  // namespace

SpectralAngles SpectralAngles::canonical() const {
  return {wrap_2pi(theta1), wrap_2pi(theta2), wrap_2pi(theta3)};
}

ComplexMatrix braid_A() {
  const cxd pre = std::exp(cxd(0.0, -kPi / 8.0));
  return {{pre, 0}, {0, pre * cxd(0.0, 1.0)}};
}

ComplexMatrix braid_B() {
  const cxd pre = 0.5 * std::exp(cxd(0.0, -kPi / 8.0));
  const cxd p(1.0, 1.0), m(1.0, -1.0);
  return {{pre * p, pre * m}, {pre * m, pre * p}};
}

ComplexMatrix A_theta(double theta) {
  return {{std::exp(cxd(0.0, -theta)), 0}, {0, std::exp(cxd(0.0, theta))}};
}

ComplexMatrix B_theta(double theta) {
  const cxd c(std::cos(theta), 0.0);
  const cxd is(0.0, std::sin(theta));
  return {{c, is}, {is, c}};
}

TLGenerators tl_generators() {
  const double rt2 = std::sqrt(2.0);
  TLGenerators g;
  g.t1 = ComplexMatrix{{rt2, 0}, {0, 0}};
  g.t2 = ComplexMatrix{{1.0 / rt2, -1.0 / rt2}, {-1.0 / rt2, 1.0 / rt2}};
  g.loop_weight = rt2;
  return g;
}

ComplexMatrix yang_baxterize(double theta, TLSite which) {
  const cxd a = std::exp(cxd(0.0, theta));
  const cxd b = a * (std::exp(cxd(0.0, -2.0 * theta)) - 1.0) / std::sqrt(2.0);
  const TLGenerators g = tl_generators();
  const ComplexMatrix& t = (which == TLSite::pair12) ? g.t1 : g.t2;
  ComplexMatrix r = ComplexMatrix::identity(2) * a + t * b;
  const ComplexMatrix expected =
      (which == TLSite::pair12) ? A_theta(theta) : B_theta(theta);
  const double dist = r.frobenius_distance(expected);
  if (dist > 1e-12) {
    throw std::logic_error("yang_baxterize: reduction identity violated by " +
                           std::to_string(dist));
  }
  return r;
}

RapidityAngle theta_from_rapidity(const Rapidity& r) {
  if (!std::isfinite(r.w)) {
    throw std::invalid_argument("theta_from_rapidity: w not finite");
  }
  if (r.zeta != 1 && r.zeta != -1) {
    throw std::invalid_argument("theta_from_rapidity: zeta must be +1 or -1");
  }
  const cxd num(1.0 + r.w * r.w, 2.0 * r.zeta * r.w);
  // Denominator is conj(num); the quotient is the pure phase e^{2i arg(num)},
  // so e^{-2i theta} = num/conj(num) gives theta = -arg(num).
  RapidityAngle out;
  out.theta = -std::arg(num);
  if (out.theta <= -kPi / 2.0) out.theta += kPi;  // canonical (-pi/2, pi/2]
  out.gamma = std::exp(cxd(0.0, out.theta));
  return out;
}

double theta2_consistent(double theta1, double theta3) {
  const double s = std::sin(theta1 + theta3);
  const double c = std::cos(theta1 - theta3);
  if (std::abs(s) < 1e-12 && std::abs(c) < 1e-12) {
    throw std::domain_error("theta2_consistent: consistency relation "
                            "indeterminate (sin(t1+t3) and cos(t1-t3) vanish)");
  }
  const double theta2 = std::atan2(s, c);
  const double res = ybe2d_residual({theta1, theta2, theta3});
  if (res > 1e-8) {
    throw std::logic_error("theta2_consistent: branch check failed, residual " +
                           std::to_string(res));
  }
  return theta2;
}

double ybe2d_residual(const SpectralAngles& angles) {
  const ComplexMatrix lhs =
      A_theta(angles.theta1) * B_theta(angles.theta2) * A_theta(angles.theta3);
  const ComplexMatrix rhs =
      B_theta(angles.theta3) * A_theta(angles.theta2) * B_theta(angles.theta1);
  return lhs.frobenius_distance(rhs);
}

double braid_relations_residual(const std::vector<ComplexMatrix>& sigmas) {
  if (sigmas.empty()) return 0.0;
  const std::size_t dim = sigmas.front().rows();
  for (const ComplexMatrix& s : sigmas) {
    if (!s.is_square() || s.rows() != dim) {
      throw std::invalid_argument(
          "braid_relations_residual: generators must share one square "
          "dimension");
    }
  }
  const ComplexMatrix eye = ComplexMatrix::identity(dim);
  double worst = 0.0;
  for (std::size_t j = 0; j < sigmas.size(); ++j) {
    // inverse() throws "singular generator" semantics for us
    ComplexMatrix inv;
    try {
      inv = inverse(sigmas[j]);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("braid_relations_residual: singular "
                                  "generator at position " + std::to_string(j));
    }
    worst = std::max(worst, (sigmas[j] * inv).frobenius_distance(eye));
    for (std::size_t k = j + 2; k < sigmas.size(); ++k) {
      worst = std::max(worst, (sigmas[j] * sigmas[k])
                                  .frobenius_distance(sigmas[k] * sigmas[j]));
    }
    if (j + 1 < sigmas.size()) {
      const ComplexMatrix& a = sigmas[j];
      const ComplexMatrix& b = sigmas[j + 1];
      worst = std::max(worst, (a * b * a).frobenius_distance(b * a * b));
    }
  }
  return worst;
}

namespace {

ComplexMatrix embed_pair_of_three(const ComplexMatrix& r, int i, int j) {
  if (r.rows() != 4 || r.cols() != 4) {
    throw std::invalid_argument("ybe residual: R must return 4x4 matrices");
  }
  return embed(r, {i, j}, 3);
}

}  // namespace

double ybe_additive_residual(
    const std::function<ComplexMatrix(double, double)>& r, double v1, double v2,
    double v3) {
  const ComplexMatrix r12 = embed_pair_of_three(r(v1, v2), 1, 2);
  const ComplexMatrix r13 = embed_pair_of_three(r(v1, v3), 1, 3);
  const ComplexMatrix r23 = embed_pair_of_three(r(v2, v3), 2, 3);
  return (r12 * r13 * r23).frobenius_distance(r23 * r13 * r12);
}

double ybe_multiplicative_residual(
    const std::function<ComplexMatrix(double)>& rc, double x, double y) {
  const ComplexMatrix rx12 = embed_pair_of_three(rc(x), 1, 2);
  const ComplexMatrix ry12 = embed_pair_of_three(rc(y), 1, 2);
  const ComplexMatrix rxy12 = embed_pair_of_three(rc(x * y), 1, 2);
  const ComplexMatrix rx23 = embed_pair_of_three(rc(x), 2, 3);
  const ComplexMatrix ry23 = embed_pair_of_three(rc(y), 2, 3);
  const ComplexMatrix rxy23 = embed_pair_of_three(rc(x * y), 2, 3);
  return (rx12 * rxy23 * ry12).frobenius_distance(ry23 * rxy12 * rx23);
}

}  // namespace ybx
