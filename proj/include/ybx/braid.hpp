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

#ifndef YBX_BRAID_HPP
#define YBX_BRAID_HPP

#include <functional>
#include <vector>

#include "ybx/complex_matrix.hpp"

namespace ybx {

/// Angle triple (theta1, theta2, theta3) parametrizing the two-dimensional
/// Yang-Baxter relation A(t1) B(t2) A(t3) = B(t3) A(t2) B(t1).
struct SpectralAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;

  /// Componentwise reduction to [0, 2pi).
  SpectralAngles canonical() const;
};

/// Real spectral variable w with branch sign zeta in {-1, +1}.
struct Rapidity {
  double w = 0.0;
  int zeta = +1;
};

/// Constant braid generators acting on the two-dimensional basis:
/// A = e^{-i pi/8} diag(1, i), B = (e^{-i pi/8}/2) [[1+i, 1-i], [1-i, 1+i]].
ComplexMatrix braid_A();
ComplexMatrix braid_B();

/// Spectral-parameter family: A(theta) = exp(-i 2 theta I_z),
/// B(theta) = exp(+i 2 theta I_x).
ComplexMatrix A_theta(double theta);
ComplexMatrix B_theta(double theta);

struct TLGenerators {
  ComplexMatrix t1;      // sqrt(2) diag(1, 0)
  ComplexMatrix t2;      // (1/sqrt 2) [[1,-1],[-1,1]]
  double loop_weight;    // sqrt(2)
};

/// Temperley-Lieb generators restricted to the two-dimensional basis; they
/// satisfy T^2 = d T, T1 T2 T1 = T1 and T2 T1 T2 = T2.
TLGenerators tl_generators();

enum class TLSite { pair12, pair23 };

/// a(theta) I + b(theta) T with a = e^{i theta}, b = e^{i theta}
/// (e^{-2 i theta} - 1)/sqrt(2); equals A_theta / B_theta for pair12 / pair23
/// (checked to 1e-12 at call time).
ComplexMatrix yang_baxterize(double theta, TLSite which);

struct RapidityAngle {
  double theta = 0.0;   // in (-pi/2, pi/2]
  cxd gamma{1.0, 0.0};  // e^{i theta}
};

/// Solves ((1+w^2) + 2 i zeta w) / ((1+w^2) - 2 i zeta w) = e^{-2 i theta}.
RapidityAngle theta_from_rapidity(const Rapidity& r);

/// theta2 = atan2(sin(t1+t3), cos(t1-t3)); the returned branch satisfies the
/// matrix relation, which is verified at call time (error above 1e-8).
double theta2_consistent(double theta1, double theta3);

/// ||A(t1)B(t2)A(t3) - B(t3)A(t2)B(t1)||_F
double ybe2d_residual(const SpectralAngles& angles);

/// Max over far-commutation, invertibility and adjacent braid-relation
/// residuals for the given generators (all acting on one common space).
double braid_relations_residual(const std::vector<ComplexMatrix>& sigmas);

/// ||R12 R13 R23 - R23 R13 R12||_F in the triple space, R being the map
/// (v_i, v_j) -> 4x4 matrix.
double ybe_additive_residual(
    const std::function<ComplexMatrix(double, double)>& r, double v1, double v2,
    double v3);

/// ||R12(x) R23(xy) R12(y) - R23(y) R12(xy) R23(x)||_F for the one-parameter
/// family x -> 4x4 matrix.
double ybe_multiplicative_residual(
    const std::function<ComplexMatrix(double)>& rc, double x, double y);

}  // namespace ybx

#endif  // YBX_BRAID_HPP
