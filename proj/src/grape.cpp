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

#include "ybx/grape.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "ybx/linalg.hpp"

namespace ybx {

namespace {

constexpr double kPi = std::numbers::pi;

using nlohmann::json;

// Deterministic uniform in [0, 1) from raw engine bits; avoids the
// implementation-defined std::uniform_real_distribution.
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct SegmentEig {
  Eigensystem es;
  ComplexMatrix u;  // exp(-i G dt)
};

ComplexMatrix drift_hamiltonian(const MoleculeConfig& m,
                                const EnsembleMember& member) {
  ComplexMatrix h = hamiltonian(m);
  if (member.shift_offset_hz != 0.0) {
    const double w = 2.0 * kPi * member.shift_offset_hz;
    for (int j = 1; j <= m.n; ++j) {
      h += embed(spin_z(), {j}, m.n) * cxd(w, 0.0);
    }
  }
  return h;
}

ComplexMatrix segment_generator(const ControlGrid& c, const MoleculeConfig& m,
                                const EnsembleMember& member,
                                const ComplexMatrix& drift,
                                const std::vector<ComplexMatrix>& ix,
                                const std::vector<ComplexMatrix>& iy, int seg) {
  ComplexMatrix g = drift;
  for (int j = 0; j < m.n; ++j) {
    const double ux = member.rf_scale * c.amp(seg, j, 0);
    const double uy = member.rf_scale * c.amp(seg, j, 1);
    if (ux != 0.0) g += ix[j] * cxd(ux, 0.0);
    if (uy != 0.0) g += iy[j] * cxd(uy, 0.0);
  }
  return g;
}

std::vector<ComplexMatrix> control_ops(const MoleculeConfig& m, bool y) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(m.n);
  for (int j = 1; j <= m.n; ++j) {
    ops.push_back(embed(y ? spin_y() : spin_x(), {j}, m.n));
  }
  return ops;
}

// Frechet derivative of exp(-i G dt) in the direction B, for Hermitian G
// with the given eigensystem (divided-difference form).
ComplexMatrix exp_derivative(const Eigensystem& es, double dt,
                             const ComplexMatrix& b) {
  const std::size_t d = es.values.size();
  const ComplexMatrix m = es.vectors.dagger() * b * es.vectors;
  ComplexMatrix phi(d, d);
  double scale = 1.0;
  for (double v : es.values) scale = std::max(scale, std::abs(v));
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      const double lp = es.values[p], lq = es.values[q];
      cxd f;
      if (std::abs(lp - lq) > 1e-9 * scale) {
        f = (std::exp(cxd(0.0, -lp * dt)) - std::exp(cxd(0.0, -lq * dt))) /
            cxd(lp - lq, 0.0);
      } else {
        f = cxd(0.0, -dt) * std::exp(cxd(0.0, -0.5 * (lp + lq) * dt));
      }
      phi(p, q) = f * m(p, q);
    }
  }
  return es.vectors * phi * es.vectors.dagger();
}

}  // namespace

void ControlGrid::validate() const {
  if (n_spins < 1 || segments < 1) {
    throw std::invalid_argument("ControlGrid: need >= 1 spin and segment");
  }
  if (!(dt_s > 0.0)) throw std::invalid_argument("ControlGrid: dt must be > 0");
  if (amplitudes.size() !=
      static_cast<std::size_t>(segments) * n_spins * 2) {
    throw std::invalid_argument("ControlGrid: amplitude count mismatch");
  }
  for (double a : amplitudes) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("ControlGrid: non-finite amplitude");
    }
  }
}

ControlGrid ControlGrid::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("control grid JSON parse error: ") +
                                e.what());
  }
  ControlGrid c;
  try {
    c.n_spins = j.at("n").get<int>();
    c.segments = j.at("segments").get<int>();
    c.dt_s = j.at("dt_s").get<double>();
    const auto amps =
        j.at("amplitudes_rad_s")
            .get<std::vector<std::vector<std::vector<double>>>>();
    if (static_cast<int>(amps.size()) != c.segments) {
      throw std::invalid_argument("control grid: segment count mismatch");
    }
    c.amplitudes.reserve(static_cast<std::size_t>(c.segments) * c.n_spins * 2);
    for (const auto& seg : amps) {
      if (static_cast<int>(seg.size()) != c.n_spins) {
        throw std::invalid_argument("control grid: spin count mismatch");
      }
      for (const auto& spin : seg) {
        if (spin.size() != 2) {
          throw std::invalid_argument(
              "control grid: need [x, y] quadrature pairs");
        }
        c.amplitudes.push_back(spin[0]);
        c.amplitudes.push_back(spin[1]);
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("control grid JSON: ") + e.what());
  }
  c.validate();
  return c;
}

std::string ControlGrid::to_json_text() const {
  validate();
  json amps = json::array();
  for (int k = 0; k < segments; ++k) {
    json seg = json::array();
    for (int j = 0; j < n_spins; ++j) {
      seg.push_back({amp(k, j, 0), amp(k, j, 1)});
    }
    amps.push_back(std::move(seg));
  }
  json j;
  j["n"] = n_spins;
  j["segments"] = segments;
  j["dt_s"] = dt_s;
  j["amplitudes_rad_s"] = std::move(amps);
  return j.dump(2) + "\n";
}

ControlGrid ControlGrid::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open control grid: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

void ControlGrid::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write control grid: " + path);
  out << to_json_text();
}

RobustnessEnsemble RobustnessEnsemble::trivial() {
  RobustnessEnsemble e;
  e.members.push_back({1.0, 0.0, 1.0});
  return e;
}

RobustnessEnsemble RobustnessEnsemble::default_robust() {
  RobustnessEnsemble e;
  const double scales[] = {0.95, 1.0, 1.05};
  const double offsets[] = {-5.0, 0.0, 5.0};
  for (double s : scales) {
    for (double o : offsets) e.members.push_back({s, o, 1.0 / 9.0});
  }
  return e;
}

void RobustnessEnsemble::validate() const {
  if (members.empty()) {
    throw std::invalid_argument("RobustnessEnsemble: no members");
  }
  double sum = 0.0;
  for (const EnsembleMember& m : members) {
    if (m.weight < 0.0) {
      throw std::invalid_argument("RobustnessEnsemble: negative weight");
    }
    sum += m.weight;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("RobustnessEnsemble: weights must sum to 1");
  }
}

ComplexMatrix propagator(const ControlGrid& c, const MoleculeConfig& m,
                         const EnsembleMember& member) {
  c.validate();
  m.validate();
  if (c.n_spins != m.n) {
    throw std::invalid_argument("propagator: grid/molecule spin mismatch");
  }
  const ComplexMatrix drift = drift_hamiltonian(m, member);
  const std::vector<ComplexMatrix> ix = control_ops(m, false);
  const std::vector<ComplexMatrix> iy = control_ops(m, true);
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << m.n);
  for (int k = 0; k < c.segments; ++k) {
    const ComplexMatrix g = segment_generator(c, m, member, drift, ix, iy, k);
    u = unitary_from_hermitian(g, c.dt_s) * u;
  }
  return u;
}

double fidelity(const ComplexMatrix& u, const ComplexMatrix& target) {
  if (u.rows() != target.rows() || u.cols() != target.cols() ||
      !u.is_square()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const cxd g = (target.dagger() * u).trace();
  const double d = static_cast<double>(u.rows());
  return std::norm(g) / (d * d);
}

std::vector<double> gradient(const ControlGrid& c, const ComplexMatrix& target,
                             const MoleculeConfig& m,
                             const RobustnessEnsemble& ens) {
  c.validate();
  ens.validate();
  const std::size_t dim = std::size_t{1} << m.n;
  if (target.rows() != dim || target.cols() != dim) {
    throw std::invalid_argument("gradient: target dimension mismatch");
  }
  const std::vector<ComplexMatrix> ix = control_ops(m, false);
  const std::vector<ComplexMatrix> iy = control_ops(m, true);
  const double dinv2 = 1.0 / static_cast<double>(dim * dim);
  std::vector<double> grad(c.amplitudes.size(), 0.0);

  for (const EnsembleMember& member : ens.members) {
    const ComplexMatrix drift = drift_hamiltonian(m, member);
    std::vector<SegmentEig> segs;
    segs.reserve(c.segments);
    for (int k = 0; k < c.segments; ++k) {
      SegmentEig se;
      se.es = hermitian_eigensystem(
          segment_generator(c, m, member, drift, ix, iy, k));
      ComplexMatrix scaled = se.es.vectors;
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t q = 0; q < dim; ++q) {
          scaled(r, q) *= std::exp(cxd(0.0, -se.es.values[q] * c.dt_s));
        }
      }
      se.u = scaled * se.es.vectors.dagger();
      segs.push_back(std::move(se));
    }
    // forward[k] = U_k ... U_1 (forward[0] = I), suffix[k] = U_N ... U_{k+2}
    std::vector<ComplexMatrix> forward(c.segments + 1);
    forward[0] = ComplexMatrix::identity(dim);
    for (int k = 0; k < c.segments; ++k) {
      forward[k + 1] = segs[k].u * forward[k];
    }
    std::vector<ComplexMatrix> suffix(c.segments + 1);
    suffix[c.segments] = ComplexMatrix::identity(dim);
    for (int k = c.segments - 1; k >= 0; --k) {
      suffix[k] = suffix[k + 1] * segs[k].u;
    }
    const cxd g0 = (target.dagger() * forward[c.segments]).trace();

    for (int k = 0; k < c.segments; ++k) {
      // Tr(V^dag suffix[k+1] dU_k forward[k]) = Tr(Q dU_k)
      const ComplexMatrix q = forward[k] * target.dagger() * suffix[k + 1];
      for (int j = 0; j < m.n; ++j) {
        for (int quad = 0; quad < 2; ++quad) {
          const ComplexMatrix& b = quad == 0 ? ix[j] : iy[j];
          const ComplexMatrix du =
              exp_derivative(segs[k].es, c.dt_s,
                             b * cxd(member.rf_scale, 0.0));
          const cxd dg = (q * du).trace();
          grad[(static_cast<std::size_t>(k) * m.n + j) * 2 + quad] +=
              member.weight * 2.0 * (std::conj(g0) * dg).real() * dinv2;
        }
      }
    }
  }
  return grad;
}

namespace {

double ensemble_fidelity(const ControlGrid& c, const ComplexMatrix& target,
                         const MoleculeConfig& m, const RobustnessEnsemble& ens,
                         std::vector<double>* members_out = nullptr) {
  double phi = 0.0;
  if (members_out) members_out->clear();
  for (const EnsembleMember& member : ens.members) {
    const double f = fidelity(propagator(c, m, member), target);
    if (members_out) members_out->push_back(f);
    phi += member.weight * f;
  }
  return phi;
}

}  // namespace

std::pair<ControlGrid, OptimizeReport> optimize(const ComplexMatrix& target,
                                                const MoleculeConfig& m,
                                                const RobustnessEnsemble& ens,
                                                const OptimizerConfig& cfg) {
  m.validate();
  ens.validate();
  const std::size_t dim = std::size_t{1} << m.n;
  if (target.rows() != dim || target.cols() != dim) {
    throw std::invalid_argument(
        "optimize: target dimension does not match the molecule (expected " +
        std::to_string(dim) + ")");
  }
  if (!target.is_unitary(1e-10)) {
    throw std::invalid_argument("optimize: target is not unitary");
  }
  if (cfg.segments < 1 || !(cfg.dt_s > 0.0)) {
    throw std::invalid_argument("optimize: bad segment count or dt");
  }

  ControlGrid c;
  c.n_spins = m.n;
  c.segments = cfg.segments;
  c.dt_s = cfg.dt_s;
  c.amplitudes.assign(static_cast<std::size_t>(cfg.segments) * m.n * 2, 0.0);
  std::mt19937_64 rng(cfg.seed);
  for (double& a : c.amplitudes) {
    a = (2.0 * u01(rng) - 1.0) * 0.01 * cfg.amplitude_cap;
  }

  OptimizeReport rep;
  double phi = ensemble_fidelity(c, target, m, ens);
  rep.fidelity_trace.push_back(phi);

  double step = 0.0;  // set from the first gradient
  for (int it = 0; it < cfg.max_iters && phi < cfg.threshold; ++it) {
    const std::vector<double> g = gradient(c, target, m, ens);
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax < cfg.gradient_tol) break;
    if (step <= 0.0) step = 0.01 * cfg.amplitude_cap / gmax;

    bool accepted = false;
    const double step_floor = step * 1e-12;
    while (step > step_floor) {
      ControlGrid cand = c;
      for (std::size_t i = 0; i < cand.amplitudes.size(); ++i) {
        cand.amplitudes[i] = std::clamp(cand.amplitudes[i] + step * g[i],
                                        -cfg.amplitude_cap, cfg.amplitude_cap);
      }
      const double cand_phi = ensemble_fidelity(cand, target, m, ens);
      if (cand_phi > phi) {
        c = std::move(cand);
        phi = cand_phi;
        rep.fidelity_trace.push_back(phi);
        ++rep.iterations;
        step *= 2.0;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }

  rep.ensemble_fidelity = ensemble_fidelity(c, target, m, ens,
                                            &rep.member_fidelities);
  rep.converged = rep.ensemble_fidelity >= cfg.threshold;
  return {std::move(c), std::move(rep)};
}

std::string OptimizeReport::to_json_text() const {
  json j;
  j["converged"] = converged;
  j["iterations"] = iterations;
  j["ensemble_fidelity"] = ensemble_fidelity;
  j["member_fidelities"] = member_fidelities;
  j["fidelity_trace"] = fidelity_trace;
  return j.dump(2) + "\n";
}

}  // namespace ybx
