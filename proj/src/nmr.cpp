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

#include "ybx/nmr.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ybx/grape.hpp"
#include "ybx/linalg.hpp"

namespace ybx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kPulseDur = 10e-6;

using nlohmann::json;

[[noreturn]] void line_error(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

// Shortest decimal that parses back to the same double.
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

void MoleculeConfig::validate() const {
  if (n < 1 || static_cast<std::size_t>(n) > max_qubits()) {
    throw std::invalid_argument("MoleculeConfig: spin count out of range");
  }
  const std::size_t un = static_cast<std::size_t>(n);
  if (shifts_hz.size() != un || t2_s.size() != un || j_hz.size() != un) {
    throw std::invalid_argument("MoleculeConfig: array sizes disagree with n");
  }
  double jmax = 0.0;
  for (const auto& row : j_hz) {
    if (row.size() != un) {
      throw std::invalid_argument("MoleculeConfig: J matrix is not n x n");
    }
    for (double v : row) jmax = std::max(jmax, std::abs(v));
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(j_hz[i][i]) > 0.0) {
      throw std::invalid_argument("MoleculeConfig: J diagonal must be zero");
    }
    for (int j = 0; j < n; ++j) {
      if (std::abs(j_hz[i][j] - j_hz[j][i]) > 1e-9 * std::max(1.0, jmax)) {
        throw std::invalid_argument("MoleculeConfig: J matrix not symmetric");
      }
    }
    if (!(t2_s[i] > 0.0)) {
      throw std::invalid_argument("MoleculeConfig: T2 must be positive");
    }
  }
}

double MoleculeConfig::effective_shift_hz(int spin) const {
  return frame == Frame::lab ? shifts_hz.at(spin - 1) : 0.0;
}

MoleculeConfig MoleculeConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("molecule JSON parse error: ") +
                                e.what());
  }
  MoleculeConfig m;
  try {
    m.n = j.at("n").get<int>();
    m.shifts_hz = j.at("shifts_hz").get<std::vector<double>>();
    m.j_hz = j.at("j_hz").get<std::vector<std::vector<double>>>();
    m.t2_s = j.at("t2_s").get<std::vector<double>>();
    const std::string frame = j.value("frame", std::string("rotating"));
    if (frame == "rotating") {
      m.frame = Frame::rotating;
    } else if (frame == "lab") {
      m.frame = Frame::lab;
    } else {
      throw std::invalid_argument(
          "molecule JSON: frame must be 'rotating' or 'lab'");
    }
    m.description = j.value("description", std::string());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("molecule JSON: ") + e.what());
  }
  m.validate();
  return m;
}

std::string MoleculeConfig::to_json_text() const {
  json j;
  j["n"] = n;
  j["shifts_hz"] = shifts_hz;
  j["j_hz"] = j_hz;
  j["t2_s"] = t2_s;
  j["frame"] = frame == Frame::lab ? "lab" : "rotating";
  if (!description.empty()) j["description"] = description;
  return j.dump(2) + "\n";
}

MoleculeConfig MoleculeConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open molecule file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

void MoleculeConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write molecule file: " + path);
  out << to_json_text();
}

namespace {

// key=value tokens after the event name.
struct TokenMap {
  std::vector<std::pair<std::string, std::string>> kv;
  int line;

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : kv) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  double number(const std::string& key) const {
    const std::string* v = find(key);
    if (v == nullptr) line_error(line, "missing " + key + "=");
    try {
      std::size_t pos = 0;
      const double x = std::stod(*v, &pos);
      if (pos != v->size()) throw std::invalid_argument("trailing junk");
      return x;
    } catch (const std::exception&) {
      line_error(line, "bad number for " + key + "=: '" + *v + "'");
    }
  }
};

TokenMap tokenize(const std::string& rest, int line) {
  TokenMap t;
  t.line = line;
  std::istringstream is(rest);
  std::string tok;
  while (is >> tok) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      line_error(line, "expected key=value, got '" + tok + "'");
    }
    t.kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return t;
}

std::vector<int> parse_int_list(const std::string& s, int line,
                                const std::string& what) {
  std::vector<int> out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(part, &pos);
      if (pos != part.size()) throw std::invalid_argument("junk");
      out.push_back(v);
    } catch (const std::exception&) {
      line_error(line, "bad " + what + " list: '" + s + "'");
    }
  }
  if (out.empty()) line_error(line, "empty " + what + " list");
  return out;
}

}  // namespace

PulseSequence PulseSequence::parse_text(const std::string& text) {
  PulseSequence seq;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    std::string s = raw;
    if (const std::size_t hash = s.find('#'); hash != std::string::npos) {
      s.erase(hash);
    }
    std::istringstream ls(s);
    std::string name;
    if (!(ls >> name)) continue;  // blank / comment
    std::string rest;
    std::getline(ls, rest);
    const TokenMap toks = tokenize(rest, line);

    PulseEvent ev;
    ev.line = line;
    if (name == "rot") {
      ev.kind = PulseEvent::Kind::rotation;
      const std::string* q = toks.find("q");
      if (q == nullptr) line_error(line, "rot missing q=");
      ev.qubits = parse_int_list(*q, line, "qubit");
      if (toks.find("angle")) ev.angle_deg = toks.number("angle");
      if (toks.find("phase")) ev.phase_deg = toks.number("phase");
      if (toks.find("dur")) ev.duration_s = toks.number("dur");
      if (ev.duration_s < 0.0) line_error(line, "negative duration");
    } else if (name == "delay") {
      ev.kind = PulseEvent::Kind::delay;
      ev.duration_s = toks.number("t");
      if (ev.duration_s < 0.0) line_error(line, "negative duration");
      if (const std::string* p = toks.find("pair")) {
        const std::vector<int> pp = parse_int_list(*p, line, "pair");
        if (pp.size() != 2 || pp[0] == pp[1]) {
          line_error(line, "pair needs two distinct qubits");
        }
        ev.has_pair = true;
        ev.pair_i = pp[0];
        ev.pair_j = pp[1];
      }
    } else if (name == "grad") {
      ev.kind = PulseEvent::Kind::gradient;
    } else if (name == "shaped") {
      ev.kind = PulseEvent::Kind::shaped;
      const std::string* f = toks.find("file");
      if (f == nullptr || f->empty()) line_error(line, "shaped missing file=");
      ev.shaped_file = *f;
    } else {
      line_error(line, "unknown event '" + name + "'");
    }
    seq.events.push_back(std::move(ev));
  }
  return seq;
}

PulseSequence PulseSequence::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sequence file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string PulseSequence::serialize() const {
  std::ostringstream os;
  for (const PulseEvent& ev : events) {
    switch (ev.kind) {
      case PulseEvent::Kind::rotation: {
        os << "rot q=";
        for (std::size_t i = 0; i < ev.qubits.size(); ++i) {
          if (i) os << ',';
          os << ev.qubits[i];
        }
        os << " angle=" << format_double(ev.angle_deg)
           << " phase=" << format_double(ev.phase_deg)
           << " dur=" << format_double(ev.duration_s) << '\n';
        break;
      }
      case PulseEvent::Kind::delay:
        os << "delay t=" << format_double(ev.duration_s);
        if (ev.has_pair) os << " pair=" << ev.pair_i << ',' << ev.pair_j;
        os << '\n';
        break;
      case PulseEvent::Kind::gradient:
        os << "grad\n";
        break;
      case PulseEvent::Kind::shaped:
        os << "shaped file=" << ev.shaped_file << '\n';
        break;
    }
  }
  return os.str();
}

void PulseSequence::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write sequence file: " + path);
  out << serialize();
}

int PulseSequence::gradient_count() const {
  int c = 0;
  for (const PulseEvent& ev : events) {
    c += ev.kind == PulseEvent::Kind::gradient;
  }
  return c;
}

void PulseSequence::validate_against(const MoleculeConfig& m) const {
  for (const PulseEvent& ev : events) {
    if (ev.kind == PulseEvent::Kind::rotation) {
      for (int q : ev.qubits) {
        if (q < 1 || q > m.n) line_error(ev.line, "qubit out of range");
      }
    } else if (ev.kind == PulseEvent::Kind::delay && ev.has_pair) {
      if (ev.pair_i < 1 || ev.pair_i > m.n || ev.pair_j < 1 ||
          ev.pair_j > m.n) {
        line_error(ev.line, "pair qubit out of range");
      }
    }
  }
}

ComplexMatrix hamiltonian(const MoleculeConfig& m) {
  m.validate();
  const std::size_t dim = std::size_t{1} << m.n;
  ComplexMatrix h(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    // Iz eigenvalue of spin j (1-based, MSB first): +1/2 for |0>, -1/2 for
    // |1>.
    double e = 0.0;
    for (int j = 1; j <= m.n; ++j) {
      const double mj = (b >> (m.n - j)) & 1u ? -0.5 : 0.5;
      e += 2.0 * kPi * m.effective_shift_hz(j) * mj;
      for (int k = j + 1; k <= m.n; ++k) {
        const double mk = (b >> (m.n - k)) & 1u ? -0.5 : 0.5;
        e += 2.0 * kPi * m.j_hz[j - 1][k - 1] * mj * mk;
      }
    }
    h(b, b) = cxd(e, 0.0);
  }
  return h;
}

namespace {

DensityMatrix dephase_all(DensityMatrix rho, double t,
                          const MoleculeConfig& m) {
  for (int q = 1; q <= m.n; ++q) rho = dephase(rho, q, t, m.t2_s[q - 1]);
  return rho;
}

DensityMatrix evolve_diagonal(const DensityMatrix& rho,
                              const ComplexMatrix& h_diag, double t) {
  const std::size_t dim = rho.dim();
  std::vector<cxd> phase(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    phase[b] = std::exp(cxd(0.0, -h_diag(b, b).real() * t));
  }
  ComplexMatrix out = rho.matrix();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out(r, c) *= phase[r] * std::conj(phase[c]);
    }
  }
  return DensityMatrix(rho.qubits(), std::move(out));
}

// Single-spin hard pulse exp(-i alpha (cos(phi) Ix + sin(phi) Iy)).
ComplexMatrix rotation_gate(double alpha_rad, double phase_rad) {
  const double c = std::cos(alpha_rad / 2.0);
  const double s = std::sin(alpha_rad / 2.0);
  const cxd off_upper = cxd(0.0, -s) * std::exp(cxd(0.0, -phase_rad));
  const cxd off_lower = cxd(0.0, -s) * std::exp(cxd(0.0, phase_rad));
  return {{cxd(c, 0.0), off_upper}, {off_lower, cxd(c, 0.0)}};
}

MoleculeConfig pair_only(const MoleculeConfig& m, int i, int j) {
  MoleculeConfig r = m;
  r.frame = MoleculeConfig::Frame::rotating;  // shifts refocused
  for (auto& row : r.j_hz) std::fill(row.begin(), row.end(), 0.0);
  r.j_hz[i - 1][j - 1] = m.j_hz[i - 1][j - 1];
  r.j_hz[j - 1][i - 1] = m.j_hz[j - 1][i - 1];
  return r;
}

}  // namespace

DensityMatrix evolve_free(const DensityMatrix& rho, double t,
                          const MoleculeConfig& m, bool noise) {
  if (t < 0.0) throw std::invalid_argument("evolve_free: negative time");
  if (rho.qubits() != m.n) {
    throw std::invalid_argument("evolve_free: state/molecule size mismatch");
  }
  DensityMatrix out = evolve_diagonal(rho, hamiltonian(m), t);
  if (noise) out = dephase_all(std::move(out), t, m);
  return out;
}

DensityMatrix apply_gradient(const DensityMatrix& rho) {
  ComplexMatrix m(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) m(i, i) = rho.matrix()(i, i);
  return DensityMatrix(rho.qubits(), std::move(m));
}

DensityMatrix run_sequence(const DensityMatrix& rho0, const PulseSequence& seq,
                           const MoleculeConfig& m, bool noise) {
  m.validate();
  seq.validate_against(m);
  if (rho0.qubits() != m.n) {
    throw std::invalid_argument("run_sequence: state/molecule size mismatch");
  }
  DensityMatrix rho = rho0;
  for (const PulseEvent& ev : seq.events) {
    switch (ev.kind) {
      case PulseEvent::Kind::rotation: {
        ComplexMatrix u = ComplexMatrix::identity(rho.dim());
        const ComplexMatrix g =
            rotation_gate(ev.angle_deg * kDegToRad, ev.phase_deg * kDegToRad);
        for (int q : ev.qubits) u = embed(g, {q}, m.n) * u;
        rho = apply_unitary(rho, u);
        if (noise && ev.duration_s > 0.0) {
          rho = dephase_all(std::move(rho), ev.duration_s, m);
        }
        break;
      }
      case PulseEvent::Kind::delay: {
        if (ev.has_pair) {
          rho = evolve_free(rho, ev.duration_s,
                            pair_only(m, ev.pair_i, ev.pair_j), noise);
        } else {
          rho = evolve_free(rho, ev.duration_s, m, noise);
        }
        break;
      }
      case PulseEvent::Kind::gradient:
        rho = apply_gradient(rho);
        break;
      case PulseEvent::Kind::shaped: {
        ControlGrid grid = ControlGrid::load(ev.shaped_file);
        if (grid.n_spins != m.n) {
          line_error(ev.line, "shaped grid spin count " +
                                  std::to_string(grid.n_spins) +
                                  " does not match molecule " +
                                  std::to_string(m.n));
        }
        rho = apply_unitary(rho, propagator(grid, m, EnsembleMember{}));
        if (noise && grid.total_duration_s() > 0.0) {
          rho = dephase_all(std::move(rho), grid.total_duration_s(), m);
        }
        break;
      }
    }
  }
  return rho;
}

namespace {

PulseEvent rot_event(int qubit, double angle_deg, double phase_deg) {
  PulseEvent ev;
  ev.kind = PulseEvent::Kind::rotation;
  ev.qubits = {qubit};
  ev.angle_deg = angle_deg;
  ev.phase_deg = phase_deg;
  ev.duration_s = kPulseDur;
  return ev;
}

PulseEvent delay_event(double t, int i, int j) {
  PulseEvent ev;
  ev.kind = PulseEvent::Kind::delay;
  ev.duration_s = t;
  ev.has_pair = true;
  ev.pair_i = i;
  ev.pair_j = j;
  return ev;
}

PulseEvent grad_event() {
  PulseEvent ev;
  ev.kind = PulseEvent::Kind::gradient;
  return ev;
}

}  // namespace

PulseSequence prepare_pps_sequence(const MoleculeConfig& m, double phi1_rad,
                                   double phi2_rad) {
  m.validate();
  if (m.n != 3) {
    throw std::invalid_argument("prepare_pps_sequence: needs a 3-spin system");
  }
  const double j12 = std::abs(m.j_hz[0][1]);
  const double j13 = std::abs(m.j_hz[0][2]);
  const double j23 = std::abs(m.j_hz[1][2]);
  if (j12 <= 0.0 || j13 <= 0.0 || j23 <= 0.0) {
    throw std::invalid_argument(
        "prepare_pps_sequence: all three J couplings must be nonzero");
  }
  const double tau12 = 1.0 / (2.0 * j12);
  const double tau13 = 1.0 / (2.0 * j13);
  const double tau23 = 1.0 / (2.0 * j23);

  // Polarization budget: spin 1 splits into z1 and two-spin order with spin
  // 2; spin 3 cascades through both couplings to reach the remaining
  // correlation terms; spin 2 tops up z2 and the (2,3) order last (its block
  // also mixes the parked (1,2) and three-spin orders via antiphase
  // back-transfer). The fixed split angles below put the seven surviving
  // diagonal terms near equal weight once the phi1/phi2 conversions are
  // folded in.
  const double split1_deg = 42.13;   // cos^2 = 0.55
  const double split2_deg = 45.0;    // cos^2 = 0.50
  const double chi1_deg = 35.0;

  PulseSequence seq;
  // spin-1 chain: z1 and 2 Iz1 Iz2
  seq.events.push_back(rot_event(1, split1_deg, 90.0));
  seq.events.push_back(delay_event(tau12, 1, 2));
  seq.events.push_back(rot_event(1, split1_deg, 0.0));
  seq.events.push_back(grad_event());
  // spin-3 cascade: z3, 2 Iz1 Iz3, 4 Iz1 Iz2 Iz3 (and a small (2,3) term)
  seq.events.push_back(rot_event(3, phi1_rad / kDegToRad, 90.0));
  seq.events.push_back(delay_event(tau13, 1, 3));
  seq.events.push_back(rot_event(3, chi1_deg, 180.0));
  seq.events.push_back(delay_event(tau23, 2, 3));
  seq.events.push_back(rot_event(3, phi2_rad / kDegToRad, 90.0));
  // spin-2 chain: z2 and 2 Iz2 Iz3
  seq.events.push_back(rot_event(2, split2_deg, 90.0));
  seq.events.push_back(delay_event(tau23, 2, 3));
  seq.events.push_back(rot_event(2, split2_deg, 0.0));
  seq.events.push_back(grad_event());
  return seq;
}

PulseSequence prepare_pps_sequence(const MoleculeConfig& m) {
  return prepare_pps_sequence(m, 98.2 * kDegToRad, 135.59 * kDegToRad);
}

DensityMatrix thermal_like_state(const MoleculeConfig& m, Polarization eps) {
  m.validate();
  const std::size_t dim = std::size_t{1} << m.n;
  ComplexMatrix rho(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    double mz = 0.0;
    for (int j = 1; j <= m.n; ++j) {
      mz += (b >> (m.n - j)) & 1u ? -0.5 : 0.5;
    }
    rho(b, b) = cxd(1.0 / dim + eps.epsilon * mz / 4.0, 0.0);
  }
  return DensityMatrix(m.n, std::move(rho));
}

double pps_fidelity(const DensityMatrix& rho, Polarization eps) {
  if (!(eps.epsilon > 0.0)) {
    throw std::invalid_argument("pps_fidelity: epsilon must be positive");
  }
  const std::size_t dim = rho.dim();
  const DensityMatrix target =
      pps(PureState::computational(rho.qubits(), 0), eps);
  // Traceless parts.
  ComplexMatrix a = rho.matrix();
  ComplexMatrix b = target.matrix();
  const cxd ta = a.trace() * (1.0 / static_cast<double>(dim));
  const cxd tb = b.trace() * (1.0 / static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    a(i, i) -= ta;
    b(i, i) -= tb;
  }
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  if (na <= 1e-14) {
    throw std::invalid_argument("pps_fidelity: state has zero traceless part");
  }
  double ip = 0.0;  // Re Tr(a b) for Hermitian a, b
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      ip += (std::conj(a(r, c)) * b(r, c)).real();
    }
  }
  return ip / (na * nb);
}

}  // namespace ybx
