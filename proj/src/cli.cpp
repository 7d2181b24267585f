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

#include "ybx/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybx/grape.hpp"
#include "ybx/linalg.hpp"
#include "ybx/nmr.hpp"
#include "ybx/protocol.hpp"

namespace ybx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = kPi / 180.0;

using nlohmann::json;

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot write output file: " + path);
  f << text;
}

struct VerifyCheck {
  std::string name;
  double residual;
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

int cmd_verify(double tol_override, double perturb, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  std::vector<VerifyCheck> checks;

  ComplexMatrix a = braid_A();
  const ComplexMatrix b = braid_B();
  a(0, 0) += perturb;
  checks.push_back({"braid relation", braid_relations_residual({a, b}),
                    tol_override > 0 ? tol_override : 1e-12});

  const TLGenerators tl = tl_generators();
  double tl_res = (tl.t1 * tl.t1).frobenius_distance(tl.t1 * tl.loop_weight);
  tl_res = std::max(tl_res, (tl.t2 * tl.t2)
                                .frobenius_distance(tl.t2 * tl.loop_weight));
  tl_res = std::max(tl_res,
                    (tl.t1 * tl.t2 * tl.t1).frobenius_distance(tl.t1));
  tl_res = std::max(tl_res,
                    (tl.t2 * tl.t1 * tl.t2).frobenius_distance(tl.t2));
  checks.push_back({"temperley-lieb identities", tl_res,
                    tol_override > 0 ? tol_override : 1e-12});

  double grid_res = 0.0;
  constexpr int kGrid = 100;
  for (int i = 0; i < kGrid; ++i) {
    const double t1 = 2.0 * kPi * i / kGrid;
    for (int j = 0; j < kGrid; ++j) {
      const double t3 = 2.0 * kPi * j / kGrid;
      const double t2 = theta2_consistent(t1, t3);
      grid_res = std::max(grid_res, ybe2d_residual({t1, t2, t3}));
    }
  }
  checks.push_back({"consistency-grid ybe residual", grid_res,
                    tol_override > 0 ? tol_override : 1e-10});

  json report;
  report["checks"] = json::array();
  bool all_pass = true;
  const VerifyCheck* first_fail = nullptr;
  for (const VerifyCheck& c : checks) {
    report["checks"].push_back({{"name", c.name},
                                {"residual", c.residual},
                                {"tolerance", c.tolerance},
                                {"pass", c.pass()}});
    if (!c.pass() && first_fail == nullptr) first_fail = &c;
    all_pass = all_pass && c.pass();
  }
  report["pass"] = all_pass;

  for (const VerifyCheck& c : checks) {
    out << c.name << ": max residual " << c.residual << " (tol " << c.tolerance
        << ") " << (c.pass() ? "ok" : "FAIL") << "\n";
  }
  if (!out_path.empty()) write_text(out_path, report.dump(2) + "\n", out);
  if (!all_pass) {
    err << "verify: relation violated: " << first_fail->name << " (residual "
        << first_fail->residual << " > " << first_fail->tolerance << ")\n";
    return 1;
  }
  return 0;
}

std::vector<SpectralAngles> load_angle_triples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open angles file: " + path);
  std::vector<SpectralAngles> triples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ls, cell, ',')) {
      try {
        vals.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::invalid_argument("angles file line " +
                                    std::to_string(lineno) + ": bad number");
      }
    }
    if (vals.size() != 3) {
      throw std::invalid_argument("angles file line " + std::to_string(lineno) +
                                  ": need theta1,theta2,theta3 in degrees");
    }
    triples.push_back(
        {vals[0] * kDegToRad, vals[1] * kDegToRad, vals[2] * kDegToRad});
  }
  return triples;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path,
              std::ostream& out) {
  const std::vector<ProtocolResult> rows = run_sweep(spec);
  std::ostringstream csv;
  csv << "theta1,theta2,theta3,overlap,re_mag,im_mag,norm_mag,theory\n";
  for (const ProtocolResult& r : rows) {
    csv << format_fixed9(r.angles.theta1) << ',' << format_fixed9(r.angles.theta2)
        << ',' << format_fixed9(r.angles.theta3) << ','
        << format_fixed9(r.overlap_direct) << ','
        << format_fixed9(r.magnetization.real()) << ','
        << format_fixed9(r.magnetization.imag()) << ','
        << format_fixed9(r.normalized_magnetization) << ','
        << format_fixed9(r.theory) << '\n';
  }
  write_text(out_path, csv.str(), out);
  return 0;
}

json density_report(const DensityMatrix& rho) {
  json rep;
  json diag = json::array();
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    diag.push_back(rho.matrix()(i, i).real());
  }
  rep["diagonal"] = std::move(diag);

  // Largest off-diagonal coherences by modulus.
  struct Coh {
    std::size_t r, c;
    cxd v;
  };
  std::vector<Coh> coh;
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = r + 1; c < rho.dim(); ++c) {
      coh.push_back({r, c, rho.matrix()(r, c)});
    }
  }
  std::sort(coh.begin(), coh.end(), [](const Coh& x, const Coh& y) {
    if (std::abs(x.v) != std::abs(y.v)) return std::abs(x.v) > std::abs(y.v);
    return std::pair(x.r, x.c) < std::pair(y.r, y.c);
  });
  json largest = json::array();
  for (std::size_t i = 0; i < coh.size() && i < 5; ++i) {
    largest.push_back({{"row", coh[i].r},
                       {"col", coh[i].c},
                       {"re", coh[i].v.real()},
                       {"im", coh[i].v.imag()},
                       {"abs", std::abs(coh[i].v)}});
  }
  rep["largest_coherences"] = std::move(largest);
  rep["trace"] = rho.matrix().trace().real();
  return rep;
}

int cmd_simulate(const std::string& seq_path, const std::string& mol_path,
                 bool noise, const std::string& init, double epsilon,
                 bool report_pps_fidelity, const std::string& out_path,
                 std::ostream& out) {
  const MoleculeConfig m = MoleculeConfig::load(mol_path);
  const PulseSequence seq = PulseSequence::load(seq_path);
  seq.validate_against(m);

  DensityMatrix rho0 = [&] {
    if (init == "ground") {
      return DensityMatrix::pure(PureState::computational(m.n, 0));
    }
    if (init == "thermal") return thermal_like_state(m, Polarization(epsilon));
    if (init == "pps") {
      return pps(PureState::computational(m.n, 0), Polarization(epsilon));
    }
    throw std::invalid_argument("simulate: unknown init '" + init + "'");
  }();

  const DensityMatrix rho = run_sequence(rho0, seq, m, noise);
  json rep = density_report(rho);
  rep["gradient_count"] = seq.gradient_count();
  if (report_pps_fidelity) {
    rep["pps_fidelity"] = pps_fidelity(rho, Polarization(epsilon));
  }
  write_text(out_path, rep.dump(2) + "\n", out);
  return 0;
}

ComplexMatrix named_target(const std::string& name, int target_qubit,
                           const MoleculeConfig& m) {
  const auto embed1 = [&](const ComplexMatrix& g) {
    return embed(g, {target_qubit}, m.n);
  };
  if (name == "identity") {
    return ComplexMatrix::identity(std::size_t{1} << m.n);
  }
  if (name == "ry90") {
    return embed1(unitary_from_hermitian(spin_y(), kPi / 2.0));
  }
  if (name == "rx90") {
    return embed1(unitary_from_hermitian(spin_x(), kPi / 2.0));
  }
  if (name == "x180") {
    return embed1(unitary_from_hermitian(spin_x(), kPi));
  }
  if (name == "hadamard") {
    return embed1(hadamard());
  }
  if (name == "cswap") {
    if (m.n != 3) {
      throw std::invalid_argument("grape: cswap target needs a 3-spin system");
    }
    return fredkin(2, {1, 3}, 3);
  }
  if (name.rfind("matrix:", 0) == 0) {
    const std::string path = name.substr(7);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open target matrix: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    json j = json::parse(ss.str());
    const auto rows = j.at("re").get<std::vector<std::vector<double>>>();
    const auto imag = j.at("im").get<std::vector<std::vector<double>>>();
    if (rows.empty() || rows.size() != imag.size()) {
      throw std::invalid_argument("target matrix: bad shape");
    }
    ComplexMatrix t(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        t(r, c) = cxd(rows[r][c], imag[r][c]);
      }
    }
    return t;
  }
  throw std::invalid_argument("grape: unknown target '" + name + "'");
}

int cmd_grape(const std::string& target_name, int target_qubit,
              const std::string& mol_path, const std::string& ensemble,
              const OptimizerConfig& cfg, const std::string& out_path,
              const std::string& report_path, std::ostream& out,
              std::ostream& err) {
  const MoleculeConfig m = MoleculeConfig::load(mol_path);
  const ComplexMatrix target = named_target(target_name, target_qubit, m);
  const RobustnessEnsemble ens = ensemble == "robust"
                                     ? RobustnessEnsemble::default_robust()
                                     : RobustnessEnsemble::trivial();
  auto [grid, rep] = optimize(target, m, ens, cfg);
  if (!out_path.empty()) grid.save(out_path);
  write_text(report_path, rep.to_json_text(), out);
  if (!rep.converged) {
    err << "grape: did not reach threshold " << cfg.threshold
        << "; ensemble fidelity " << rep.ensemble_fidelity << " after "
        << rep.iterations << " accepted steps\n";
    err << "trace:";
    for (double f : rep.fidelity_trace) err << ' ' << f;
    err << "\n";
    return 2;
  }
  return 0;
}

int cmd_pps(const std::string& mol_path, double phi1_deg, double phi2_deg,
            double epsilon, double threshold, bool ideal,
            const std::string& emit_seq, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  const MoleculeConfig m = MoleculeConfig::load(mol_path);
  json rep;
  double fid = 0.0;
  if (ideal) {
    const DensityMatrix rho =
        pps(PureState::computational(m.n, 0), Polarization(epsilon));
    fid = pps_fidelity(rho, Polarization(epsilon));
    rep["mode"] = "ideal";
    rep["gradient_count"] = 0;
  } else {
    const PulseSequence seq =
        prepare_pps_sequence(m, phi1_deg * kDegToRad, phi2_deg * kDegToRad);
    if (!emit_seq.empty()) seq.save(emit_seq);
    const DensityMatrix rho = run_sequence(
        thermal_like_state(m, Polarization(epsilon)), seq, m, false);
    fid = pps_fidelity(rho, Polarization(epsilon));
    rep["mode"] = "sequence";
    rep["gradient_count"] = seq.gradient_count();
  }
  rep["pps_fidelity"] = fid;
  rep["threshold"] = threshold;
  rep["pass"] = fid >= threshold;
  write_text(out_path, rep.dump(2) + "\n", out);
  if (fid < threshold) {
    err << "pps: fidelity " << fid << " below threshold " << threshold << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

std::string format_fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s(buf);
  if (s == "-0.000000000") s.erase(0, 1);
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Yang-Baxter NMR interferometry simulator"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check braid, Temperley-Lieb and consistency-grid relations");
  double tol = 0.0;
  double perturb = 0.0;
  std::string verify_out;
  verify->add_option("--tol", tol, "override all tolerances");
  verify->add_option("--perturb", perturb,
                     "add x to entry (0,0) of the first braid generator "
                     "(negative-control hook)");
  verify->add_option("--out", verify_out, "write JSON report here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run an angle sweep, emit CSV");
  std::string mode = "fig2";
  SweepSpec spec;
  std::string sweep_out;
  std::string angles_file;
  std::string sweep_molecule;
  std::string noise = "ideal";
  std::uint64_t seed = 0;
  sweep->add_option("--mode", mode, "fig2|fig3a|fig3b|custom")
      ->check(CLI::IsMember({"fig2", "fig3a", "fig3b", "custom"}));
  sweep->add_option("--points", spec.points, "grid points (>= 2)");
  sweep->add_option("--noise", noise, "ideal|t2")
      ->check(CLI::IsMember({"ideal", "t2"}));
  sweep->add_option("--epsilon", spec.epsilon, "thermal polarization");
  sweep->add_option("--duration-scale", spec.duration_scale,
                    "scale all t2-model event durations");
  sweep->add_option("--angles-file", angles_file,
                    "custom mode: CSV of theta1,theta2,theta3 in degrees");
  sweep->add_option("--molecule", sweep_molecule,
                    "molecule JSON (supplies T2 times for the t2 model)");
  sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
  sweep->add_option("--seed", seed, "accepted for interface stability");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run a pulse sequence file");
  std::string seq_path, sim_molecule, sim_out;
  std::string init = "ground";
  bool sim_noise = false;
  double sim_epsilon = 1e-5;
  bool sim_pps_fid = false;
  simulate->add_option("--seq", seq_path, "sequence file")->required();
  simulate->add_option("--molecule", sim_molecule, "molecule JSON")->required();
  simulate->add_flag("--t2", sim_noise, "enable T2 dephasing");
  simulate->add_option("--init", init, "ground|thermal|pps")
      ->check(CLI::IsMember({"ground", "thermal", "pps"}));
  simulate->add_option("--epsilon", sim_epsilon, "thermal polarization");
  simulate->add_flag("--pps-fidelity", sim_pps_fid,
                     "report fidelity against the |0...0> pseudo-pure state");
  simulate->add_option("--out", sim_out, "JSON report path (default stdout)");

  // grape
  auto* grape = app.add_subcommand("grape", "compile a gate to RF controls");
  std::string target = "ry90";
  int target_qubit = 1;
  std::string grape_molecule, grid_out, report_out;
  std::string ensemble = "trivial";
  OptimizerConfig cfg;
  grape->add_option("--target", target,
                    "identity|ry90|rx90|x180|hadamard|cswap|matrix:<file>");
  grape->add_option("--target-qubit", target_qubit,
                    "qubit for single-spin targets");
  grape->add_option("--molecule", grape_molecule, "molecule JSON")->required();
  grape->add_option("--ensemble", ensemble, "trivial|robust")
      ->check(CLI::IsMember({"trivial", "robust"}));
  grape->add_option("--segments", cfg.segments, "control segments");
  grape->add_option("--dt", cfg.dt_s, "segment duration in seconds");
  grape->add_option("--max-iters", cfg.max_iters, "iteration cap");
  grape->add_option("--threshold", cfg.threshold, "fidelity target");
  grape->add_option("--seed", cfg.seed, "initial-amplitude seed");
  grape->add_option("--amplitude-cap", cfg.amplitude_cap,
                    "max |amplitude| in rad/s");
  grape->add_option("--out", grid_out, "control-grid JSON path");
  grape->add_option("--report", report_out,
                    "fidelity report path (default stdout)");

  // pps
  auto* ppscmd =
      app.add_subcommand("pps", "prepare and grade a pseudo-pure state");
  std::string pps_molecule, pps_out, pps_emit;
  double phi1 = 98.2, phi2 = 135.59;
  double pps_epsilon = 1e-5;
  double pps_threshold = 0.9;
  bool pps_ideal = false;
  ppscmd->add_option("--molecule", pps_molecule, "molecule JSON")->required();
  ppscmd->add_option("--phi1", phi1, "first anchored angle in degrees");
  ppscmd->add_option("--phi2", phi2, "second anchored angle in degrees");
  ppscmd->add_option("--epsilon", pps_epsilon, "thermal polarization");
  ppscmd->add_option("--threshold", pps_threshold, "quality gate");
  ppscmd->add_flag("--ideal", pps_ideal,
                   "mathematical construction instead of the pulse sequence");
  ppscmd->add_option("--emit-seq", pps_emit, "write the built sequence here");
  ppscmd->add_option("--out", pps_out, "JSON report path (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("ybxsim");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(verify)) {
      return cmd_verify(tol, perturb, verify_out, out, err);
    }
    if (app.got_subcommand(sweep)) {
      spec.mode = mode == "fig2"    ? SweepMode::fig2
                  : mode == "fig3a" ? SweepMode::fig3a
                  : mode == "fig3b" ? SweepMode::fig3b
                                    : SweepMode::custom;
      spec.noise = noise == "t2" ? NoiseModel::t2 : NoiseModel::ideal;
      if (spec.mode == SweepMode::custom) {
        if (angles_file.empty()) {
          throw std::invalid_argument("sweep: custom mode needs --angles-file");
        }
        spec.custom = load_angle_triples(angles_file);
      }
      if (!sweep_molecule.empty()) {
        const MoleculeConfig m = MoleculeConfig::load(sweep_molecule);
        if (m.n != 3) {
          throw std::invalid_argument("sweep: molecule must have 3 spins");
        }
        spec.t2_s = m.t2_s;
      }
      return cmd_sweep(spec, sweep_out, out);
    }
    if (app.got_subcommand(simulate)) {
      return cmd_simulate(seq_path, sim_molecule, sim_noise, init, sim_epsilon,
                          sim_pps_fid, sim_out, out);
    }
    if (app.got_subcommand(grape)) {
      return cmd_grape(target, target_qubit, grape_molecule, ensemble, cfg,
                       grid_out, report_out, out, err);
    }
    if (app.got_subcommand(ppscmd)) {
      return cmd_pps(pps_molecule, phi1, phi2, pps_epsilon, pps_threshold,
                     pps_ideal, pps_emit, pps_out, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace ybx
