// Copyright 2026 The EHands Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// ehands_cli: fit, sweep, resources, mse, export.
//
// Exit codes: 0 ok, 1 usage error, 2 numeric-domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ehands/circuit.h"
#include "ehands/compiler.h"
#include "ehands/fit.h"
#include "ehands/qsp.h"
#include "ehands/statevector.h"
#include "json.hpp"

namespace {

using namespace ehands;

constexpr int kUsage = 1;
constexpr int kDomain = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Where the polynomial comes from: a JSON spec file, raw coefficients, or a
// named target fitted on the fly.
struct SpecSource {
  std::string spec_file;
  std::string target;
  int degree = -1;
  int grid = 201;
  std::vector<double> coeffs;
};

struct LoadedSpec {
  PolySpec spec;
  std::optional<Target> target;
  std::vector<double> custom;
};

void add_spec_options(CLI::App* app, SpecSource& src) {
  app->add_option("--spec", src.spec_file, "PolySpec JSON file (from `fit`)");
  app->add_option("--target", src.target,
                  "relu_halfx, arctan5x, x2_over3, exp2x, gauss9x2 or custom");
  app->add_option("--degree", src.degree, "Polynomial degree");
  app->add_option("--grid", src.grid, "Fit grid points")->capture_default_str();
  app->add_option("--coeffs", src.coeffs, "Raw coefficients, lowest power first")
      ->delimiter(',');
}

LoadedSpec load_spec(const SpecSource& src) {
  LoadedSpec out;
  if (!src.spec_file.empty()) {
    std::ifstream in(src.spec_file);
    if (!in) throw UsageError("cannot read " + src.spec_file);
    nlohmann::json j = nlohmann::json::parse(in);
    out.spec = spec_from_json(j);
    if (j.contains("target")) {
      Target t = target_from_string(j["target"].get<std::string>());
      if (t != Target::Custom) out.target = t;
    }
    return out;
  }
  if (src.target.empty() || src.target == "custom") {
    if (src.coeffs.empty()) throw UsageError("need --spec, --target/--degree or --coeffs");
    if (src.degree >= 0 && src.target == "custom") {
      FitReport r = fit_polynomial(Target::Custom, src.degree, src.grid, src.coeffs);
      out.spec = r.spec;
      out.target = Target::Custom;
      out.custom = src.coeffs;
      return out;
    }
    out.spec = make_spec(src.coeffs);
    return out;
  }
  if (src.degree < 0) throw UsageError("--target needs --degree");
  Target t = target_from_string(src.target);
  out.spec = fit_polynomial(t, src.degree, src.grid).spec;
  out.target = t;
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> read_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::vector<double> v;
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t used = 0;
    double x;
    try {
      x = std::stod(line.substr(b), &used);
    } catch (const std::exception&) {
      throw UsageError("not a number in " + path + ": " + line);
    }
    if (!(std::abs(x) <= 1.0)) throw std::domain_error("value outside [-1, 1] in " + path);
    v.push_back(x);
  }
  return v;
}

const char* connectivity(const std::string& builder) {
  if (builder == "reversible") return "limited";
  if (builder == "nonreversible") return "linear";
  return "tree";
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int cmd_fit(const SpecSource& src, const std::string& out) {
  if (src.target.empty()) throw UsageError("fit needs --target");
  if (src.degree < 0) throw UsageError("fit needs --degree");
  Target t = target_from_string(src.target);
  FitReport r = fit_polynomial(t, src.degree, src.grid, src.coeffs);
  nlohmann::json j = spec_to_json(r.spec);
  j["target"] = to_string(t);
  j["max_abs_err"] = r.max_abs_err;
  j["grid_points"] = r.grid_points;
  write_output(out, j.dump(2) + "\n");
  return 0;
}

struct SweepArgs {
  std::string builder = "reversible";
  int points = 21;
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  double noise = 0.0;
  int workers = 1;
  std::string out;
};

int cmd_sweep(const SpecSource& src, const SweepArgs& a) {
  LoadedSpec ls = load_spec(src);
  Builder b = builder_from_string(a.builder);
  if (a.points < 2) throw UsageError("--points must be >= 2");
  ShotOptions so;
  so.workers = a.workers;
  NoiseModel noise{a.noise};
  std::ostringstream csv;
  csv << "x,ev_exact,ev_shots,sigma,predicted,target\n";
  for (int i = 0; i < a.points; ++i) {
    double x = -1.0 + 2.0 * i / (a.points - 1);
    Circuit c = build(b, ls.spec, x);
    double exact = run_exact(c).ev;
    double target = ls.target ? target_value(*ls.target, x, ls.custom)
                              : horner(ls.spec.raw_coeffs, x);
    csv << num(x) << ',' << num(exact) << ',';
    if (a.shots > 0) {
      EvalResult r = run_shots(c, a.shots, a.seed + static_cast<std::uint64_t>(i), noise, so);
      csv << num(r.ev) << ',' << num(r.sigma) << ',' << num(predict(ls.spec, r.ev));
    } else {
      csv << ",0," << num(predict(ls.spec, exact));
    }
    csv << ',' << num(target) << '\n';
  }
  write_output(a.out, csv.str());
  return 0;
}

int cmd_resources(int degree, const std::string& which) {
  if (degree < 1) throw UsageError("--degree must be >= 1");
  std::vector<std::string> builders;
  if (which == "all")
    builders = {"reversible", "nonreversible", "shallow", "qsp"};
  else
    builders = {which};
  PolySpec s = make_spec(std::vector<double>(degree + 1, 0.5));
  std::printf("%-14s %7s %9s %7s %16s %6s  %s\n", "builder", "qubits", "ancillas", "resets",
              "two_qubit_gates", "depth", "connectivity");
  for (const std::string& name : builders) {
    if (name == "qsp") {
      std::printf("%-14s %7d %9s %7s  ≈ 12d+6 = %d (estimate)\n", "qsp", 3, "-", "-",
                  qsp_resource_estimate(degree));
      continue;
    }
    ResourceReport r = resource_report(build(builder_from_string(name), s, 0.0));
    std::printf("%-14s %7d %9d %7d %16d %6d  %s\n", name.c_str(), r.n_qubits, r.n_ancilla,
                r.n_resets, r.n_two_qubit_gates, r.two_qubit_depth, connectivity(name));
  }
  return 0;
}

int cmd_mse(const std::string& xf, const std::string& yf, std::uint64_t shots,
            std::uint64_t seed) {
  std::vector<double> xs = read_values(xf), ys = read_values(yf);
  if (xs.size() != ys.size()) throw UsageError("x and y files differ in length");
  if (xs.empty()) throw UsageError("empty input vectors");
  double classical = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    classical += (ys[i] - xs[i]) * (ys[i] - xs[i]) / static_cast<double>(xs.size());
  Circuit c = build_mse(xs, ys);
  ResourceReport r = resource_report(c);
  double exact = run_exact(c).ev;
  std::printf("N: %zu\n", xs.size());
  std::printf("classical_mse: %s\n", num(classical).c_str());
  std::printf("exact_mse: %s\n", num(4 * exact).c_str());
  if (shots > 0) {
    EvalResult s = run_shots(c, shots, seed);
    std::printf("shots: %llu\n", static_cast<unsigned long long>(shots));
    std::printf("shot_mse: %s\n", num(4 * s.ev).c_str());
    std::printf("shot_mse_sigma: %s\n", num(4 * s.sigma).c_str());
  }
  std::printf("resources: %d qubits, %d two-qubit gates, depth %d\n", r.n_qubits,
              r.n_two_qubit_gates, r.two_qubit_depth);
  return 0;
}

int cmd_export(const SpecSource& src, const std::string& builder, double x,
               const std::string& format, const std::string& out) {
  LoadedSpec ls = load_spec(src);
  Circuit c = build(builder_from_string(builder), ls.spec, x);
  if (format == "qasm")
    write_output(out, export_qasm(c));
  else if (format == "json")
    write_output(out, circuit_to_json(c).dump(2) + "\n");
  else
    throw UsageError("unknown format: " + format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial evaluation with EHands circuits"};
  app.require_subcommand(1);

  SpecSource fit_src;
  std::string fit_out;
  CLI::App* fit = app.add_subcommand("fit", "Fit a target and print its PolySpec JSON");
  add_spec_options(fit, fit_src);
  fit->add_option("--out", fit_out, "Output file (default stdout)");

  SpecSource sweep_src;
  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a polynomial on an x grid, CSV out");
  add_spec_options(sweep, sweep_src);
  sweep->add_option("--builder", sweep_args.builder, "reversible, nonreversible or shallow")
      ->capture_default_str();
  sweep->add_option("--points", sweep_args.points, "Grid points over [-1, 1]")
      ->capture_default_str();
  sweep->add_option("--shots", sweep_args.shots, "Shots per point, 0 for exact only")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_args.seed, "Seed")->capture_default_str();
  sweep->add_option("--noise", sweep_args.noise, "Two-qubit depolarizing probability")
      ->capture_default_str();
  sweep->add_option("--workers", sweep_args.workers, "Shot worker threads")
      ->capture_default_str();
  sweep->add_option("--out", sweep_args.out, "CSV file (default stdout)");

  int res_degree = 0;
  std::string res_builder = "all";
  CLI::App* res = app.add_subcommand("resources", "Qubit and gate counts for degree d");
  res->add_option("--degree", res_degree, "Polynomial degree")->required();
  res->add_option("--builder", res_builder,
                  "reversible, nonreversible, shallow, qsp or all")
      ->capture_default_str();

  std::string mse_x, mse_y;
  std::uint64_t mse_shots = 0, mse_seed = 1;
  CLI::App* mse = app.add_subcommand("mse", "Mean squared error of two vectors");
  mse->add_option("--x", mse_x, "File with one x value per line")->required();
  mse->add_option("--y", mse_y, "File with one y value per line")->required();
  mse->add_option("--shots", mse_shots, "Shots, 0 for exact only")->capture_default_str();
  mse->add_option("--seed", mse_seed, "Seed")->capture_default_str();

  SpecSource exp_src;
  std::string exp_builder = "reversible", exp_format = "qasm", exp_out;
  double exp_x = 0.0;
  CLI::App* exp = app.add_subcommand("export", "Write the circuit for one x");
  add_spec_options(exp, exp_src);
  exp->add_option("--builder", exp_builder, "reversible, nonreversible or shallow")
      ->capture_default_str();
  exp->add_option("--x", exp_x, "Input value")->required();
  exp->add_option("--format", exp_format, "qasm or json")->capture_default_str();
  exp->add_option("--out", exp_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*fit) return cmd_fit(fit_src, fit_out);
    if (*sweep) return cmd_sweep(sweep_src, sweep_args);
    if (*res) return cmd_resources(res_degree, res_builder);
    if (*mse) return cmd_mse(mse_x, mse_y, mse_shots, mse_seed);
    if (*exp) return cmd_export(exp_src, exp_builder, exp_x, exp_format, exp_out);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
