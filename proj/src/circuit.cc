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

#include "ehands/circuit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ehands/rng.h"

namespace ehands {

namespace {

struct KindName {
  GateKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {GateKind::Ry, "ry"},       {GateKind::Rz, "rz"},
    {GateKind::X, "x"},         {GateKind::H, "h"},
    {GateKind::Sdg, "sdg"},     {GateKind::CNOT, "cx"},
    {GateKind::CZ, "cz"},       {GateKind::Reset, "reset"},
    {GateKind::MeasureZ, "measure"}, {GateKind::Controlled, "controlled"},
};

Gate one(GateKind k, int q) {
  Gate g;
  g.kind = k;
  g.qubits[0] = q;
  g.arity = 1;
  return g;
}

Gate two(GateKind k, int a, int b) {
  Gate g;
  g.kind = k;
  g.qubits[0] = a;
  g.qubits[1] = b;
  g.arity = 2;
  return g;
}

void check_gate(const Gate& g, int n) {
  int expect = 1;
  switch (g.kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
      expect = 2;
      break;
    case GateKind::Controlled:
      if (g.arity < 2 || g.arity > 3)
        throw std::invalid_argument("controlled gate needs 1 or 2 controls");
      expect = g.arity;
      break;
    default:
      break;
  }
  if (g.arity != expect)
    throw std::invalid_argument(std::string("wrong qubit count for ") +
                                to_string(g.kind));
  for (int i = 0; i < g.arity; ++i) {
    if (g.qubits[i] < 0 || g.qubits[i] >= n)
      throw std::invalid_argument("qubit index out of range");
    for (int j = 0; j < i; ++j)
      if (g.qubits[i] == g.qubits[j])
        throw std::invalid_argument("repeated qubit index in gate");
  }
  if (!std::isfinite(g.angle))
    throw std::invalid_argument("gate angle is not finite");
}

}  // namespace

const char* to_string(GateKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "?";
}

const char* to_string(Basis b) {
  switch (b) {
    case Basis::X:
      return "X";
    case Basis::Y:
      return "Y";
    case Basis::Z:
      return "Z";
  }
  return "?";
}

const char* to_string(Role r) {
  switch (r) {
    case Role::None:
      return "none";
    case Role::Data:
      return "data";
    case Role::Coeff:
      return "coeff";
    case Role::Ancilla:
      return "ancilla";
  }
  return "?";
}

GateKind gate_kind_from_string(const std::string& s) {
  for (const auto& kn : kKindNames)
    if (s == kn.name) return kn.kind;
  throw std::invalid_argument("unknown gate kind: " + s);
}

Basis basis_from_string(const std::string& s) {
  if (s == "X" || s == "x") return Basis::X;
  if (s == "Y" || s == "y") return Basis::Y;
  if (s == "Z" || s == "z") return Basis::Z;
  throw std::invalid_argument("unknown basis: " + s);
}

Role role_from_string(const std::string& s) {
  for (Role r : {Role::None, Role::Data, Role::Coeff, Role::Ancilla})
    if (s == to_string(r)) return r;
  throw std::invalid_argument("unknown role: " + s);
}

Gate Gate::ry(int q, double theta) {
  Gate g = one(GateKind::Ry, q);
  g.angle = theta;
  return g;
}
Gate Gate::rz(int q, double phi) {
  Gate g = one(GateKind::Rz, q);
  g.angle = phi;
  return g;
}
Gate Gate::x(int q) { return one(GateKind::X, q); }
Gate Gate::h(int q) { return one(GateKind::H, q); }
Gate Gate::sdg(int q) { return one(GateKind::Sdg, q); }
Gate Gate::cnot(int c, int t) { return two(GateKind::CNOT, c, t); }
Gate Gate::cz(int a, int b) { return two(GateKind::CZ, a, b); }
Gate Gate::reset(int q) { return one(GateKind::Reset, q); }
Gate Gate::measure(int q) { return one(GateKind::MeasureZ, q); }

Gate Gate::controlled(const std::vector<int>& controls, int target,
                      const Mat2& u, unsigned neg_controls) {
  if (controls.empty() || controls.size() > 2)
    throw std::invalid_argument("controlled gate needs 1 or 2 controls");
  Gate g;
  g.kind = GateKind::Controlled;
  g.arity = static_cast<int>(controls.size()) + 1;
  for (std::size_t i = 0; i < controls.size(); ++i) g.qubits[i] = controls[i];
  g.qubits[controls.size()] = target;
  g.matrix = u;
  g.neg_controls = neg_controls;
  return g;
}

bool operator==(const Gate& a, const Gate& b) {
  return a.kind == b.kind && a.arity == b.arity && a.qubits == b.qubits &&
         a.angle == b.angle && a.matrix == b.matrix &&
         a.neg_controls == b.neg_controls;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("circuit needs >= 1 qubit");
  roles_.assign(n_qubits, Role::None);
}

int Circuit::add_qubit(Role role) {
  roles_.push_back(role);
  return n_qubits_++;
}

void Circuit::set_role(int q, Role role) {
  if (q < 0 || q >= n_qubits_) throw std::invalid_argument("bad qubit");
  roles_[q] = role;
}

void Circuit::set_output(int q, Basis basis) {
  if (q < 0 || q >= n_qubits_) throw std::invalid_argument("bad output qubit");
  output_qubit_ = q;
  output_basis_ = basis;
}

Circuit& Circuit::add(const Gate& g) {
  check_gate(g, n_qubits_);
  if (!gates_.empty() && gates_.back().kind == GateKind::MeasureZ)
    throw std::invalid_argument("no gates may follow the measurement");
  gates_.push_back(g);
  return *this;
}

void Circuit::validate() const {
  if (output_qubit_ < 0 || output_qubit_ >= n_qubits_)
    throw std::invalid_argument("bad output qubit");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    check_gate(gates_[i], n_qubits_);
    if (gates_[i].kind == GateKind::MeasureZ && i + 1 != gates_.size())
      throw std::invalid_argument("measurement must be the last gate");
  }
}

std::vector<Gate> Circuit::gates_with_readout() const {
  std::vector<Gate> out;
  out.reserve(gates_.size() + 2);
  for (const Gate& g : gates_)
    if (g.kind != GateKind::MeasureZ) out.push_back(g);
  if (output_basis_ == Basis::Y) out.push_back(Gate::sdg(output_qubit_));
  if (output_basis_ != Basis::Z) out.push_back(Gate::h(output_qubit_));
  return out;
}

bool operator==(const ResourceReport& a, const ResourceReport& b) {
  return a.n_qubits == b.n_qubits && a.n_ancilla == b.n_ancilla &&
         a.n_resets == b.n_resets &&
         a.n_two_qubit_gates == b.n_two_qubit_gates &&
         a.two_qubit_depth == b.two_qubit_depth;
}

ResourceReport resource_report(const Circuit& c) {
  ResourceReport r;
  if (c.gates().empty()) return r;
  r.n_qubits = c.n_qubits();
  r.n_ancilla = static_cast<int>(
      std::count(c.roles().begin(), c.roles().end(), Role::Ancilla));
  std::vector<int> level(c.n_qubits(), 0);
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Reset) ++r.n_resets;
    if (!g.is_two_qubit()) continue;
    ++r.n_two_qubit_gates;
    int l = std::max(level[g.qubits[0]], level[g.qubits[1]]) + 1;
    level[g.qubits[0]] = level[g.qubits[1]] = l;
    r.two_qubit_depth = std::max(r.two_qubit_depth, l);
  }
  return r;
}

namespace {

// Pauli as (x, z) bits: I=00, X=10, Z=01, Y=11.
void append_pauli(std::vector<Gate>& out, int q, int x, int z) {
  if (x && z)
    out.push_back(Gate::ry(q, std::numbers::pi));
  else if (x)
    out.push_back(Gate::x(q));
  else if (z)
    out.push_back(Gate::rz(q, std::numbers::pi));
}

}  // namespace

Circuit pauli_twirl(const Circuit& c, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Circuit out(c.n_qubits());
  for (int q = 0; q < c.n_qubits(); ++q) out.set_role(q, c.role(q));
  std::vector<Gate> buf;
  for (const Gate& g : c.gates()) {
    if (g.kind != GateKind::CNOT) {
      out.add(g);
      continue;
    }
    int k = static_cast<int>(rng.below(16));
    int xc = (k >> 3) & 1, zc = (k >> 2) & 1, xt = (k >> 1) & 1, zt = k & 1;
    int a = g.qubits[0], b = g.qubits[1];
    buf.clear();
    append_pauli(buf, a, xc, zc);
    append_pauli(buf, b, xt, zt);
    buf.push_back(g);
    // CNOT maps X_c -> X_c X_t and Z_t -> Z_c Z_t.
    append_pauli(buf, a, xc, zc ^ zt);
    append_pauli(buf, b, xt ^ xc, zt);
    for (const Gate& h : buf) out.add(h);
  }
  out.set_output(c.output_qubit(), c.output_basis());
  return out;
}

std::string format_angle(double theta) {
  if (theta == 0.0) return "0";
  for (int m : {1, 2, 3, 4, 6, 8, 12, 16}) {
    double k = theta * m / std::numbers::pi;
    double kr = std::round(k);
    if (kr == 0.0 || std::abs(k - kr) > 1e-12 || std::abs(kr) > 64 * m)
      continue;
    long num = static_cast<long>(kr);
    long den = m;
    long g = std::gcd(std::labs(num), den);
    num /= g;
    den /= g;
    std::string s = num < 0 ? "-" : "";
    if (std::labs(num) != 1) s += std::to_string(std::labs(num)) + "*";
    s += "pi";
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

namespace {

// u = e^{i gamma} U(theta, phi, lambda) in the OpenQASM 3 convention.
void zyz(const Mat2& u, double& gamma, double& theta, double& phi,
         double& lambda) {
  double a = std::abs(u[0]), b = std::abs(u[2]);
  theta = 2.0 * std::atan2(b, a);
  if (a > 1e-12 && b > 1e-12) {
    gamma = std::arg(u[0]);
    phi = std::arg(u[2]) - gamma;
    lambda = std::arg(-u[1]) - gamma;
  } else if (b <= 1e-12) {
    gamma = std::arg(u[0]);
    phi = 0.0;
    lambda = std::arg(u[3]) - gamma;
  } else {
    gamma = 0.0;
    phi = std::arg(u[2]);
    lambda = std::arg(-u[1]);
  }
}

std::string qref(int q) { return "q[" + std::to_string(q) + "]"; }

}  // namespace

std::string export_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
  os << "qubit[" << c.n_qubits() << "] q;\nbit[1] c;\n";
  for (const Gate& g : c.gates_with_readout()) {
    switch (g.kind) {
      case GateKind::Ry:
        os << "ry(" << format_angle(g.angle) << ") " << qref(g.qubits[0]);
        break;
      case GateKind::Rz:
        os << "rz(" << format_angle(g.angle) << ") " << qref(g.qubits[0]);
        break;
      case GateKind::X:
      case GateKind::H:
      case GateKind::Sdg:
      case GateKind::Reset:
        os << to_string(g.kind) << " " << qref(g.qubits[0]);
        break;
      case GateKind::CNOT:
      case GateKind::CZ:
        os << to_string(g.kind) << " " << qref(g.qubits[0]) << ", "
           << qref(g.qubits[1]);
        break;
      case GateKind::Controlled: {
        double gamma, theta, phi, lambda;
        zyz(g.matrix, gamma, theta, phi, lambda);
        std::string mods, ctrls;
        for (int i = 0; i + 1 < g.arity; ++i) {
          mods += (g.neg_controls >> i) & 1 ? "negctrl @ " : "ctrl @ ";
          ctrls += qref(g.qubits[i]) + ", ";
        }
        os << mods << "U(" << format_angle(theta) << ", " << format_angle(phi)
           << ", " << format_angle(lambda) << ") " << ctrls
           << qref(g.target()) << ";\n";
        // Controlled global phase, applied on the last control.
        std::string pmods, pctrls;
        for (int i = 0; i + 2 < g.arity; ++i) {
          pmods += (g.neg_controls >> i) & 1 ? "negctrl @ " : "ctrl @ ";
          pctrls += qref(g.qubits[i]) + ", ";
        }
        int last = g.arity - 2;
        if ((g.neg_controls >> last) & 1) {
          os << "x " << qref(g.qubits[last]) << ";\n";
          os << pmods << "p(" << format_angle(gamma) << ") " << pctrls
             << qref(g.qubits[last]) << ";\n";
          os << "x " << qref(g.qubits[last]);
        } else {
          os << pmods << "p(" << format_angle(gamma) << ") " << pctrls
             << qref(g.qubits[last]);
        }
        break;
      }
      case GateKind::MeasureZ:
        break;
    }
    os << ";\n";
  }
  os << "c[0] = measure " << qref(c.output_qubit()) << ";\n";
  return os.str();
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates()) {
    nlohmann::json jg;
    jg["kind"] = to_string(g.kind);
    jg["qubits"] = std::vector<int>(g.qubits.begin(), g.qubits.begin() + g.arity);
    if (g.has_angle()) jg["angle"] = g.angle;
    if (g.kind == GateKind::Controlled) {
      nlohmann::json m = nlohmann::json::array();
      for (const cplx& z : g.matrix) m.push_back({z.real(), z.imag()});
      jg["matrix"] = m;
      jg["neg_controls"] = g.neg_controls;
    }
    gates.push_back(jg);
  }
  nlohmann::json roles = nlohmann::json::array();
  for (Role r : c.roles()) roles.push_back(to_string(r));
  return {{"n_qubits", c.n_qubits()},
          {"output", {{"qubit", c.output_qubit()},
                      {"basis", to_string(c.output_basis())}}},
          {"labels", roles},
          {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c(j.at("n_qubits").get<int>());
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    for (int q = 0; q < c.n_qubits() && q < static_cast<int>(labels.size()); ++q)
      c.set_role(q, role_from_string(labels[q].get<std::string>()));
  }
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_string(jg.at("kind").get<std::string>());
    auto qs = jg.at("qubits").get<std::vector<int>>();
    if (qs.empty() || qs.size() > 3)
      throw std::invalid_argument("bad qubit list in gate");
    g.arity = static_cast<int>(qs.size());
    std::copy(qs.begin(), qs.end(), g.qubits.begin());
    if (jg.contains("angle")) g.angle = jg.at("angle").get<double>();
    if (g.kind == GateKind::Controlled) {
      const auto& m = jg.at("matrix");
      for (int i = 0; i < 4; ++i)
        g.matrix[i] = cplx(m.at(i).at(0).get<double>(), m.at(i).at(1).get<double>());
      g.neg_controls = jg.value("neg_controls", 0u);
    }
    c.add(g);
  }
  const auto& o = j.at("output");
  c.set_output(o.at("qubit").get<int>(),
               basis_from_string(o.at("basis").get<std::string>()));
  return c;
}

}  // namespace ehands
