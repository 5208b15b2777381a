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

#ifndef EHANDS_CIRCUIT_H_
#define EHANDS_CIRCUIT_H_

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ehands {

using cplx = std::complex<double>;

// Row-major 2x2 matrix.
using Mat2 = std::array<cplx, 4>;

enum class GateKind { Ry, Rz, X, H, Sdg, CNOT, CZ, Reset, MeasureZ, Controlled };

enum class Basis { X, Y, Z };

enum class Role { None, Data, Coeff, Ancilla };

const char* to_string(GateKind k);
const char* to_string(Basis b);
const char* to_string(Role r);
GateKind gate_kind_from_string(const std::string& s);
Basis basis_from_string(const std::string& s);
Role role_from_string(const std::string& s);

struct Gate {
  GateKind kind = GateKind::X;
  // Controls first, target last for Controlled.
  std::array<int, 3> qubits{-1, -1, -1};
  int arity = 0;
  double angle = 0.0;
  // Controlled only.
  Mat2 matrix{};
  // Bit i set means control i fires on |0>.
  unsigned neg_controls = 0;

  static Gate ry(int q, double theta);
  static Gate rz(int q, double phi);
  static Gate x(int q);
  static Gate h(int q);
  static Gate sdg(int q);
  static Gate cnot(int control, int target);
  static Gate cz(int a, int b);
  static Gate reset(int q);
  static Gate measure(int q);
  static Gate controlled(const std::vector<int>& controls, int target,
                         const Mat2& u, unsigned neg_controls = 0);

  int target() const { return qubits[arity - 1]; }
  bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ;
  }
  bool has_angle() const {
    return kind == GateKind::Ry || kind == GateKind::Rz;
  }
};

bool operator==(const Gate& a, const Gate& b);

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  int output_qubit() const { return output_qubit_; }
  Basis output_basis() const { return output_basis_; }
  const std::vector<Role>& roles() const { return roles_; }
  Role role(int q) const { return roles_.at(q); }

  // Appends a fresh |0> wire and returns its index.
  int add_qubit(Role role = Role::None);
  void set_role(int q, Role role);
  void set_output(int q, Basis basis = Basis::Z);

  // Throws std::invalid_argument if g breaks the gate or circuit invariants.
  Circuit& add(const Gate& g);

  Circuit& ry(int q, double theta) { return add(Gate::ry(q, theta)); }
  Circuit& rz(int q, double phi) { return add(Gate::rz(q, phi)); }
  Circuit& x(int q) { return add(Gate::x(q)); }
  Circuit& h(int q) { return add(Gate::h(q)); }
  Circuit& sdg(int q) { return add(Gate::sdg(q)); }
  Circuit& cnot(int c, int t) { return add(Gate::cnot(c, t)); }
  Circuit& cz(int a, int b) { return add(Gate::cz(a, b)); }
  Circuit& reset(int q) { return add(Gate::reset(q)); }
  Circuit& measure(int q) { return add(Gate::measure(q)); }

  void validate() const;

  // Gates plus the change of basis for the output, without the final measure.
  std::vector<Gate> gates_with_readout() const;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
  int output_qubit_ = 0;
  Basis output_basis_ = Basis::Z;
  std::vector<Role> roles_;
};

struct ResourceReport {
  int n_qubits = 0;
  int n_ancilla = 0;
  int n_resets = 0;
  int n_two_qubit_gates = 0;
  int two_qubit_depth = 0;
};

bool operator==(const ResourceReport& a, const ResourceReport& b);

ResourceReport resource_report(const Circuit& c);

// Wraps every CNOT in a Pauli pair from the 16-element twirling set.
Circuit pauli_twirl(const Circuit& c, std::uint64_t seed);

std::string export_qasm(const Circuit& c);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

// "pi/2", "-3*pi/4", or a %.17g literal.
std::string format_angle(double theta);

}  // namespace ehands

#endif  // EHANDS_CIRCUIT_H_
