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

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <sstream>

#include "ehands/compiler.h"
#include "ehands/qsp.h"
#include "ehands/statevector.h"
#include "oracle.h"

using namespace ehands;

namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream is(text);
  std::string line;
  int n = 0;
  while (std::getline(is, line))
    if (line.find(needle) != std::string::npos) ++n;
  return n;
}

std::vector<std::string> lines(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Circuit, NewCircuitDefaults) {
  for (int n : {1, 5, 12}) {
    Circuit c(n);
    EXPECT_EQ(c.n_qubits(), n);
    EXPECT_TRUE(c.gates().empty());
    EXPECT_EQ(c.output_qubit(), 0);
    EXPECT_EQ(c.output_basis(), Basis::Z);
  }
  EXPECT_THROW(Circuit(0), std::invalid_argument);
}

TEST(Circuit, GateInvariants) {
  Circuit c(3);
  EXPECT_THROW(c.cnot(1, 1), std::invalid_argument);
  EXPECT_THROW(c.cz(0, 3), std::invalid_argument);
  EXPECT_THROW(c.ry(-1, 0.1), std::invalid_argument);
  EXPECT_THROW(c.ry(0, std::nan("")), std::invalid_argument);
  EXPECT_THROW(c.set_output(3), std::invalid_argument);
  Gate bad = Gate::x(0);
  bad.arity = 2;
  bad.qubits[1] = 1;
  EXPECT_THROW(c.add(bad), std::invalid_argument);
  c.measure(2);
  EXPECT_THROW(c.x(0), std::invalid_argument);
  EXPECT_THROW(c.measure(2), std::invalid_argument);
}

TEST(Circuit, AddQubitGrowsRoles) {
  Circuit c(1);
  int q = c.add_qubit(Role::Ancilla);
  EXPECT_EQ(q, 1);
  EXPECT_EQ(c.n_qubits(), 2);
  EXPECT_EQ(c.role(1), Role::Ancilla);
  EXPECT_EQ(c.role(0), Role::None);
}

TEST(ResourceReport, EmptyIsZero) {
  EXPECT_EQ(resource_report(Circuit(4)), ResourceReport{});
}

TEST(ResourceReport, GreedyLayering) {
  Circuit c(4);
  c.set_role(3, Role::Ancilla);
  c.cnot(0, 1).cz(2, 3).h(1).cnot(1, 2).reset(0).cnot(0, 3);
  ResourceReport r = resource_report(c);
  EXPECT_EQ(r.n_qubits, 4);
  EXPECT_EQ(r.n_ancilla, 1);
  EXPECT_EQ(r.n_resets, 1);
  EXPECT_EQ(r.n_two_qubit_gates, 4);
  // Layers: {01, 23}, {12, 03}.
  EXPECT_EQ(r.two_qubit_depth, 2);
}

TEST(ResourceReport, DepthNeverExceedsCount) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Circuit c = oracle::random_circuit(rng, 1 + k % 6, 30, true);
    ResourceReport r = resource_report(c);
    EXPECT_LE(r.two_qubit_depth, r.n_two_qubit_gates);
  }
}

TEST(PauliTwirl, PreservesExactExpectation) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    Circuit c = oracle::random_circuit(rng, 2 + k % 5, 25, k % 2 == 1);
    Circuit t = pauli_twirl(c, 1000 + k);
    double want = oracle::expectation(c);
    EXPECT_NEAR(run_exact(t).ev, want, 1e-9);
    EXPECT_NEAR(oracle::expectation(t), want, 1e-9);
  }
}

TEST(PauliTwirl, UnitaryUpToGlobalPhase) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    Circuit c = oracle::random_circuit(rng, 3, 20, false);
    Circuit t = pauli_twirl(c, k);
    auto u = circuit_unitary(c), v = circuit_unitary(t);
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) overlap += std::conj(u[i]) * v[i];
    EXPECT_NEAR(std::abs(overlap), 8.0, 1e-9);
  }
}

TEST(PauliTwirl, NoCnotMeansNoChange) {
  Circuit c(2);
  c.ry(0, 0.3).cz(0, 1).h(1);
  Circuit t = pauli_twirl(c, 7);
  EXPECT_EQ(t.gates().size(), c.gates().size());
}

TEST(PauliTwirl, SeedsGiveDifferentGateLists) {
  Circuit c(3);
  for (int k = 0; k < 6; ++k) c.ry(k % 3, 0.1 * k + 0.2).cnot(k % 3, (k + 1) % 3);
  Circuit a = pauli_twirl(c, 1), b = pauli_twirl(c, 2);
  EXPECT_NE(a.gates(), b.gates());
  EXPECT_NEAR(run_exact(a).ev, run_exact(b).ev, 1e-12);
  EXPECT_EQ(pauli_twirl(c, 1).gates(), a.gates());
}

TEST(Qasm, SingleRotation) {
  Circuit c(1);
  c.ry(0, std::numbers::pi / 2);
  std::string q = export_qasm(c);
  EXPECT_EQ(count_lines_with(q, "ry(pi/2)"), 1);
  EXPECT_EQ(lines(q).front(), "OPENQASM 3.0;");
  EXPECT_EQ(lines(q).back(), "c[0] = measure q[0];");
}

TEST(Qasm, NonReversibleResets) {
  Circuit c = build_nonreversible(make_spec({0.2, -0.5, 0.7}), 0.3);
  std::string q = export_qasm(c);
  EXPECT_EQ(count_lines_with(q, "reset "), 3);
  EXPECT_EQ(q, export_qasm(c));
}

TEST(Qasm, BasisChangeBeforeMeasure) {
  Circuit c(2);
  c.ry(1, 0.4);
  c.set_output(1, Basis::X);
  auto l = lines(export_qasm(c));
  ASSERT_GE(l.size(), 2u);
  EXPECT_EQ(l[l.size() - 2], "h q[1];");
  c.set_output(1, Basis::Y);
  l = lines(export_qasm(c));
  EXPECT_EQ(l[l.size() - 3], "sdg q[1];");
  EXPECT_EQ(l[l.size() - 2], "h q[1];");
  EXPECT_EQ(l.back(), "c[0] = measure q[1];");
}

TEST(Qasm, ControlledBlocksUseModifiers) {
  Circuit c = lcu_circuit({{0.1, 0.2, 0.3}}, {{0.4, 0.5}}, 0.3);
  std::string q = export_qasm(c);
  EXPECT_GT(count_lines_with(q, "negctrl @ ctrl @ U("), 0);
  EXPECT_GT(count_lines_with(q, "ctrl @ ctrl @ U("), 0);
}

TEST(Qasm, AngleFormatting) {
  EXPECT_EQ(format_angle(0.0), "0");
  EXPECT_EQ(format_angle(std::numbers::pi), "pi");
  EXPECT_EQ(format_angle(-std::numbers::pi / 4), "-pi/4");
  EXPECT_EQ(format_angle(3 * std::numbers::pi / 4), "3*pi/4");
  EXPECT_EQ(format_angle(std::numbers::pi / 3), "pi/3");
  EXPECT_EQ(std::stod(format_angle(0.123456789)), 0.123456789);
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    Circuit c = oracle::random_circuit(rng, 4, 20, true);
    c.set_role(2, Role::Ancilla);
    c.set_output(1, Basis::Y);
    Circuit back = circuit_from_json(nlohmann::json::parse(circuit_to_json(c).dump()));
    EXPECT_EQ(back.gates(), c.gates());
    EXPECT_EQ(back.roles(), c.roles());
    EXPECT_EQ(back.output_qubit(), 1);
    EXPECT_EQ(back.output_basis(), Basis::Y);
  }
  Circuit h = hadamard_test_circuit({{0.3, -0.2}}, 0.6);
  Circuit back = circuit_from_json(circuit_to_json(h));
  EXPECT_EQ(back.gates(), h.gates());
}

TEST(Json, GateFields) {
  Circuit c(2);
  c.ry(0, 0.5).cnot(0, 1);
  auto j = circuit_to_json(c);
  EXPECT_EQ(j["gates"][0]["kind"], "ry");
  EXPECT_EQ(j["gates"][0]["angle"], 0.5);
  EXPECT_EQ(j["gates"][1]["kind"], "cx");
  EXPECT_EQ(j["gates"][1]["qubits"], nlohmann::json({0, 1}));
  EXPECT_FALSE(j["gates"][1].contains("angle"));
}
