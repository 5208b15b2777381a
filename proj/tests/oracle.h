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

// Dense density-matrix reference, written from the textbook gate
// definitions rather than the engine's kernels. Small circuits only.

#ifndef EHANDS_TESTS_ORACLE_H_
#define EHANDS_TESTS_ORACLE_H_

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "ehands/circuit.h"

namespace oracle {

using M = Eigen::MatrixXcd;
using C = std::complex<double>;

inline M m2(C a, C b, C c, C d) {
  M m(2, 2);
  m << a, b, c, d;
  return m;
}

inline M kron(const M& a, const M& b) {
  M r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

// Embeds per-qubit factors; qubit 0 is the leftmost tensor factor.
inline M embed(int n, const std::vector<std::pair<int, M>>& ops) {
  M r = M::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    M f = M::Identity(2, 2);
    for (const auto& [k, m] : ops)
      if (k == q) f = m;
    r = kron(r, f);
  }
  return r;
}

inline M single(const ehands::Gate& g) {
  using ehands::GateKind;
  const C i(0, 1);
  double t = g.angle;
  switch (g.kind) {
    case GateKind::Ry:
      return m2(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
    case GateKind::Rz:
      return m2(std::exp(-i * t / 2.0), 0, 0, std::exp(i * t / 2.0));
    case GateKind::X:
      return m2(0, 1, 1, 0);
    case GateKind::H:
      return m2(1, 1, 1, -1) / std::sqrt(2.0);
    case GateKind::Sdg:
      return m2(1, 0, 0, -i);
    default:
      throw std::logic_error("not a single-qubit gate");
  }
}

inline M unitary(int n, const ehands::Gate& g) {
  using ehands::GateKind;
  M p0 = m2(1, 0, 0, 0), p1 = m2(0, 0, 0, 1);
  switch (g.kind) {
    case GateKind::CNOT:
      return embed(n, {{g.qubits[0], p0}}) +
             embed(n, {{g.qubits[0], p1}, {g.qubits[1], m2(0, 1, 1, 0)}});
    case GateKind::CZ:
      return embed(n, {}) - 2.0 * embed(n, {{g.qubits[0], p1}, {g.qubits[1], p1}});
    case GateKind::Controlled: {
      std::vector<std::pair<int, M>> on;
      for (int k = 0; k + 1 < g.arity; ++k)
        on.push_back({g.qubits[k], ((g.neg_controls >> k) & 1) ? p0 : p1});
      M proj = embed(n, on);
      auto withu = on;
      const auto& u = g.matrix;
      withu.push_back({g.target(), m2(u[0], u[1], u[2], u[3])});
      return embed(n, {}) - proj + embed(n, withu);
    }
    default:
      return embed(n, {{g.qubits[0], single(g)}});
  }
}

// Exact output expectation by density-matrix evolution.
inline double expectation(const ehands::Circuit& c) {
  int n = c.n_qubits();
  int dim = 1 << n;
  M rho = M::Zero(dim, dim);
  rho(0, 0) = 1.0;
  for (const auto& g : c.gates_with_readout()) {
    if (g.kind == ehands::GateKind::Reset) {
      M k0 = embed(n, {{g.qubits[0], m2(1, 0, 0, 0)}});
      M k1 = embed(n, {{g.qubits[0], m2(0, 1, 0, 0)}});
      rho = k0 * rho * k0.adjoint() + k1 * rho * k1.adjoint();
      continue;
    }
    M u = unitary(n, g);
    rho = u * rho * u.adjoint();
  }
  M z = embed(n, {{c.output_qubit(), m2(1, 0, 0, -1)}});
  return (rho * z).trace().real();
}

// Random circuit over the full gate set (resets optional).
inline ehands::Circuit random_circuit(std::mt19937_64& rng, int n, int n_gates,
                                      bool resets) {
  std::uniform_int_distribution<int> kind(0, resets ? 7 : 6);
  std::uniform_int_distribution<int> qd(0, n - 1);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  ehands::Circuit c(n);
  for (int q = 0; q < n; ++q) c.ry(q, ang(rng));
  for (int k = 0; k < n_gates; ++k) {
    int q = qd(rng);
    int r = qd(rng);
    if (n > 1)
      while (r == q) r = qd(rng);
    switch (kind(rng)) {
      case 0: c.ry(q, ang(rng)); break;
      case 1: c.rz(q, ang(rng)); break;
      case 2: c.x(q); break;
      case 3: c.h(q); break;
      case 4: c.sdg(q); break;
      case 5: if (n > 1) c.cnot(q, r); break;
      case 6: if (n > 1) c.cz(q, r); break;
      case 7: c.reset(q); break;
    }
  }
  c.set_output(qd(rng));
  return c;
}

}  // namespace oracle

#endif  // EHANDS_TESTS_ORACLE_H_
