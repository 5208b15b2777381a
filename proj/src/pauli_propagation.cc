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

#include "ehands/pauli_propagation.h"

#include <array>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ehands/statevector.h"

namespace ehands {

namespace {

// Per-qubit Pauli code: 0=I, 1=X, 2=Y, 3=Z.
using Mat4 = std::array<cplx, 16>;

struct Key {
  std::uint64_t x[2] = {0, 0};
  std::uint64_t z[2] = {0, 0};

  int get(int q) const {
    int w = q >> 6, b = q & 63;
    int xb = (x[w] >> b) & 1, zb = (z[w] >> b) & 1;
    return xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
  }
  void set(int q, int p) {
    int w = q >> 6, b = q & 63;
    std::uint64_t m = std::uint64_t{1} << b;
    x[w] &= ~m;
    z[w] &= ~m;
    if (p == 1 || p == 2) x[w] |= m;
    if (p == 2 || p == 3) z[w] |= m;
  }
  bool operator==(const Key& o) const {
    return x[0] == o.x[0] && x[1] == o.x[1] && z[0] == o.z[0] && z[1] == o.z[1];
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = k.x[0] * 0x9E3779B97F4A7C15ULL;
    h ^= k.z[0] + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= k.x[1] + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
    h ^= k.z[1] + 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using Terms = std::unordered_map<Key, double, KeyHash>;

const Mat2& pauli(int p) {
  static const Mat2 kP[4] = {{1.0, 0.0, 0.0, 1.0},
                             {0.0, 1.0, 1.0, 0.0},
                             {0.0, cplx(0, -1), cplx(0, 1), 0.0},
                             {1.0, 0.0, 0.0, -1.0}};
  return kP[p];
}

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 dagger(const Mat2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

// r[a][b]: coefficient of P_a in U^dagger P_b U.
std::array<std::array<double, 4>, 4> transfer1(const Mat2& u) {
  std::array<std::array<double, 4>, 4> r{};
  Mat2 ud = dagger(u);
  for (int b = 0; b < 4; ++b) {
    Mat2 m = mul(ud, mul(pauli(b), u));
    for (int a = 0; a < 4; ++a) {
      Mat2 t = mul(pauli(a), m);
      r[a][b] = 0.5 * (t[0] + t[3]).real();
    }
  }
  return r;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 k;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) k[i * 4 + j] = a[(i >> 1) * 2 + (j >> 1)] * b[(i & 1) * 2 + (j & 1)];
  return k;
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
  return c;
}

// Index a*4+b over (first qubit, second qubit) Pauli pairs.
std::array<std::array<double, 16>, 16> transfer2(const Mat4& u) {
  std::array<std::array<double, 16>, 16> r{};
  Mat4 ud;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ud[i * 4 + j] = std::conj(u[j * 4 + i]);
  for (int b = 0; b < 16; ++b) {
    Mat4 m = mul4(ud, mul4(kron(pauli(b >> 2), pauli(b & 3)), u));
    for (int a = 0; a < 16; ++a) {
      Mat4 t = mul4(kron(pauli(a >> 2), pauli(a & 3)), m);
      r[a][b] = 0.25 * (t[0] + t[5] + t[10] + t[15]).real();
    }
  }
  return r;
}

const std::array<std::array<double, 16>, 16>& cnot_transfer() {
  static const auto r = transfer2({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
  return r;
}

const std::array<std::array<double, 16>, 16>& cz_transfer() {
  static const auto r = transfer2({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
  return r;
}

void add_term(Terms& t, const Key& k, double v) {
  auto [it, fresh] = t.try_emplace(k, v);
  if (!fresh) it->second += v;
}

}  // namespace

double pauli_expectation(const Circuit& c, double drop, PauliStats* stats) {
  int n = c.n_qubits();
  if (n > 128) throw std::invalid_argument("Pauli backend supports <= 128 qubits");
  std::vector<Gate> gates = c.gates_with_readout();
  const std::size_t none = gates.size();

  // First entangling or reset gate per qubit; earlier gates form its prefix.
  std::vector<std::size_t> first(n, none);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::Controlled)
      throw std::invalid_argument("Pauli backend does not take controlled blocks");
    if (g.arity == 2 || g.kind == GateKind::Reset)
      for (int k = 0; k < g.arity; ++k)
        if (first[g.qubits[k]] == none) first[g.qubits[k]] = i;
  }

  std::vector<std::array<double, 4>> bloch(n);
  std::vector<bool> local(gates.size(), false);
  for (int q = 0; q < n; ++q) {
    Mat2 psi_u = {1.0, 0.0, 0.0, 1.0};
    for (std::size_t i = 0; i < first[q]; ++i) {
      const Gate& g = gates[i];
      if (g.arity == 1 && g.qubits[0] == q) {
        psi_u = mul(gate_matrix(g), psi_u);
        local[i] = true;
      }
    }
    cplx a0 = psi_u[0], a1 = psi_u[2];
    bloch[q] = {1.0, 2.0 * (std::conj(a0) * a1).real(),
                2.0 * (std::conj(a0) * a1).imag(),
                std::norm(a0) - std::norm(a1)};
  }

  int out = c.output_qubit();
  if (first[out] == none) return bloch[out][3];

  std::vector<std::vector<int>> absorb_at(gates.size());
  for (int q = 0; q < n; ++q)
    if (first[q] != none) absorb_at[first[q]].push_back(q);

  Terms terms, next;
  Key start;
  start.set(out, 3);
  terms.emplace(start, 1.0);
  std::size_t max_terms = 1;

  for (std::size_t i = gates.size(); i-- > 0;) {
    if (local[i]) continue;
    const Gate& g = gates[i];
    next.clear();
    if (g.kind == GateKind::Reset || g.kind == GateKind::MeasureZ) {
      int q = g.qubits[0];
      bool reset = g.kind == GateKind::Reset;
      for (const auto& [k, v] : terms) {
        int p = k.get(q);
        if (p == 1 || p == 2) continue;
        Key kk = k;
        if (reset) kk.set(q, 0);
        add_term(next, kk, v);
      }
    } else if (g.arity == 2) {
      const auto& r = g.kind == GateKind::CNOT ? cnot_transfer() : cz_transfer();
      int a = g.qubits[0], b = g.qubits[1];
      for (const auto& [k, v] : terms) {
        int col = k.get(a) * 4 + k.get(b);
        for (int row = 0; row < 16; ++row) {
          double w = r[row][col];
          if (w == 0.0) continue;
          Key kk = k;
          kk.set(a, row >> 2);
          kk.set(b, row & 3);
          add_term(next, kk, v * w);
        }
      }
    } else {
      auto r = transfer1(gate_matrix(g));
      int q = g.qubits[0];
      for (const auto& [k, v] : terms) {
        int col = k.get(q);
        if (col == 0) {
          add_term(next, k, v);
          continue;
        }
        for (int row = 0; row < 4; ++row) {
          double w = r[row][col];
          if (std::abs(w) < 1e-17) continue;
          Key kk = k;
          kk.set(q, row);
          add_term(next, kk, v * w);
        }
      }
    }
    for (int q : absorb_at[i]) {
      Terms folded;
      for (const auto& [k, v] : next) {
        double w = v * bloch[q][k.get(q)];
        if (w == 0.0) continue;
        Key kk = k;
        kk.set(q, 0);
        add_term(folded, kk, w);
      }
      next.swap(folded);
    }
    terms.clear();
    for (const auto& [k, v] : next)
      if (std::abs(v) > drop) terms.emplace(k, v);
    max_terms = std::max(max_terms, terms.size());
  }

  if (stats) stats->max_terms = max_terms;
  double ev = 0.0;
  for (const auto& [k, v] : terms) ev += v;
  return ev;
}

}  // namespace ehands
