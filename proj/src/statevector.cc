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

#include "ehands/statevector.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "ehands/pauli_propagation.h"
#include "ehands/rng.h"

namespace ehands {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("state vector size out of range");
  amp_.assign(std::size_t{1} << n_qubits, cplx(0.0));
  amp_[0] = 1.0;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const cplx& a : amp_) s += std::norm(a);
  return s;
}

void StateVector::probabilities(int q, double& p0, double& p1) const {
  std::size_t m = mask(q);
  p0 = p1 = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i)
    (i & m ? p1 : p0) += std::norm(amp_[i]);
}

void StateVector::collapse_and_reset(int q, int outcome, double p) {
  std::size_t m = mask(q);
  double k = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (i & m) continue;
    cplx keep = outcome ? amp_[i | m] : amp_[i];
    amp_[i] = keep * k;
    amp_[i | m] = 0.0;
  }
}

Mat2 gate_matrix(const Gate& g) {
  const cplx i1(0.0, 1.0);
  switch (g.kind) {
    case GateKind::Ry: {
      double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      return {c, -s, s, c};
    }
    case GateKind::Rz:
      return {std::exp(-i1 * (g.angle / 2)), 0.0, 0.0,
              std::exp(i1 * (g.angle / 2))};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
      double r = std::numbers::sqrt2 / 2;
      return {r, r, r, -r};
    }
    case GateKind::Sdg:
      return {1.0, 0.0, 0.0, -i1};
    default:
      throw std::invalid_argument(std::string("no 2x2 matrix for ") +
                                  to_string(g.kind));
  }
}

void apply_matrix(StateVector& s, int q, const Mat2& u) {
  std::size_t m = s.mask(q);
  auto& a = s.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & m) continue;
    cplx a0 = a[i], a1 = a[i | m];
    a[i] = u[0] * a0 + u[1] * a1;
    a[i | m] = u[2] * a0 + u[3] * a1;
  }
}

void apply_gate(StateVector& s, const Gate& g) {
  for (int k = 0; k < g.arity; ++k)
    if (g.qubits[k] < 0 || g.qubits[k] >= s.n_qubits())
      throw std::invalid_argument("gate index out of range");
  auto& a = s.amplitudes();
  switch (g.kind) {
    case GateKind::CNOT: {
      std::size_t mc = s.mask(g.qubits[0]), mt = s.mask(g.qubits[1]);
      for (std::size_t i = 0; i < a.size(); ++i)
        if ((i & mc) && !(i & mt)) std::swap(a[i], a[i | mt]);
      return;
    }
    case GateKind::CZ: {
      std::size_t m = s.mask(g.qubits[0]) | s.mask(g.qubits[1]);
      for (std::size_t i = 0; i < a.size(); ++i)
        if ((i & m) == m) a[i] = -a[i];
      return;
    }
    case GateKind::Controlled: {
      std::size_t on = 0, care = 0;
      for (int k = 0; k + 1 < g.arity; ++k) {
        std::size_t m = s.mask(g.qubits[k]);
        care |= m;
        if (!((g.neg_controls >> k) & 1)) on |= m;
      }
      std::size_t mt = s.mask(g.target());
      const Mat2& u = g.matrix;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & mt) || (i & care) != on) continue;
        cplx a0 = a[i], a1 = a[i | mt];
        a[i] = u[0] * a0 + u[1] * a1;
        a[i | mt] = u[2] * a0 + u[3] * a1;
      }
      return;
    }
    case GateKind::Reset:
    case GateKind::MeasureZ:
      throw std::invalid_argument("apply_gate takes unitary gates only");
    default:
      apply_matrix(s, g.qubits[0], gate_matrix(g));
  }
}

double expectation_z(const StateVector& s, int q) {
  if (q < 0 || q >= s.n_qubits()) throw std::invalid_argument("bad qubit");
  double p0, p1;
  s.probabilities(q, p0, p1);
  return p0 - p1;
}

namespace {

int count_resets(const std::vector<Gate>& gates) {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
    return g.kind == GateKind::Reset;
  }));
}

bool has_controlled(const std::vector<Gate>& gates) {
  return std::any_of(gates.begin(), gates.end(), [](const Gate& g) {
    return g.kind == GateKind::Controlled;
  });
}

// Runs unitary gates from `i` until a reset or the end; returns the stop index.
std::size_t run_segment(StateVector& s, const std::vector<Gate>& gates,
                        std::size_t i) {
  for (; i < gates.size(); ++i) {
    if (gates[i].kind == GateKind::Reset) break;
    apply_gate(s, gates[i]);
  }
  return i;
}

double branch_sum(StateVector s, const std::vector<Gate>& gates, std::size_t i,
                  int out, double prune) {
  i = run_segment(s, gates, i);
  if (i == gates.size()) return expectation_z(s, out);
  int q = gates[i].qubits[0];
  double p[2];
  s.probabilities(q, p[0], p[1]);
  double total = 0.0;
  for (int o = 0; o < 2; ++o) {
    if (p[o] < prune) continue;
    StateVector b = s;
    b.collapse_and_reset(q, o, p[o]);
    total += p[o] * branch_sum(std::move(b), gates, i + 1, out, prune);
  }
  return total;
}

double sv_exact(const Circuit& c, const std::vector<Gate>& gates, double prune) {
  return branch_sum(StateVector(c.n_qubits()), gates, 0, c.output_qubit(), prune);
}

void check_size(const Circuit& c, int limit) {
  if (c.n_qubits() > limit)
    throw std::invalid_argument("circuit too wide for trajectory simulation");
}

int outcome_of(SplitMix64& rng, double p0, double p1) {
  return rng.uniform() * (p0 + p1) < p0 ? 0 : 1;
}

// Noiseless: walk the reset-outcome tree, splitting shots by their own draws.
struct TreeWalk {
  const std::vector<Gate>& gates;
  int out;
  std::vector<SplitMix64>& streams;
  std::uint64_t plus = 0;

  void visit(StateVector s, std::size_t i, std::vector<std::uint32_t> group) {
    i = run_segment(s, gates, i);
    if (i == gates.size()) {
      double p0, p1;
      s.probabilities(out, p0, p1);
      for (std::uint32_t k : group)
        if (outcome_of(streams[k], p0, p1) == 0) ++plus;
      return;
    }
    int q = gates[i].qubits[0];
    double p[2];
    s.probabilities(q, p[0], p[1]);
    std::vector<std::uint32_t> split[2];
    for (std::uint32_t k : group) split[outcome_of(streams[k], p[0], p[1])].push_back(k);
    group.clear();
    group.shrink_to_fit();
    for (int o = 0; o < 2; ++o) {
      if (split[o].empty()) continue;
      StateVector b = s;
      b.collapse_and_reset(q, o, p[o]);
      visit(std::move(b), i + 1, std::move(split[o]));
    }
  }
};

void apply_pauli(StateVector& s, int q, int which) {
  const cplx i1(0.0, 1.0);
  static const Mat2 kPaulis[3] = {
      {0.0, 1.0, 1.0, 0.0}, {0.0, -i1, i1, 0.0}, {1.0, 0.0, 0.0, -1.0}};
  if (which) apply_matrix(s, q, kPaulis[which - 1]);
}

// One full trajectory; returns +1 or -1.
int trajectory(const Circuit& c, const std::vector<Gate>& gates, double p_noise,
               SplitMix64& rng) {
  StateVector s(c.n_qubits());
  for (const Gate& g : gates) {
    if (g.kind == GateKind::Reset) {
      double p0, p1;
      s.probabilities(g.qubits[0], p0, p1);
      int o = outcome_of(rng, p0, p1);
      s.collapse_and_reset(g.qubits[0], o, o ? p1 : p0);
      continue;
    }
    apply_gate(s, g);
    if (p_noise > 0.0 && g.is_two_qubit() && rng.uniform() < p_noise) {
      int k = 1 + static_cast<int>(rng.below(15));
      apply_pauli(s, g.qubits[0], k >> 2);
      apply_pauli(s, g.qubits[1], k & 3);
    }
  }
  double p0, p1;
  s.probabilities(c.output_qubit(), p0, p1);
  return outcome_of(rng, p0, p1) == 0 ? 1 : -1;
}

EvalResult finish(std::uint64_t plus, std::uint64_t shots) {
  EvalResult r;
  r.shots = shots;
  r.ev = (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
         static_cast<double>(shots);
  r.sigma = std::sqrt(std::max(0.0, 1.0 - r.ev * r.ev) / static_cast<double>(shots));
  return r;
}

}  // namespace

EvalResult run_exact(const Circuit& c, const ExactOptions& opt) {
  c.validate();
  std::vector<Gate> gates = c.gates_with_readout();
  if (count_resets(gates) > opt.branch_cap)
    throw std::runtime_error("reset count exceeds the branch cap");
  Backend b = opt.backend;
  if (b == Backend::Auto)
    b = (has_controlled(gates) || c.n_qubits() <= opt.auto_sv_max_qubits)
            ? Backend::StateVector
            : Backend::Pauli;
  EvalResult r;
  r.ev = b == Backend::Pauli ? pauli_expectation(c) : sv_exact(c, gates, opt.prune);
  return r;
}

EvalResult run_shots(const Circuit& c, std::uint64_t shots, std::uint64_t seed,
                     const NoiseModel& noise, const ShotOptions& opt) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  double p = noise.two_qubit_depolarizing_p;
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("depolarizing probability outside [0, 1]");
  c.validate();
  std::vector<Gate> gates = c.gates_with_readout();

  if (p == 0.0 && !opt.naive) {
    if (count_resets(gates) == 0) {
      // Single leaf: one draw per shot against the exact outcome probability.
      double p0, p1;
      if (c.n_qubits() <= 20) {
        simulate(c).probabilities(c.output_qubit(), p0, p1);
      } else {
        double ev = run_exact(c).ev;
        p0 = 0.5 * (1.0 + ev);
        p1 = 0.5 * (1.0 - ev);
      }
      std::uint64_t plus = 0;
      for (std::uint64_t k = 0; k < shots; ++k) {
        SplitMix64 rng = shot_stream(seed, k);
        if (outcome_of(rng, p0, p1) == 0) ++plus;
      }
      return finish(plus, shots);
    }
    check_size(c, opt.max_trajectory_qubits);
    if (shots > 0xFFFFFFFFull) throw std::invalid_argument("too many shots");
    std::vector<SplitMix64> streams;
    streams.reserve(shots);
    for (std::uint64_t k = 0; k < shots; ++k) streams.push_back(shot_stream(seed, k));
    std::vector<std::uint32_t> all(shots);
    for (std::uint64_t k = 0; k < shots; ++k) all[k] = static_cast<std::uint32_t>(k);
    TreeWalk walk{gates, c.output_qubit(), streams};
    walk.visit(StateVector(c.n_qubits()), 0, std::move(all));
    return finish(walk.plus, shots);
  }

  check_size(c, opt.max_trajectory_qubits);
  int workers = std::max(1, opt.workers);
  std::vector<std::uint64_t> plus(workers, 0);
  auto work = [&](int w) {
    std::uint64_t lo = shots * w / workers, hi = shots * (w + 1) / workers;
    for (std::uint64_t k = lo; k < hi; ++k) {
      SplitMix64 rng = shot_stream(seed, k);
      if (trajectory(c, gates, p, rng) > 0) ++plus[w];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (std::uint64_t v : plus) total += v;
  return finish(total, shots);
}

StateVector simulate(const Circuit& c) {
  c.validate();
  StateVector s(c.n_qubits());
  for (const Gate& g : c.gates_with_readout()) apply_gate(s, g);
  return s;
}

std::vector<cplx> circuit_unitary(const Circuit& c) {
  c.validate();
  int n = c.n_qubits();
  if (n > 12) throw std::invalid_argument("circuit too wide for a dense unitary");
  std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> u(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s(n);
    s[0] = 0.0;
    s[col] = 1.0;
    for (const Gate& g : c.gates()) apply_gate(s, g);
    for (std::size_t row = 0; row < dim; ++row) u[row * dim + col] = s[row];
  }
  return u;
}

}  // namespace ehands
