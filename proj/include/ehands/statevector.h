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

#ifndef EHANDS_STATEVECTOR_H_
#define EHANDS_STATEVECTOR_H_

#include <cstdint>
#include <vector>

#include "ehands/circuit.h"

namespace ehands {

// Qubit 0 is the most significant bit of the amplitude index.
class StateVector {
 public:
  explicit StateVector(int n_qubits);  // |0...0>

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  std::vector<cplx>& amplitudes() { return amp_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }

  double norm_squared() const;
  std::size_t mask(int q) const { return std::size_t{1} << (n_ - 1 - q); }

  // Probability of reading 0 and 1 on q.
  void probabilities(int q, double& p0, double& p1) const;
  // Keeps the `outcome` branch of q, renormalizes, and returns q to |0>.
  void collapse_and_reset(int q, int outcome, double p);

 private:
  int n_;
  std::vector<cplx> amp_;
};

Mat2 gate_matrix(const Gate& g);  // single-qubit unitary kinds only

void apply_matrix(StateVector& s, int q, const Mat2& u);
// Throws std::invalid_argument for Reset/MeasureZ or a bad index.
void apply_gate(StateVector& s, const Gate& g);

double expectation_z(const StateVector& s, int q);

struct EvalResult {
  double ev = 0.0;
  double sigma = 0.0;
  std::uint64_t shots = 0;
};

struct NoiseModel {
  double two_qubit_depolarizing_p = 0.0;
};

enum class Backend { Auto, StateVector, Pauli };

struct ExactOptions {
  int branch_cap = 20;
  Backend backend = Backend::Auto;
  // Reset branches below this probability are dropped.
  double prune = 1e-14;
  // Auto uses the state vector up to this many qubits.
  int auto_sv_max_qubits = 12;
};

// Exact expectation of the output observable.
EvalResult run_exact(const Circuit& c, const ExactOptions& opt = {});

struct ShotOptions {
  int workers = 1;
  // Naive per-shot trajectories instead of the shared outcome tree.
  bool naive = false;
  int max_trajectory_qubits = 24;
};

EvalResult run_shots(const Circuit& c, std::uint64_t shots, std::uint64_t seed,
                     const NoiseModel& noise = {},
                     const ShotOptions& opt = {});

// Final state of a reset-free circuit, basis change included.
StateVector simulate(const Circuit& c);

// Row-major 2^n x 2^n unitary of a reset-free circuit (readout excluded).
std::vector<cplx> circuit_unitary(const Circuit& c);

}  // namespace ehands

#endif  // EHANDS_STATEVECTOR_H_
