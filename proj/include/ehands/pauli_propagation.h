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

#ifndef EHANDS_PAULI_PROPAGATION_H_
#define EHANDS_PAULI_PROPAGATION_H_

#include <cstddef>

#include "ehands/circuit.h"

namespace ehands {

struct PauliStats {
  std::size_t max_terms = 0;
};

// Exact output expectation by propagating the observable backwards through
// the circuit as a real sum of Pauli strings. Each qubit's single-qubit
// prefix is folded in as a Bloch vector once the walk leaves it behind.
// Supports up to 128 qubits; Controlled gates are rejected.
double pauli_expectation(const Circuit& c, double drop = 1e-15,
                         PauliStats* stats = nullptr);

}  // namespace ehands

#endif  // EHANDS_PAULI_PROPAGATION_H_
