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

#ifndef EHANDS_BLOCKS_H_
#define EHANDS_BLOCKS_H_

#include <vector>

#include "ehands/circuit.h"

namespace ehands {

// Rz(pi/2) on q1, then CNOT(q0 -> q1). q1 reads x0*x1, q0 keeps x0.
Circuit& append_product(Circuit& c, int q0, int q1);

// Product, then Ry(a/2) q0, CNOT(q1 -> q0), Ry(-a/2) q0 with a = arccos(1-2w).
// q0 reads w*x0 + (1-w)*x1. Throws std::domain_error for w outside [0, 1].
Circuit& append_weighted_sum(Circuit& c, int q0, int q1, double w);

Circuit& append_negation(Circuit& c, int q);

// H on the ancilla, then CZ(ancilla, target). The ancilla must be |0>.
Circuit& append_parity_flip(Circuit& c, int target, int ancilla);

enum class NegationPlacement { BeforeRy, AfterRy };

// Ry(arccos |v|) with an X before or after it when v < 0.
Circuit& append_signed_encoding(
    Circuit& c, int q, double v,
    NegationPlacement where = NegationPlacement::BeforeRy);

enum class SumQubit { Q0, Q1 };

// Exact EV of the two-qubit weighted-sum circuit read in the given basis.
double basis_ev(double x0, double x1, double w, SumQubit which, Basis basis);

// Closed forms for the same readouts.
double basis_closed_form(double x0, double x1, double w, SumQubit which,
                         Basis basis);

// Wires 0..K-1 hold xs. Step j folds x_{j+1} into wire 0 with weight w_j;
// with flips, wire 0 is flipped through a fresh ancilla before every step
// after the first. Output on wire 0.
Circuit sum_cascade(const std::vector<double>& xs,
                    const std::vector<double>& weights, bool with_flips);

}  // namespace ehands

#endif  // EHANDS_BLOCKS_H_
