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

#ifndef EHANDS_QSP_H_
#define EHANDS_QSP_H_

#include <vector>

#include "ehands/circuit.h"

namespace ehands {

// d+1 phases give a degree-d sequence.
struct QspPhases {
  std::vector<double> phases;
  int degree() const { return static_cast<int>(phases.size()) - 1; }
};

// S(phi) = diag(e^{i phi}, e^{-i phi}).
Mat2 qsp_phase(double phi);
// W(x) = [[x, i sqrt(1-x^2)], [i sqrt(1-x^2), x]].
Mat2 qsp_signal(double x);

// S(phi_d) W(x) ... S(phi_1) W(x) S(phi_0).
Mat2 qsp_unitary(const QspPhases& p, double x);
cplx qsp_value(const QspPhases& p, double x);

// H, controlled U_phi(x), H. Qubit 0 is read out; EV = Re U_00.
Circuit hadamard_test_circuit(const QspPhases& p, double x);

// Selector (0), readout (1), signal (2). H on the selector, then the even
// Hadamard test anti-controlled and the odd one controlled on it.
// EV on qubit 1 = (Re P_even + Re P_odd) / 2.
Circuit lcu_circuit(const QspPhases& even, const QspPhases& odd, double x);

// Approximate two-qubit gate count of the transpiled LCU circuit.
int qsp_resource_estimate(int d);

}  // namespace ehands

#endif  // EHANDS_QSP_H_
