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

#ifndef EHANDS_COMPILER_H_
#define EHANDS_COMPILER_H_

#include <string>
#include <vector>

#include "ehands/circuit.h"
#include "ehands/fit.h"

namespace ehands {

// 3d wires: d data, d+1 coefficient, d-1 ancilla. Output on the a_0 wire.
Circuit build_reversible(const PolySpec& spec, double x);

// d+1 wires recycled through 2d-1 resets. Output on d_0.
Circuit build_nonreversible(const PolySpec& spec, double x);

// Product tree for the powers, balanced sum tree; two-qubit depth grows
// like log d.
Circuit build_shallow(const PolySpec& spec, double x);

enum class Builder { Reversible, NonReversible, Shallow };

Builder builder_from_string(const std::string& name);
const char* to_string(Builder b);
Circuit build(Builder b, const PolySpec& spec, double x);

struct MonomialTerm {
  double coefficient = 1.0;
  std::vector<int> exponents;  // one per variable
};

// EV = (1/T) sum_t coeff_t prod_j x_j^e_tj over T terms.
Circuit build_multivariable(const std::vector<MonomialTerm>& terms,
                            const std::vector<double>& xs);

// EV = MSE(xs, ys) / 4.
Circuit build_mse(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace ehands

#endif  // EHANDS_COMPILER_H_
