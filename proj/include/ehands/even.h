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

#ifndef EHANDS_EVEN_H_
#define EHANDS_EVEN_H_

#include <cstdint>
#include <vector>

#include "ehands/circuit.h"

namespace ehands {

// arccos(x). Throws std::domain_error outside [-1, 1]; no clamping.
double encode_angle(double x);

struct EncodedInput {
  std::vector<double> values;
  std::vector<double> thetas;
};

EncodedInput encode_values(const std::vector<double>& xs);

// One Ry(arccos x_i) per qubit, in index order.
Circuit encode_layer(const std::vector<double>& xs);

// Binomial standard error of a Pauli-Z estimate.
double decode_sigma(double ev, std::uint64_t shots);

}  // namespace ehands

#endif  // EHANDS_EVEN_H_
