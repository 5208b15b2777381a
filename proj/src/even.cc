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

#include "ehands/even.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ehands {

double encode_angle(double x) {
  if (!(x >= -1.0 && x <= 1.0))
    throw std::domain_error("value outside [-1, 1]: " + std::to_string(x));
  return std::acos(x);
}

EncodedInput encode_values(const std::vector<double>& xs) {
  EncodedInput e;
  e.values = xs;
  e.thetas.reserve(xs.size());
  for (double x : xs) e.thetas.push_back(encode_angle(x));
  return e;
}

Circuit encode_layer(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("encode_layer needs >= 1 value");
  EncodedInput e = encode_values(xs);
  Circuit c(static_cast<int>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    c.set_role(static_cast<int>(i), Role::Data);
    c.ry(static_cast<int>(i), e.thetas[i]);
  }
  return c;
}

double decode_sigma(double ev, std::uint64_t shots) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  if (!(std::abs(ev) <= 1.0)) throw std::domain_error("|ev| > 1");
  return std::sqrt((1.0 - ev * ev) / static_cast<double>(shots));
}

}  // namespace ehands
