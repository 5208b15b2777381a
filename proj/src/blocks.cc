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

#include "ehands/blocks.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ehands/even.h"
#include "ehands/statevector.h"

namespace ehands {

namespace {

void distinct(int a, int b) {
  if (a == b) throw std::invalid_argument("block needs two distinct qubits");
}

}  // namespace

Circuit& append_product(Circuit& c, int q0, int q1) {
  distinct(q0, q1);
  c.rz(q1, std::numbers::pi / 2);
  c.cnot(q0, q1);
  return c;
}

Circuit& append_weighted_sum(Circuit& c, int q0, int q1, double w) {
  distinct(q0, q1);
  if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("sum weight outside [0, 1]");
  double alpha = std::acos(1.0 - 2.0 * w);
  append_product(c, q0, q1);
  c.ry(q0, alpha / 2);
  c.cnot(q1, q0);
  c.ry(q0, -alpha / 2);
  return c;
}

Circuit& append_negation(Circuit& c, int q) { return c.x(q); }

Circuit& append_parity_flip(Circuit& c, int target, int ancilla) {
  distinct(target, ancilla);
  c.h(ancilla);
  c.cz(ancilla, target);
  return c;
}

Circuit& append_signed_encoding(Circuit& c, int q, double v,
                                NegationPlacement where) {
  double theta = encode_angle(std::abs(v));
  bool neg = v < 0.0;
  if (neg && where == NegationPlacement::BeforeRy) c.x(q);
  c.ry(q, theta);
  if (neg && where == NegationPlacement::AfterRy) c.x(q);
  return c;
}

double basis_ev(double x0, double x1, double w, SumQubit which, Basis basis) {
  Circuit c = encode_layer({x0, x1});
  append_weighted_sum(c, 0, 1, w);
  c.set_output(which == SumQubit::Q0 ? 0 : 1, basis);
  return run_exact(c).ev;
}

double basis_closed_form(double x0, double x1, double w, SumQubit which,
                         Basis basis) {
  double s0 = std::sqrt(1.0 - x0 * x0), s1 = std::sqrt(1.0 - x1 * x1);
  if (which == SumQubit::Q0) {
    switch (basis) {
      case Basis::X:
        return std::sqrt(w * (1.0 - w)) * (x0 - x1);
      case Basis::Y:
        return s0 * s1;
      case Basis::Z:
        return w * x0 + (1.0 - w) * x1;
    }
  }
  switch (basis) {
    case Basis::X:
      return std::sqrt(1.0 - w) * s0;
    case Basis::Y:
      return std::sqrt(w) * s1;
    case Basis::Z:
      return x0 * x1;
  }
  return 0.0;
}

Circuit sum_cascade(const std::vector<double>& xs,
                    const std::vector<double>& weights, bool with_flips) {
  if (xs.size() < 2 || weights.size() + 1 != xs.size())
    throw std::invalid_argument("cascade needs K >= 2 inputs and K-1 weights");
  Circuit c = encode_layer(xs);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (with_flips && j > 0) {
      int anc = c.add_qubit(Role::Ancilla);
      append_parity_flip(c, 0, anc);
    }
    append_weighted_sum(c, 0, static_cast<int>(j) + 1, weights[j]);
  }
  c.set_output(0);
  return c;
}

}  // namespace ehands
