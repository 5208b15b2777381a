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

#include "ehands/qsp.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ehands/even.h"

namespace ehands {

namespace {

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

void check(const QspPhases& p, double x) {
  if (p.phases.empty()) throw std::invalid_argument("need at least one phase");
  for (double phi : p.phases)
    if (!std::isfinite(phi)) throw std::domain_error("phase is not finite");
  encode_angle(x);
}

// Time-ordered operators of the sequence: S(phi_0), W, S(phi_1), ..., S(phi_d).
std::vector<Mat2> sequence(const QspPhases& p, double x) {
  std::vector<Mat2> ops;
  Mat2 w = qsp_signal(x);
  for (std::size_t k = 0; k < p.phases.size(); ++k) {
    if (k > 0) ops.push_back(w);
    ops.push_back(qsp_phase(p.phases[k]));
  }
  return ops;
}

const Mat2& hadamard() {
  static const double r = std::numbers::sqrt2 / 2;
  static const Mat2 h = {r, r, r, -r};
  return h;
}

void append_test_block(Circuit& c, const QspPhases& p, double x,
                       const std::vector<int>& outer, unsigned outer_neg,
                       int readout, int signal) {
  auto add = [&](const std::vector<int>& ctrls, unsigned neg, int t, const Mat2& u) {
    if (ctrls.empty())
      throw std::logic_error("controlled block without controls");
    c.add(Gate::controlled(ctrls, t, u, neg));
  };
  if (outer.empty())
    c.h(readout);
  else
    add(outer, outer_neg, readout, hadamard());
  std::vector<int> ctrls = outer;
  ctrls.push_back(readout);
  for (const Mat2& u : sequence(p, x)) add(ctrls, outer_neg, signal, u);
  if (outer.empty())
    c.h(readout);
  else
    add(outer, outer_neg, readout, hadamard());
}

}  // namespace

Mat2 qsp_phase(double phi) {
  return {std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi)};
}

Mat2 qsp_signal(double x) {
  cplx s(0.0, std::sqrt(std::max(0.0, 1.0 - x * x)));
  return {x, s, s, x};
}

Mat2 qsp_unitary(const QspPhases& p, double x) {
  check(p, x);
  Mat2 u = {1.0, 0.0, 0.0, 1.0};
  for (const Mat2& op : sequence(p, x)) u = mul(op, u);
  return u;
}

cplx qsp_value(const QspPhases& p, double x) { return qsp_unitary(p, x)[0]; }

Circuit hadamard_test_circuit(const QspPhases& p, double x) {
  check(p, x);
  Circuit c(2);
  c.set_role(0, Role::Ancilla);
  c.set_role(1, Role::Data);
  append_test_block(c, p, x, {}, 0, 0, 1);
  c.set_output(0);
  return c;
}

Circuit lcu_circuit(const QspPhases& even, const QspPhases& odd, double x) {
  check(even, x);
  check(odd, x);
  Circuit c(3);
  c.set_role(0, Role::Ancilla);
  c.set_role(1, Role::Ancilla);
  c.set_role(2, Role::Data);
  c.h(0);
  append_test_block(c, even, x, {0}, 1u, 1, 2);
  append_test_block(c, odd, x, {0}, 0u, 1, 2);
  c.set_output(1);
  return c;
}

int qsp_resource_estimate(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  return 12 * d + 6;
}

}  // namespace ehands
