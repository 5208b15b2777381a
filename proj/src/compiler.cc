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

#include "ehands/compiler.h"

#include <map>
#include <stdexcept>

#include "assembler.h"
#include "ehands/even.h"

namespace ehands {

using internal::Assembler;

namespace {

void check_inputs(const PolySpec& spec, double x) {
  encode_angle(x);
  if (spec.a.size() != static_cast<std::size_t>(spec.degree + 1))
    throw std::invalid_argument("spec has the wrong number of coefficients");
  for (double a : spec.a) encode_angle(std::abs(a));
}

Assembler::AncillaSource fresh_ancilla(Assembler& as) {
  return [&as] { return as.new_wire(Role::Ancilla); };
}

// Wire holding x^k from a balanced product tree over k fresh copies of x.
int copy_tree(Assembler& as, double x, int k) {
  std::vector<int> level;
  for (int i = 0; i < k; ++i) level.push_back(as.encoded_wire(Role::Data, x));
  while (level.size() > 1) {
    std::vector<int> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      as.product(level[i], level[i + 1]);
      next.push_back(level[i + 1]);
    }
    if (level.size() % 2) next.push_back(level.back());
    level.swap(next);
  }
  return level[0];
}

// Wires for x^1..x^m. The top half reuses the lower powers as controls.
std::map<int, int> power_tree(Assembler& as, double x, int m) {
  if (m == 1) return {{1, as.encoded_wire(Role::Data, x)}};
  int h = 1;
  while (2 * h < m) h *= 2;
  std::map<int, int> p = power_tree(as, x, h);
  int k = m - h;
  std::vector<int> copies;
  for (int i = 0; i < k; ++i) copies.push_back(copy_tree(as, x, k));
  for (int i = 0; i < k; ++i) {
    int t = copies[i];
    as.product(p.at(h - i), t);
    p[m - i] = t;
  }
  return p;
}

// Weighted sum tree; returns (wire, leaf count). Left holds the higher half.
std::pair<int, int> sum_tree(Assembler& as, const std::vector<int>& leaves,
                             std::size_t lo, std::size_t hi) {
  if (lo == hi) return {leaves[lo], 1};
  std::size_t mid = (lo + hi + 1) / 2;
  auto [l, nl] = sum_tree(as, leaves, mid, hi);
  auto [r, nr] = sum_tree(as, leaves, lo, mid - 1);
  as.sum(l, r, static_cast<double>(nl) / (nl + nr), fresh_ancilla(as));
  return {l, nl + nr};
}

// Balanced tree in list order, for MSE.
std::pair<int, int> average_tree(Assembler& as, const std::vector<int>& w,
                                 std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {w[lo], 1};
  std::size_t mid = lo + (hi - lo + 1) / 2;
  auto [l, nl] = average_tree(as, w, lo, mid);
  auto [r, nr] = average_tree(as, w, mid, hi);
  as.sum(l, r, static_cast<double>(nl) / (nl + nr), fresh_ancilla(as));
  return {l, nl + nr};
}

}  // namespace

Circuit build_reversible(const PolySpec& spec, double x) {
  check_inputs(spec, x);
  int d = spec.degree;
  Assembler as;
  std::vector<int> dw, aw;
  for (int k = 0; k < d; ++k) dw.push_back(as.encoded_wire(Role::Data, x));
  for (int i = 0; i <= d; ++i) aw.push_back(as.encoded_wire(Role::Coeff, spec.a[i]));
  for (int k = 0; k + 1 < d; ++k) as.product(dw[k], dw[k + 1]);
  for (int k = 1; k <= d; ++k) as.product(dw[k - 1], aw[k]);
  int acc = aw[d];
  for (int k = d - 1; k >= 0; --k) {
    as.sum(aw[k], acc, 1.0 / (d - k + 1), fresh_ancilla(as));
    acc = aw[k];
  }
  Circuit c = as.take();
  c.set_output(acc);
  return c;
}

Circuit build_nonreversible(const PolySpec& spec, double x) {
  check_inputs(spec, x);
  int d = spec.degree;
  Assembler as;
  std::vector<int> dw;
  for (int k = 0; k < d; ++k) dw.push_back(as.encoded_wire(Role::Data, x));
  int acc = as.encoded_wire(Role::Coeff, spec.a[d]);
  for (int k = 0; k + 1 < d; ++k) as.product(dw[k], dw[k + 1]);
  if (d > 0) as.product(dw[d - 1], acc);
  int spare = -1;
  auto recycle = [&as, &spare] {
    if (spare < 0) throw std::logic_error("no spare wire to recycle");
    as.reset(spare);
    return spare;
  };
  for (int k = d - 1; k >= 0; --k) {
    // d_k held x^(k+1), already consumed; it now carries a_k.
    as.reset(dw[k]);
    as.encode(dw[k], spec.a[k]);
    if (k > 0) as.product(dw[k - 1], dw[k]);
    as.sum(dw[k], acc, 1.0 / (d - k + 1), recycle);
    spare = acc;
    acc = dw[k];
  }
  Circuit c = as.take();
  c.set_output(acc);
  return c;
}

Circuit build_shallow(const PolySpec& spec, double x) {
  check_inputs(spec, x);
  int d = spec.degree;
  Assembler as;
  std::map<int, int> p;
  if (d >= 1) p = power_tree(as, x, d);
  std::vector<int> aw;
  for (int i = 0; i <= d; ++i) aw.push_back(as.encoded_wire(Role::Coeff, spec.a[i]));
  for (int k = 1; k <= d; ++k) as.product(p.at(k), aw[k]);
  int out = sum_tree(as, aw, 0, aw.size() - 1).first;
  Circuit c = as.take();
  c.set_output(out);
  return c;
}

Builder builder_from_string(const std::string& name) {
  if (name == "reversible") return Builder::Reversible;
  if (name == "nonreversible") return Builder::NonReversible;
  if (name == "shallow") return Builder::Shallow;
  throw std::invalid_argument("unknown builder: " + name);
}

const char* to_string(Builder b) {
  switch (b) {
    case Builder::Reversible:
      return "reversible";
    case Builder::NonReversible:
      return "nonreversible";
    case Builder::Shallow:
      return "shallow";
  }
  return "?";
}

Circuit build(Builder b, const PolySpec& spec, double x) {
  switch (b) {
    case Builder::Reversible:
      return build_reversible(spec, x);
    case Builder::NonReversible:
      return build_nonreversible(spec, x);
    case Builder::Shallow:
      return build_shallow(spec, x);
  }
  throw std::invalid_argument("unknown builder");
}

Circuit build_multivariable(const std::vector<MonomialTerm>& terms,
                            const std::vector<double>& xs) {
  if (terms.empty()) throw std::invalid_argument("need at least one term");
  for (double x : xs) encode_angle(x);
  Assembler as;
  std::vector<int> wires;
  for (const MonomialTerm& t : terms) {
    if (t.exponents.size() != xs.size())
      throw std::invalid_argument("term exponent count does not match inputs");
    int q = as.encoded_wire(Role::Coeff, t.coefficient);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (t.exponents[j] < 0) throw std::invalid_argument("negative exponent");
      for (int e = 0; e < t.exponents[j]; ++e)
        as.product(as.encoded_wire(Role::Data, xs[j]), q);
    }
    wires.push_back(q);
  }
  int n = static_cast<int>(wires.size());
  int acc = wires[n - 1];
  for (int k = n - 2; k >= 0; --k) {
    as.sum(wires[k], acc, 1.0 / (n - k), fresh_ancilla(as));
    acc = wires[k];
  }
  Circuit c = as.take();
  c.set_output(acc);
  return c;
}

Circuit build_mse(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("x and y lengths differ");
  if (xs.empty()) throw std::invalid_argument("need at least one pair");
  Assembler as;
  std::vector<int> squares;
  auto none = []() -> int { throw std::logic_error("unexpected flip"); };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    int d0 = as.encoded_wire(Role::Data, -ys[i], NegationPlacement::AfterRy);
    int d1 = as.encoded_wire(Role::Data, xs[i]);
    int d2 = as.encoded_wire(Role::Data, xs[i]);
    int d3 = as.encoded_wire(Role::Data, -ys[i], NegationPlacement::AfterRy);
    as.sum(d1, d0, 0.5, none);
    as.sum(d2, d3, 0.5, none);
    as.product(d1, d2);
    squares.push_back(d2);
  }
  int out = average_tree(as, squares, 0, squares.size()).first;
  Circuit c = as.take();
  c.set_output(out);
  return c;
}

}  // namespace ehands
