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

#include "assembler.h"

#include <numbers>

namespace ehands::internal {

int Assembler::new_wire(Role role) {
  int q;
  if (!first_used_) {
    first_used_ = true;
    q = 0;
    c_.set_role(0, role);
  } else {
    q = c_.add_qubit(role);
  }
  cls_.push_back({});
  return q;
}

int Assembler::encoded_wire(Role role, double v, NegationPlacement where) {
  int q = new_wire(role);
  encode(q, v, where);
  return q;
}

void Assembler::encode(int q, double v, NegationPlacement where) {
  append_signed_encoding(c_, q, v, where);
  cls_.at(q) = {};
}

void Assembler::reset(int q) {
  c_.reset(q);
  cls_.at(q) = {};
}

void Assembler::quarter_turn(int q) {
  c_.rz(q, std::numbers::pi / 2);
  WireClass& k = cls_.at(q);
  if (k.kind == WireClass::Clean) k.parity ^= 1;
}

void Assembler::product(int control, int target) {
  append_product(c_, control, target);
  const WireClass& ctl = cls_.at(control);
  WireClass& t = cls_.at(target);
  if (ctl.kind != WireClass::Mixed && t.kind == WireClass::Clean)
    t.parity ^= 1;
  else
    t = {WireClass::Mixed, 0};
}

void Assembler::sum(int a, int b, double w, const AncillaSource& anc) {
  const WireClass ka = cls_.at(a), kb = cls_.at(b);
  bool dephased = ka.kind == WireClass::Dephased || kb.kind == WireClass::Dephased;
  if (!dephased) {
    if (ka.kind == WireClass::Clean && kb.kind == WireClass::Clean) {
      if (ka.parity != kb.parity) quarter_turn(b);
    } else {
      int q = anc();
      append_parity_flip(c_, b, q);
      cls_.at(q) = {WireClass::Mixed, 0};
      ++flips_;
    }
  }
  append_weighted_sum(c_, a, b, w);
  cls_.at(a) = {WireClass::Mixed, 0};
  cls_.at(b) = {WireClass::Mixed, 0};
}

}  // namespace ehands::internal
