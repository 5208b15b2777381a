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

#ifndef EHANDS_SRC_ASSEMBLER_H_
#define EHANDS_SRC_ASSEMBLER_H_

#include <functional>
#include <vector>

#include "ehands/blocks.h"
#include "ehands/circuit.h"

namespace ehands::internal {

// Phase bookkeeping per wire. Rz(pi/2) and product targets pick up a quarter
// turn. A sum of two clean wires is exact when their quarter-turn counts
// agree mod 2; sum outputs (and anything multiplied by one) are mixed and
// need a parity flip before the next sum.
struct WireClass {
  enum Kind { Clean, Mixed, Dephased } kind = Clean;
  int parity = 0;
};

class Assembler {
 public:
  using AncillaSource = std::function<int()>;

  // Starts a circuit whose first wire is handed out by the first new_wire().
  Assembler() : c_(1) {}

  Circuit& circuit() { return c_; }
  Circuit take() { return std::move(c_); }

  int new_wire(Role role);
  int encoded_wire(Role role, double v,
                   NegationPlacement where = NegationPlacement::BeforeRy);

  void encode(int q, double v,
              NegationPlacement where = NegationPlacement::BeforeRy);
  void reset(int q);
  void quarter_turn(int q);
  void product(int control, int target);
  // Weighted sum into a. Repairs the phase classes first: a quarter turn on b
  // for a clean parity mismatch, otherwise a flip of b through anc().
  void sum(int a, int b, double w, const AncillaSource& anc);

  const WireClass& wire_class(int q) const { return cls_.at(q); }
  int flips() const { return flips_; }

 private:
  Circuit c_;
  bool first_used_ = false;
  std::vector<WireClass> cls_;
  int flips_ = 0;
};

}  // namespace ehands::internal

#endif  // EHANDS_SRC_ASSEMBLER_H_
