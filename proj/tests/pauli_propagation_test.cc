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

#include "ehands/pauli_propagation.h"

#include <gtest/gtest.h>

#include <random>

#include "ehands/compiler.h"
#include "ehands/qsp.h"
#include "ehands/statevector.h"
#include "oracle.h"

using namespace ehands;

namespace {

double sv(const Circuit& c) {
  ExactOptions o;
  o.backend = Backend::StateVector;
  return run_exact(c, o).ev;
}

}  // namespace

TEST(PauliPropagation, MatchesOracleOnRandomCircuits) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 80; ++k) {
    Circuit c = oracle::random_circuit(rng, 1 + k % 5, 30, k % 3 != 0);
    c.set_output(c.output_qubit(), static_cast<Basis>(k % 3));
    EXPECT_NEAR(pauli_expectation(c), oracle::expectation(c), 1e-10) << k;
  }
}

TEST(PauliPropagation, MatchesStateVectorOnBuilders) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int d = 1; d <= 5; ++d) {
    std::vector<double> a(d + 1);
    for (double& v : a) v = u(rng);
    PolySpec s = make_spec(a);
    double x = u(rng);
    for (Builder b : {Builder::Reversible, Builder::NonReversible, Builder::Shallow}) {
      Circuit c = build(b, s, x);
      EXPECT_NEAR(pauli_expectation(c), sv(c), 1e-12) << to_string(b) << " d=" << d;
    }
  }
}

TEST(PauliPropagation, TermCountStaysSmallOnWideCircuits) {
  PolySpec s = make_spec({0.1, -0.2, 0.3, -0.4, 0.5, -0.6, 0.7, -0.8, 0.9, -1.0, 0.5});
  PauliStats st;
  Circuit c = build_reversible(s, 0.37);
  ASSERT_EQ(c.n_qubits(), 30);
  double ev = pauli_expectation(c, 1e-15, &st);
  EXPECT_NEAR(ev, attenuated_value(s, 0.37), 1e-12);
  EXPECT_LT(st.max_terms, 100u);
}

TEST(PauliPropagation, RejectsControlledBlocks) {
  Circuit c = hadamard_test_circuit({{0.1, 0.2}}, 0.5);
  EXPECT_THROW(pauli_expectation(c), std::invalid_argument);
}

TEST(PauliPropagation, AutoBackendRoutesWideCircuits) {
  std::vector<double> xs(8), ys(8);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1, 1);
  double mse = 0;
  for (int i = 0; i < 8; ++i) {
    xs[i] = u(rng);
    ys[i] = u(rng);
    mse += (xs[i] - ys[i]) * (xs[i] - ys[i]) / 8;
  }
  Circuit c = build_mse(xs, ys);
  EXPECT_GT(c.n_qubits(), 30);
  EXPECT_NEAR(run_exact(c).ev, mse / 4, 1e-12);
}
