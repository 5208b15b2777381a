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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ehands/statevector.h"

using namespace ehands;

TEST(EncodeAngle, Endpoints) {
  EXPECT_EQ(encode_angle(1.0), 0.0);
  EXPECT_NEAR(encode_angle(0.0), std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(encode_angle(-1.0), std::numbers::pi, 1e-15);
}

TEST(EncodeAngle, OutOfRangeIsAnError) {
  EXPECT_THROW(encode_angle(1.0000001), std::domain_error);
  EXPECT_THROW(encode_angle(-1.5), std::domain_error);
  EXPECT_THROW(encode_angle(std::nan("")), std::domain_error);
}

TEST(EncodeAngle, StrictlyDecreasing) {
  double prev = encode_angle(-1.0);
  for (int i = 1; i <= 2000; ++i) {
    double t = encode_angle(-1.0 + i * 0.001);
    EXPECT_LT(t, prev);
    prev = t;
  }
}

TEST(EncodeValues, Invariants) {
  EncodedInput e = encode_values({0.5, -0.6, 1.0});
  ASSERT_EQ(e.values.size(), e.thetas.size());
  for (std::size_t i = 0; i < e.values.size(); ++i)
    EXPECT_EQ(e.thetas[i], std::acos(e.values[i]));
}

TEST(EncodeLayer, AmplitudePattern) {
  double x0 = 0.5, x1 = -0.6;
  Circuit c = encode_layer({x0, x1});
  ASSERT_EQ(c.gates().size(), 2u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::Ry);
  EXPECT_EQ(c.gates()[0].qubits[0], 0);
  EXPECT_EQ(c.gates()[1].qubits[0], 1);
  EXPECT_EQ(c.role(0), Role::Data);
  StateVector s = simulate(c);
  // 1/2 sqrt(1 +- x0) sqrt(1 +- x1), |00>, |01>, |10>, |11>.
  double want[4] = {0.5 * std::sqrt((1 + x0) * (1 + x1)),
                    0.5 * std::sqrt((1 + x0) * (1 - x1)),
                    0.5 * std::sqrt((1 - x0) * (1 + x1)),
                    0.5 * std::sqrt((1 - x0) * (1 - x1))};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(s[i].real(), want[i], 1e-15);
    EXPECT_EQ(s[i].imag(), 0.0);
  }
}

TEST(EncodeLayer, EmptyRejected) {
  EXPECT_THROW(encode_layer({}), std::invalid_argument);
  EXPECT_THROW(encode_layer({0.1, 2.0}), std::domain_error);
}

TEST(EncodeLayer, IdentityCase) {
  Circuit c = encode_layer({1.0});
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0].angle, 0.0);
  EXPECT_EQ(run_exact(c).ev, 1.0);
}

TEST(EncodeLayer, RoundTrip) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 1000; ++i) {
    double x = u(rng);
    EXPECT_NEAR(run_exact(encode_layer({x})).ev, x, 1e-12);
  }
}

TEST(DecodeSigma, Examples) {
  EXPECT_NEAR(decode_sigma(0.0, 10000), 0.01, 1e-15);
  EXPECT_EQ(decode_sigma(1.0, 7), 0.0);
  EXPECT_EQ(decode_sigma(-1.0, 123456), 0.0);
  EXPECT_NEAR(decode_sigma(0.6, 2500), 0.016, 1e-15);
}
