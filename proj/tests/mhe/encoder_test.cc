// Copyright 2026 The CTI-MHE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cti/mhe/encoder.h"

#include <cmath>

#include "cti/common/error.h"
#include "gtest/gtest.h"
#include "mhe_fixtures.h"

namespace cti::mhe {
namespace {

using testing::MaxAbsDiff;
using testing::RandomSlots;
using testing::ToyContext;

TEST(EncoderTest, ZeroVectorIsZeroPolynomial) {
  const auto& ctx = *ToyContext();
  for (int scale : {0, 30, 60}) {
    std::vector<double> zeros(ctx.slots(), 0.0);
    for (i128 c : EncodeCoefficients(ctx, zeros, scale)) ASSERT_EQ(c, 0);
  }
}

TEST(EncoderTest, ConstantIsConstantPolynomial) {
  const auto& ctx = *ToyContext();
  const double c = 0.123456789;
  std::vector<double> v(ctx.slots(), c);
  std::vector<i128> coeffs = EncodeCoefficients(ctx, v, 30);
  EXPECT_EQ(coeffs[0], static_cast<i128>(std::llround(c * std::ldexp(1.0, 30))));
  for (size_t i = 1; i < coeffs.size(); ++i) {
    ASSERT_LE(coeffs[i] < 0 ? -coeffs[i] : coeffs[i], 1) << i;
  }
}

TEST(EncoderTest, RoundTripWithinTolerance) {
  const auto& ctx = *ToyContext();
  for (double bound : {1.0, 256.0}) {
    const std::vector<double> v = RandomSlots(ctx.slots(), bound, 11);
    const std::vector<double> back = Decode(ctx, Encode(ctx, v, 30));
    EXPECT_LE(MaxAbsDiff(back, v), 1e-5) << bound;
  }
}

TEST(EncoderTest, ShortInputPadsWithZeros) {
  const auto& ctx = *ToyContext();
  const std::vector<double> v = {1.5, -2.25, 3.0};
  const std::vector<double> back = Decode(ctx, Encode(ctx, v, 30));
  ASSERT_EQ(back.size(), ctx.slots());
  EXPECT_NEAR(back[1], -2.25, 1e-7);
  EXPECT_NEAR(back[100], 0.0, 1e-7);
}

TEST(EncoderTest, IntegerValuesRoundExactlyAtDeltaSquared) {
  const auto& ctx = *ToyContext();
  std::mt19937_64 g(5);
  std::vector<double> v(ctx.slots());
  for (double& x : v) x = static_cast<double>(static_cast<int>(g() % 2001) - 1000);
  const std::vector<double> back = Decode(ctx, Encode(ctx, v, 60));
  for (size_t i = 0; i < v.size(); ++i) ASSERT_EQ(std::round(back[i]), v[i]);
}

TEST(EncoderTest, RingProductIsSlotwiseProduct) {
  const auto& ctx = *ToyContext();
  const std::vector<double> a = RandomSlots(ctx.slots(), 2.0, 1);
  const std::vector<double> b = RandomSlots(ctx.slots(), 2.0, 2);
  Plaintext pa = Encode(ctx, a, 30), pb = Encode(ctx, b, 30);
  Plaintext prod{MulNtt(ctx, pa.poly, pb.poly), 60};
  std::vector<double> want(ctx.slots());
  for (size_t i = 0; i < want.size(); ++i) want[i] = a[i] * b[i];
  EXPECT_LE(MaxAbsDiff(Decode(ctx, prod), want), 1e-6);
}

TEST(EncoderTest, OversizedValuesAreRejected) {
  const auto& ctx = *ToyContext();
  const std::vector<double> v = {std::ldexp(1.0, 100)};
  try {
    EncodeCoefficients(ctx, v, 30);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHeadroom);
  }
  EXPECT_THROW(EncodeCoefficients(ctx, std::vector<double>(ctx.slots() + 1), 30), Error);
}

}  // namespace
}  // namespace cti::mhe
