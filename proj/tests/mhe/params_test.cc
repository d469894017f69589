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


#include "cti/mhe/params.h"

#include "cti/common/error.h"
#include "cti/mhe/primes.h"
#include "gtest/gtest.h"

namespace cti::mhe {
namespace {

TEST(ParamsTest, ToyPreset) {
  const RingParams p = GenParams("toy");
  EXPECT_EQ(p.n, 4096u);
  EXPECT_EQ(p.q_primes.size(), 3u);
  EXPECT_EQ(p.log_delta, 30);
  EXPECT_TRUE(p.reduced_security);
  EXPECT_EQ(PolyPayloadBytes(p.n, p.q_primes.size(), 1), 196608u);
  for (uint64_t q : p.q_primes) {
    EXPECT_TRUE(IsPrime(q));
    EXPECT_EQ(q % (2 * p.n), 1u);
    EXPECT_LT(q, uint64_t{1} << 54);
    EXPECT_GT(q, uint64_t{1} << 53);
  }
}

TEST(ParamsTest, StandardPresetFitsTheSecurityBudget) {
  const RingParams p = GenParams("STANDARD");
  EXPECT_EQ(p.n, 8192u);
  EXPECT_FALSE(p.reduced_security);
  EXPECT_NEAR(LogQ(p), 162.0, 1.0);
  // Homomorphic-encryption standard, ternary secrets, 128-bit classical:
  // log QP <= 218 for N = 8192. Key material uses QP, so that is the bound.
  EXPECT_LE(LogQP(p), 218.0);
}

TEST(ParamsTest, UnknownPresetIsRejected) {
  try {
    GenParams("X");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(ParamsTest, HeadroomViolationIsRejected) {
  try {
    MakeParams(4096, 1, 30);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHeadroom);
  }
  EXPECT_NO_THROW(MakeParams(4096, 1, 30, 54, /*check_headroom=*/false));
}

TEST(ParamsTest, PrimesAreDistinctAndIdIsStable) {
  const RingParams a = GenParams("toy");
  const RingParams b = GenParams("toy");
  EXPECT_EQ(ParamsId(a), ParamsId(b));
  EXPECT_NE(ParamsId(a), ParamsId(GenParams("standard")));
  for (uint64_t q : a.q_primes) EXPECT_NE(q, a.special_prime);
}

TEST(PrimesTest, MillerRabinAgreesWithTrialDivision) {
  for (uint64_t n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        trial = false;
        break;
      }
    }
    ASSERT_EQ(IsPrime(n), trial) << n;
  }
  EXPECT_TRUE(IsPrime(0xffffffffffffffc5ULL));  // 2^64 - 59
  EXPECT_FALSE(IsPrime(3215031751ULL));         // strong pseudoprime to 2,3,5,7
}

TEST(PrimesTest, PrimitiveRootHasExactOrder) {
  const uint64_t q = GenParams("toy").q_primes[0];
  const uint64_t w = FindPrimitiveRoot(8192, q);
  EXPECT_EQ(PowMod(w, 8192, q), 1u);
  EXPECT_EQ(PowMod(w, 4096, q), q - 1);
}

}  // namespace
}  // namespace cti::mhe
