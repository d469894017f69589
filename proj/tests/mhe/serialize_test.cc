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


#include "cti/mhe/serialize.h"

#include <fstream>
#include <iterator>

#include "cti/common/error.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/evaluator.h"
#include "gtest/gtest.h"
#include "mhe_fixtures.h"

namespace cti::mhe {
namespace {

std::vector<uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(SerializeTest, GoldenPolynomialLayout) {
  const ContextPtr ctx = Context::Make(MakeParams(8, 3, 10, 54, false));
  Ciphertext ct;
  ct.params_id = ctx->params_id();
  ct.log_scale = 30;
  for (size_t p = 0; p < 2; ++p) {
    RingElement e(8, 3, false);
    for (size_t j = 0; j < 3; ++j) {
      for (size_t i = 0; i < 8; ++i) e.limb(j)[i] = (1000 * p + 100 * j + i) % ctx->modulus(j);
    }
    ToNtt(*ctx, e);
    ct.parts.push_back(e);
  }
  const std::vector<uint8_t> golden = ReadFile(CTI_TEST_DATA_DIR "/golden_poly_n8.bin");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(SerializeCiphertext(*ctx, ct), golden);
  EXPECT_EQ(DeserializeCiphertext(*ctx, golden), ct);
}

TEST(SerializeTest, PayloadLengthIsExact) {
  const auto& ctx = *testing::ToyContext();
  const auto keys = testing::MakePartyKeys(ctx, 1, 3, false);
  Xof xof(1, "ser");
  const Ciphertext ct =
      Encrypt(ctx, keys.pk, Encode(ctx, testing::RandomSlots(10, 1.0, 1), 30), xof);
  const std::vector<uint8_t> bytes = SerializeCiphertext(ctx, ct);
  EXPECT_EQ(bytes.size() - kPolyHeaderBytes, 4096u * 3 * 2 * 8);
  EXPECT_EQ(bytes.size() - kPolyHeaderBytes, PolyPayloadBytes(4096, 3, 1));
  EXPECT_EQ(DeserializeCiphertext(ctx, bytes), ct);

  const Ciphertext t = Tensor(ctx, ct, ct);
  EXPECT_EQ(SerializeCiphertext(ctx, t).size() - kPolyHeaderBytes,
            PolyPayloadBytes(4096, 3, 2));
}

TEST(SerializeTest, BandwidthEndpointsFollowTheFormula) {
  EXPECT_EQ(PolyPayloadBytes(16384, 1, 1), 262144u);
  EXPECT_EQ(PolyPayloadBytes(65536, 30, 1), 31457280u);
}

TEST(SerializeTest, KeysRoundTrip) {
  const auto& ctx = *testing::ToyContext();
  const auto keys = testing::MakePartyKeys(ctx, 2, 4);
  EXPECT_EQ(DeserializePublicKey(ctx, SerializePublicKey(ctx, keys.pk)), keys.pk);
  EXPECT_EQ(DeserializeRelinKey(ctx, SerializeRelinKey(ctx, keys.rlk)), keys.rlk);
  const SecretKey sk = DeserializeSecretKey(ctx, SerializeSecretKey(ctx, keys.shares[0]));
  EXPECT_EQ(sk.coeffs, keys.shares[0].coeffs);
  EXPECT_EQ(sk.s, keys.shares[0].s);
}

TEST(SerializeTest, MalformedInputIsRejected) {
  const auto& ctx = *testing::ToyContext();
  std::vector<uint8_t> bad = {'M', 'H', 'E', '2', 0, 0};
  EXPECT_THROW(DeserializeCiphertext(ctx, bad), Error);
  const ContextPtr small = Context::Make(MakeParams(8, 3, 10, 54, false));
  const std::vector<uint8_t> golden = ReadFile(CTI_TEST_DATA_DIR "/golden_poly_n8.bin");
  EXPECT_THROW(DeserializeCiphertext(ctx, golden), Error);  // wrong N
  std::vector<uint8_t> truncated(golden.begin(), golden.end() - 1);
  EXPECT_THROW(DeserializeCiphertext(*small, truncated), Error);
  std::vector<uint8_t> out_of_range = golden;
  for (size_t i = 0; i < 8; ++i) out_of_range[kPolyHeaderBytes + i] = 0xff;
  EXPECT_THROW(DeserializeCiphertext(*small, out_of_range), Error);
}

}  // namespace
}  // namespace cti::mhe
