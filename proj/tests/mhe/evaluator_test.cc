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


#include "cti/mhe/evaluator.h"

#include "cti/common/error.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/serialize.h"
#include "gtest/gtest.h"
#include "mhe_fixtures.h"

namespace cti::mhe {
namespace {

using testing::MaxAbsDiff;
using testing::MaxRelDiff;
using testing::RandomSlots;

class EvaluatorTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    keys_ = new testing::PartyKeys(testing::MakePartyKeys(ctx(), 3, 77));
  }
  static void TearDownTestSuite() {
    delete keys_;
    keys_ = nullptr;
  }
  static const Context& ctx() { return *testing::ToyContext(); }

  Ciphertext Enc(const std::vector<double>& v, int log_scale = 30) {
    return Encrypt(ctx(), keys_->pk, Encode(ctx(), v, log_scale), xof_);
  }
  std::vector<double> Dec(const Ciphertext& ct) {
    return Decode(ctx(), DecryptDebug(ctx(), keys_->sum, ct, true));
  }
  std::vector<double> Slots(double bound, uint64_t seed) {
    return RandomSlots(ctx().slots(), bound, seed);
  }

  static testing::PartyKeys* keys_;
  Xof xof_{123, "evaluator-test"};
};

testing::PartyKeys* EvaluatorTest::keys_ = nullptr;

TEST_F(EvaluatorTest, EncryptZerosDecryptsToZeros) {
  const std::vector<double> zeros(ctx().slots(), 0.0);
  EXPECT_LE(MaxAbsDiff(Dec(Enc(zeros)), zeros), 1e-4);
}

TEST_F(EvaluatorTest, RoundTripWithinTolerance) {
  const std::vector<double> v = Slots(1.0, 1);
  EXPECT_LE(MaxAbsDiff(Dec(Enc(v)), v), 1e-4);
  const std::vector<double> big = Slots(256.0, 2);
  EXPECT_LE(MaxAbsDiff(Dec(Enc(big)), big), 1e-4);
}

TEST_F(EvaluatorTest, EncryptionIsRandomized) {
  const std::vector<double> v = Slots(1.0, 3);
  const Plaintext pt = Encode(ctx(), v, 30);
  const Ciphertext a = Encrypt(ctx(), keys_->pk, pt, xof_);
  const Ciphertext b = Encrypt(ctx(), keys_->pk, pt, xof_);
  EXPECT_NE(SerializeCiphertext(ctx(), a), SerializeCiphertext(ctx(), b));
}

TEST_F(EvaluatorTest, DegreeTwoDecryptsWithTheSquareTerm) {
  const std::vector<double> v = Slots(2.0, 4), w = Slots(2.0, 5);
  const Ciphertext t = Tensor(ctx(), Enc(v), Enc(w));
  ASSERT_EQ(t.degree(), 2u);
  EXPECT_EQ(t.log_scale, 60);
  std::vector<double> want(v.size());
  for (size_t i = 0; i < v.size(); ++i) want[i] = v[i] * w[i];
  EXPECT_LE(MaxRelDiff(Dec(t), want), 1e-3);
  EXPECT_THROW(DecryptDebug(ctx(), keys_->sum, t, false), Error);
}

TEST_F(EvaluatorTest, WrongKeyGivesUncorrelatedSlots) {
  const std::vector<double> v = Slots(1.0, 6);
  Xof other(999, "wrong");
  const SecretKey wrong = KeygenSecret(ctx(), other);
  const std::vector<double> got =
      Decode(ctx(), DecryptDebug(ctx(), wrong, Enc(v)));
  EXPECT_LT(std::fabs(testing::Pearson(got, v)), 0.1);
}

TEST_F(EvaluatorTest, AdditionMatchesPlaintextSum) {
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> v = Slots(4.0, 1000 + trial), w = Slots(4.0, 2000 + trial);
    std::vector<double> want(v.size());
    for (size_t i = 0; i < v.size(); ++i) want[i] = v[i] + w[i];
    ASSERT_LE(MaxAbsDiff(Dec(Add(ctx(), Enc(v), Enc(w))), want), 2e-4) << trial;
  }
}

TEST_F(EvaluatorTest, AdditiveIdentityAndInverse) {
  const std::vector<double> v = Slots(3.0, 7);
  std::vector<double> neg(v.size()), zeros(v.size(), 0.0);
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  EXPECT_LE(MaxAbsDiff(Dec(Add(ctx(), Enc(v), Enc(zeros))), v), 2e-4);
  EXPECT_LE(MaxAbsDiff(Dec(Add(ctx(), Enc(v), Enc(neg))), zeros), 2e-4);
  EXPECT_LE(MaxAbsDiff(Dec(Add(ctx(), Enc(v), Negate(ctx(), Enc(v)))), zeros), 2e-4);
}

TEST_F(EvaluatorTest, AddPlainRequiresEqualScale) {
  const std::vector<double> v = Slots(1.0, 8), w = Slots(1.0, 9);
  std::vector<double> want(v.size());
  for (size_t i = 0; i < v.size(); ++i) want[i] = v[i] + w[i];
  EXPECT_LE(MaxAbsDiff(Dec(AddPlain(ctx(), Enc(v), Encode(ctx(), w, 30))), want), 2e-4);
  try {
    AddPlain(ctx(), Enc(v), Encode(ctx(), w, 60));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScaleMismatch);
  }
}

TEST_F(EvaluatorTest, ScaleMismatchIsRejected) {
  const std::vector<double> v = Slots(1.0, 10);
  try {
    Add(ctx(), Enc(v, 30), Enc(v, 60));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScaleMismatch);
  }
}

TEST_F(EvaluatorTest, MulPlainIdentityAndAnnihilation) {
  const std::vector<double> v = Slots(2.0, 11);
  const std::vector<double> ones(v.size(), 1.0), zeros(v.size(), 0.0);
  const Ciphertext one = MulPlain(ctx(), Enc(v), Encode(ctx(), ones, 30));
  EXPECT_EQ(one.log_scale, 60);
  EXPECT_LE(MaxAbsDiff(Dec(one), v), 1e-4);
  EXPECT_LE(MaxAbsDiff(Dec(MulPlain(ctx(), Enc(v), Encode(ctx(), zeros, 30))), zeros),
            1e-4);
}

TEST_F(EvaluatorTest, MulPlainMatchesPointwiseProduct) {
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> v = Slots(4.0, 3000 + trial), w = Slots(4.0, 4000 + trial);
    std::vector<double> want(v.size());
    for (size_t i = 0; i < v.size(); ++i) want[i] = v[i] * w[i];
    ASSERT_LE(MaxRelDiff(Dec(MulPlain(ctx(), Enc(v), Encode(ctx(), w, 30))), want), 1e-3)
        << trial;
  }
}

TEST_F(EvaluatorTest, MulCtIdentityAndAnnihilation) {
  const std::vector<double> v = Slots(2.0, 12);
  const std::vector<double> ones(v.size(), 1.0), zeros(v.size(), 0.0);
  const Ciphertext one = MulCt(ctx(), Enc(ones), Enc(v), keys_->rlk);
  EXPECT_EQ(one.degree(), 1u);
  EXPECT_EQ(one.log_scale, 60);
  EXPECT_LE(MaxRelDiff(Dec(one), v), 1e-3);
  EXPECT_LE(MaxAbsDiff(Dec(MulCt(ctx(), Enc(zeros), Enc(v), keys_->rlk)), zeros), 1e-3);
}

TEST_F(EvaluatorTest, MulCtMatchesPointwiseProduct) {
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> v = Slots(4.0, 5000 + trial), w = Slots(4.0, 6000 + trial);
    std::vector<double> want(v.size());
    for (size_t i = 0; i < v.size(); ++i) want[i] = v[i] * w[i];
    ASSERT_LE(MaxRelDiff(Dec(MulCt(ctx(), Enc(v), Enc(w), keys_->rlk)), want), 1e-3)
        << trial;
  }
}

TEST_F(EvaluatorTest, MissingRelinKeyIsRejected) {
  const std::vector<double> v = Slots(1.0, 13);
  EXPECT_THROW(MulCt(ctx(), Enc(v), Enc(v), RelinKey{}), Error);
}

TEST_F(EvaluatorTest, HeadroomOverflowIsRejected) {
  const std::vector<double> v = Slots(1.0, 14);
  const Ciphertext c90 = MulPlain(ctx(), Enc(v, 60), Encode(ctx(), v, 30));
  EXPECT_EQ(c90.log_scale, 90);
  try {
    MulPlain(ctx(), c90, Encode(ctx(), v, 30));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHeadroom);
  }
}

}  // namespace
}  // namespace cti::mhe
