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


#ifndef CTI_TESTS_COMMON_MHE_FIXTURES_H_
#define CTI_TESTS_COMMON_MHE_FIXTURES_H_

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <vector>

#include "cti/mhe/collective.h"
#include "cti/mhe/keys.h"
#include "cti/mhe/params.h"
#include "cti/mhe/ring.h"

namespace cti::testing {

inline const mhe::ContextPtr& ToyContext() {
  static const mhe::ContextPtr ctx = mhe::Context::Make(mhe::GenParams("toy"));
  return ctx;
}

struct PartyKeys {
  std::vector<mhe::SecretKey> shares;
  mhe::SecretKey sum;
  mhe::PublicKey pk;
  mhe::RelinKey rlk;
};

// Runs CKG and RKG through the share functions directly (no network).
inline PartyKeys MakePartyKeys(const mhe::Context& ctx, size_t parties,
                               uint64_t seed, bool with_rlk = true) {
  PartyKeys k;
  mhe::SessionId sid{};
  sid[0] = static_cast<uint8_t>(seed);
  for (size_t i = 0; i < parties; ++i) {
    mhe::Xof xof(seed * 1000 + i, "test-party");
    k.shares.push_back(mhe::KeygenSecret(ctx, xof));
  }
  k.sum = mhe::SumSecrets(ctx, k.shares);
  const mhe::RingElement crs = mhe::CkgCrs(ctx, sid);
  std::vector<mhe::RingElement> acc;
  for (size_t i = 0; i < parties; ++i) {
    mhe::Xof xof(seed * 1000 + i, "test-ckg");
    mhe::AccumulateShare(ctx, acc, {mhe::CkgShare(ctx, k.shares[i], crs, xof)});
  }
  k.pk = mhe::CkgCombine(acc[0], crs);
  if (!with_rlk) return k;
  std::vector<mhe::RingElement> r1;
  for (size_t i = 0; i < parties; ++i) {
    mhe::Xof xof(seed * 1000 + i, "test-rkg1");
    mhe::AccumulateShare(ctx, r1, mhe::RkgRound1Share(ctx, k.shares[i], k.pk, xof));
  }
  std::vector<mhe::RingElement> r2;
  for (size_t i = 0; i < parties; ++i) {
    mhe::Xof xof(seed * 1000 + i, "test-rkg2");
    mhe::AccumulateShare(ctx, r2, mhe::RkgRound2Share(ctx, k.shares[i], r1, xof));
  }
  k.rlk = mhe::RkgCombine(ctx, r2);
  return k;
}

inline std::vector<double> RandomSlots(size_t n, double bound, uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> dist(-bound, bound);
  std::vector<double> v(n);
  for (double& x : v) x = dist(g);
  return v;
}

inline double MaxAbsDiff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    m = std::max(m, std::fabs(a[i] - b[i]));
  }
  return m;
}

// max_i |a_i - b_i| / max(1, |b_i|)
inline double MaxRelDiff(const std::vector<double>& got, const std::vector<double>& want) {
  double m = 0.0;
  for (size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    m = std::max(m, std::fabs(got[i] - want[i]) / std::max(1.0, std::fabs(want[i])));
  }
  return m;
}

inline double Pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const size_t n = std::min(a.size(), b.size());
  long double ma = 0, mb = 0;
  for (size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  long double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < n; ++i) {
    const long double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0 || sbb == 0) return 0.0;
  return static_cast<double>(sab / std::sqrt(saa * sbb));
}

}  // namespace cti::testing

#endif  // CTI_TESTS_COMMON_MHE_FIXTURES_H_
