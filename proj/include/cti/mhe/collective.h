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


#ifndef CTI_MHE_COLLECTIVE_H_
#define CTI_MHE_COLLECTIVE_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cti/mhe/ciphertext.h"
#include "cti/mhe/keys.h"
#include "cti/mhe/ring.h"
#include "cti/mhe/xof.h"

namespace cti::mhe {

// Party-local share generation and public combination for the interactive
// protocols. Shares are summed (order-independent) before combination; the
// network layer decides where the sums happen.

enum class ProtocolKind : uint8_t {
  kCkg = 1,
  kRkg = 2,
  kDecrypt = 3,
  kPcks = 4,
  kRefresh = 5,
};

// "ckg/1", "rkg/1", "rkg/2", "dec/1", "pcks/1", "ref/1".
std::string_view RoundLabel(ProtocolKind kind, int round);

struct ProtocolShare {
  uint32_t party = 0;
  ProtocolKind kind = ProtocolKind::kCkg;
  uint8_t round = 1;
  std::vector<RingElement> payload;
};

std::vector<uint8_t> SerializeShare(const Context& ctx, const ProtocolShare& share);
ProtocolShare DeserializeShare(const Context& ctx, std::span<const uint8_t> bytes);

// acc += share, elementwise. An empty acc is initialized with a copy.
void AccumulateShare(const Context& ctx, std::vector<RingElement>& acc,
                     const std::vector<RingElement>& share);
std::vector<RingElement> SumShares(const Context& ctx,
                                   std::span<const std::vector<RingElement>> shares);

// --- Collective key generation (one round, over QP). ---
RingElement CkgCrs(const Context& ctx, const SessionId& session);
// -s_i a + e_i
RingElement CkgShare(const Context& ctx, const SecretKey& sk,
                     const RingElement& crs, Xof& xof);
PublicKey CkgCombine(const RingElement& share_sum, const RingElement& crs);

// --- Relinearization key generation (two rounds, over QP). ---
// Round 1: for each gadget term j, (v p0 + s_i P g_j + e, v p1 + e),
// flattened as [c0_0, c1_0, c0_1, c1_1, ...].
std::vector<RingElement> RkgRound1Share(const Context& ctx, const SecretKey& sk,
                                        const PublicKey& pk, Xof& xof);
// Round 2: (s_i C_{j,0} + e, s_i C_{j,1} + e) for the round-1 aggregate C.
std::vector<RingElement> RkgRound2Share(const Context& ctx, const SecretKey& sk,
                                        const std::vector<RingElement>& round1_sum,
                                        Xof& xof);
RelinKey RkgCombine(const Context& ctx, const std::vector<RingElement>& round2_sum);

// --- Collective decryption (one round). ---
void CheckDecryptHeadroom(const Context& ctx, int log_scale, size_t parties);
// s_i c1 + flooding noise of decrypt_smudge_bits.
RingElement DecryptShare(const Context& ctx, const SecretKey& sk,
                         const Ciphertext& ct, Xof& xof);
Plaintext DecryptCombine(const Context& ctx, const Ciphertext& ct,
                         const RingElement& share_sum);

// --- Public-key switch to a target key (one round). ---
// (s_i c1 + v_i t0 + e, v_i t1 + e)
std::vector<RingElement> PcksShare(const Context& ctx, const SecretKey& sk,
                                   const Ciphertext& ct, const PublicKey& target,
                                   Xof& xof);
Ciphertext PcksCombine(const Context& ctx, const Ciphertext& ct,
                       const std::vector<RingElement>& share_sum);

// --- Collective refresh with a public linear transform (one round). ---
struct LinearTransform {
  enum class Kind { kIdentity, kSlotSumReplicate, kDiagonalScale };
  Kind kind = Kind::kIdentity;
  // Scale division by 2^log_ratio.
  int log_ratio = 0;
  // Slot multipliers for kDiagonalScale (missing slots are zero) and the
  // scale they are encoded at.
  std::vector<double> diag;
  int diag_log_scale = 30;

  static LinearTransform Identity(int log_ratio);
  static LinearTransform SlotSum(int log_ratio);
  static LinearTransform Diagonal(std::vector<double> d, int log_ratio,
                                  int diag_log_scale = 30);
};

// Coefficient bound (bits) to declare for a ciphertext whose slots are
// bounded by 2^value_bound_bits at scale 2^log_scale.
int DefaultPlainBoundBits(const Context& ctx, int log_scale);

// Throws kHeadroom unless parties * 2^(plain + lambda + 1) * ||L|| < Q/4.
void CheckRefreshHeadroom(const Context& ctx, const LinearTransform& t,
                          int plain_bound_bits, size_t parties);

RingElement RefreshCrs(const Context& ctx, const SessionId& session);

// h0 = s_i c1 + M_i + e, h1 = -s_i a' - L(M_i) + e', where
// M_i = D * M~_i with D = 2^log_ratio (times the diagonal scale).
std::vector<RingElement> RefreshShare(const Context& ctx, const SecretKey& sk,
                                      const Ciphertext& ct,
                                      const LinearTransform& t,
                                      int plain_bound_bits,
                                      const RingElement& crs, Xof& xof);
// (L(c0 + sum h0) + sum h1, a').
Ciphertext RefreshCombine(const Context& ctx, const Ciphertext& ct,
                          const LinearTransform& t,
                          const std::vector<RingElement>& share_sum,
                          const RingElement& crs);

// The integer map applied to a centered lifted plaintext (exposed for
// tests): division by D with round-half-up after the slot-domain map.
std::vector<Int256> ApplyTransform(const Context& ctx, const LinearTransform& t,
                                   const std::vector<Int256>& lifted);

}  // namespace cti::mhe

#endif  // CTI_MHE_COLLECTIVE_H_
