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


#ifndef CTI_NET_PROTOCOLS_H_
#define CTI_NET_PROTOCOLS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "cti/mhe/ciphertext.h"
#include "cti/mhe/collective.h"
#include "cti/mhe/keys.h"
#include "cti/mhe/ring.h"
#include "cti/mhe/xof.h"
#include "cti/net/endpoint.h"

namespace cti::net {

// Networked runs of the collective protocols. Shares travel up the
// spanning tree rooted at node 0 (or the recipient) and are summed at each
// hop; public results are broadcast back down. `xof` is the party's private
// randomness; CRS values derive from the session id.

mhe::PublicKey NetCkg(Party& p, const mhe::Context& ctx, const mhe::SecretKey& sk,
                      mhe::Xof& xof);

mhe::RelinKey NetRkg(Party& p, const mhe::Context& ctx, const mhe::SecretKey& sk,
                     const mhe::PublicKey& pk, mhe::Xof& xof);

// Plaintext only at `recipient`.
std::optional<mhe::Plaintext> NetDecrypt(Party& p, const mhe::Context& ctx,
                                         const mhe::SecretKey& sk, const mhe::Ciphertext& ct,
                                         uint32_t recipient, mhe::Xof& xof);

// Ciphertext under `target` only at `recipient`.
std::optional<mhe::Ciphertext> NetPcks(Party& p, const mhe::Context& ctx,
                                       const mhe::SecretKey& sk, const mhe::Ciphertext& ct,
                                       const mhe::PublicKey& target, uint32_t recipient,
                                       mhe::Xof& xof);

// Every node gets the refreshed, transformed ciphertext. `round` names the
// call site so several refreshes can run in one session; the CRS is bound
// to it.
mhe::Ciphertext NetRefresh(Party& p, const mhe::Context& ctx, const mhe::SecretKey& sk,
                           const mhe::Ciphertext& ct, const mhe::LinearTransform& t,
                           int plain_bound_bits, std::string_view round, mhe::Xof& xof);

// Homomorphic sum of one ciphertext per node, delivered at `root`.
std::optional<mhe::Ciphertext> NetAggregate(Party& p, const mhe::Context& ctx,
                                            const mhe::Ciphertext& ct, uint32_t root,
                                            std::string_view round);
// Same, then broadcast to every node.
mhe::Ciphertext NetAggregateAll(Party& p, const mhe::Context& ctx, const mhe::Ciphertext& ct,
                                std::string_view round);

// Batched forms: one reduce and one broadcast for the whole list, so a
// list of k ciphertexts costs the same number of network rounds as one.
// The CRS of entry i is bound to (round, i).
std::vector<mhe::Ciphertext> NetRefreshBatch(Party& p, const mhe::Context& ctx,
                                             const mhe::SecretKey& sk,
                                             const std::vector<mhe::Ciphertext>& cts,
                                             const mhe::LinearTransform& t,
                                             int plain_bound_bits, std::string_view round,
                                             mhe::Xof& xof);
// Plaintexts only at `recipient` (empty elsewhere).
std::vector<mhe::Plaintext> NetDecryptBatch(Party& p, const mhe::Context& ctx,
                                            const mhe::SecretKey& sk,
                                            const std::vector<mhe::Ciphertext>& cts,
                                            uint32_t recipient, std::string_view round,
                                            mhe::Xof& xof);
// Ciphertexts under `target` only at `recipient` (empty elsewhere).
std::vector<mhe::Ciphertext> NetPcksBatch(Party& p, const mhe::Context& ctx,
                                          const mhe::SecretKey& sk,
                                          const std::vector<mhe::Ciphertext>& cts,
                                          const mhe::PublicKey& target, uint32_t recipient,
                                          std::string_view round, mhe::Xof& xof);
std::vector<mhe::Ciphertext> NetAggregateAllBatch(Party& p, const mhe::Context& ctx,
                                                  const std::vector<mhe::Ciphertext>& cts,
                                                  std::string_view round);

Bytes EncodeCiphertexts(const mhe::Context& ctx, const std::vector<mhe::Ciphertext>& cts);
std::vector<mhe::Ciphertext> DecodeCiphertexts(const mhe::Context& ctx, const Bytes& bytes);

}  // namespace cti::net

#endif  // CTI_NET_PROTOCOLS_H_
