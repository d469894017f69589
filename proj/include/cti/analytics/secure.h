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


#ifndef CTI_ANALYTICS_SECURE_H_
#define CTI_ANALYTICS_SECURE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cti/analytics/sigmoid.h"
#include "cti/mhe/ciphertext.h"
#include "cti/mhe/keys.h"
#include "cti/mhe/ring.h"
#include "cti/mhe/xof.h"
#include "cti/net/endpoint.h"

namespace cti::analytics {

// One node's key material for a session.
struct MheKeys {
  const mhe::Context* ctx = nullptr;
  mhe::SecretKey sk;
  mhe::PublicKey pk;
  mhe::RelinKey rlk;
  bool has_rlk = false;
};

// Fresh secret from `xof`, then collective key generation (and the
// relinearization key when asked).
MheKeys SetupKeys(net::Party& p, const mhe::Context& ctx, mhe::Xof& xof, bool with_rlk = true);

// Every node learns every node's value. Used for public metadata only
// (row counts, column counts).
std::vector<size_t> ExchangeCounts(net::Party& p, size_t local, std::string_view round);

// Element-wise sum of every node's vector: encrypted, aggregated up the
// tree, collectively decrypted at node 0 and the plaintext result sent to
// all participants. Values are carried at scale 2^log_scale.
std::vector<double> SecureSum(net::Party& p, const MheKeys& k, std::span<const double> local,
                              int log_scale, std::string_view round, mhe::Xof& xof);

// Rows of all nodes laid end to end (node order), cut into slot-sized
// chunks. A node only fills the slots of its own rows.
struct SlotLayout {
  size_t slots = 0;
  size_t offset = 0;
  size_t local_rows = 0;
  size_t total_rows = 0;

  size_t chunks() const { return total_rows == 0 ? 0 : (total_rows + slots - 1) / slots; }
  // Per chunk, a full slot vector with this node's values in place.
  std::vector<std::vector<double>> Scatter(std::span<const double> local_values) const;
};
SlotLayout MakeLayout(std::span<const size_t> counts, uint32_t self, size_t slots);

// p(u) for every chunk, from u at scale 2^(2 log_delta) (same at every
// node) to p(u) at the same scale. Degree 1 takes one refresh per chunk,
// degree 3 two. Other degrees throw kInvalidArgument.
std::vector<mhe::Ciphertext> EvalPolySigmoid(net::Party& p, const MheKeys& k,
                                             const std::vector<mhe::Ciphertext>& u,
                                             const PolySigmoid& poly, std::string_view round,
                                             mhe::Xof& xof, size_t* refreshes = nullptr);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_SECURE_H_
