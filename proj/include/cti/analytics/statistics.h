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


#ifndef CTI_ANALYTICS_STATISTICS_H_
#define CTI_ANALYTICS_STATISTICS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cti/analytics/logreg.h"
#include "cti/analytics/secure.h"
#include "cti/pipeline/misp.h"

namespace cti::analytics {

// Inclusive bounds on the event date (YYYY-MM-DD); empty means open.
struct DateFilter {
  std::string from;
  std::string to;
  bool Accepts(const std::string& date) const;
};

// Per taxonomy entry, the number of accepted events whose info or any
// attribute value equals the entry (case-insensitive, trimmed). An event
// counts at most once per entry.
std::vector<int64_t> CountTaxonomy(const std::vector<std::string>& taxonomy,
                                   const std::vector<pipeline::MispEvent>& events,
                                   const DateFilter& filter);

// SPMD. Every node encrypts its counts (one slot per entry, scale delta),
// the ciphertexts are summed over the tree and key-switched to
// `querier_pk`; only `recipient` gets the ciphertext. Throws
// kInvalidArgument when the taxonomy exceeds the slot count.
std::vector<mhe::Ciphertext> SecureHistogram(net::Party& p, const MheKeys& k,
                                             const std::vector<std::string>& taxonomy,
                                             const std::vector<pipeline::MispEvent>& events,
                                             const DateFilter& filter,
                                             const mhe::PublicKey& querier_pk,
                                             uint32_t recipient, mhe::Xof& xof,
                                             std::string_view tag = "hist");

// Querier side: decode and round to integers.
std::vector<int64_t> DecodeCounts(const mhe::Context& ctx, const mhe::SecretKey& sk,
                                  const std::vector<mhe::Ciphertext>& cts, size_t entries);

// SPMD. Secure sums of (count, sum x, sum x^2) per feature, decrypted to
// every participant. Constant features are flagged. Throws
// kInvalidArgument on an empty global dataset.
FeatureStats FederatedStandardization(net::Party& p, const MheKeys& k, const Dataset& local,
                                      mhe::Xof& xof, std::string_view tag = "stats");

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_STATISTICS_H_
