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


#ifndef CTI_ANALYTICS_PREDICT_H_
#define CTI_ANALYTICS_PREDICT_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "cti/analytics/fed_train.h"

namespace cti::analytics {

// Query columns encrypted under the collective key: [chunk][feature], rows
// packed from slot 0.
using EncryptedQuery = std::vector<std::vector<mhe::Ciphertext>>;
EncryptedQuery EncryptQuery(const mhe::Context& ctx, const mhe::PublicKey& pk,
                            const Dataset& query, mhe::Xof& xof);

// SPMD. `origin` holds the query (plaintext `query`, or `enc_query`; the
// other nodes pass nullptr) and forms u = sum_j W_j x_j. The collective
// then evaluates the activation and key-switches the probabilities to
// `querier_pk`; only `recipient` gets the result (one ciphertext per
// chunk of N/2 rows).
std::vector<mhe::Ciphertext> PredictEncrypted(net::Party& p, const MheKeys& k,
                                              const EncryptedModel& model,
                                              const Dataset* query, uint32_t origin,
                                              const PolySigmoid& poly,
                                              const mhe::PublicKey& querier_pk,
                                              uint32_t recipient, mhe::Xof& xof,
                                              std::string_view tag = "predict");
std::vector<mhe::Ciphertext> PredictEncrypted(net::Party& p, const MheKeys& k,
                                              const EncryptedModel& model,
                                              const EncryptedQuery* enc_query,
                                              uint32_t origin, const PolySigmoid& poly,
                                              const mhe::PublicKey& querier_pk,
                                              uint32_t recipient, mhe::Xof& xof,
                                              std::string_view tag = "predict");

// Querier side: the first `rows` probabilities.
std::vector<double> DecryptProbabilities(const mhe::Context& ctx, const mhe::SecretKey& sk,
                                         const std::vector<mhe::Ciphertext>& cts, size_t rows);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_PREDICT_H_
