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


#ifndef CTI_ANALYTICS_FED_TRAIN_H_
#define CTI_ANALYTICS_FED_TRAIN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cti/analytics/logreg.h"
#include "cti/analytics/secure.h"

namespace cti::analytics {

// Logistic model under the collective key: W[j] holds weight j in every
// slot at scale delta.
struct EncryptedModel {
  std::vector<mhe::Ciphertext> weights;
  std::vector<std::string> feature_names;
  int iterations = 0;
  uint64_t config_hash = 0;
};

struct FedTrainStats {
  size_t refreshes = 0;        // ciphertexts refreshed, all iterations
  size_t refresh_rounds = 0;   // batched refresh protocol runs
  size_t aggregate_rounds = 0;
  size_t chunks = 0;
  double max_abs_u = 0.0;      // debug mode only, at node 0
};

// Refreshed ciphertexts per iteration: `chunks` for u, `chunks` more for
// u^2 when the activation is cubic, and one per feature for the gradient.
size_t RefreshesPerIteration(size_t features, size_t chunks, int degree);

// SPMD: every node calls this with its own standardized rows. Full local
// batches; the global batch is every node's rows laid out in disjoint
// slots. Each iteration:
//   u = sum_j W_j * x_j                    (scale delta^2, aggregated)
//   p(u) via EvalPolySigmoid               (scale delta^2)
//   G_j = sum_slots (p(u) - y) * (-eta/n) x_j   (delta^3 -> delta)
//   W_j += G_j
// `debug` additionally decrypts u at node 0 to track max |u| against the
// activation interval; it reveals the margins and is for testing only.
// `tag` prefixes every round label; runs sharing a session need distinct
// tags so that no CRS is reused.
EncryptedModel FedTrainEncrypted(net::Party& p, const MheKeys& k, const Dataset& local,
                                 const TrainConfig& config, mhe::Xof& xof,
                                 FedTrainStats* stats = nullptr, bool debug = false,
                                 std::string_view tag = "train");

// Slot 0 of each weight, at `recipient` only.
std::optional<std::vector<double>> DecryptModel(net::Party& p, const MheKeys& k,
                                                const EncryptedModel& model,
                                                uint32_t recipient, mhe::Xof& xof);

}  // namespace cti::analytics

#endif  // CTI_ANALYTICS_FED_TRAIN_H_
