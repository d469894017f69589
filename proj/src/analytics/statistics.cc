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


#include "cti/analytics/statistics.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include <boost/algorithm/string.hpp>

#include "cti/common/error.h"
#include "cti/mhe/encoder.h"
#include "cti/mhe/evaluator.h"
#include "cti/net/protocols.h"

namespace cti::analytics {
namespace {

std::string Norm(const std::string& s) { return boost::algorithm::to_lower_copy(boost::algorithm::trim_copy(s)); }

}  // namespace

bool DateFilter::Accepts(const std::string& date) const {
  if (!from.empty() && date < from) return false;
  if (!to.empty() && date > to) return false;
  return true;
}

std::vector<int64_t> CountTaxonomy(const std::vector<std::string>& taxonomy,
                                   const std::vector<pipeline::MispEvent>& events,
                                   const DateFilter& filter) {
  std::vector<int64_t> counts(taxonomy.size(), 0);
  for (const auto& e : events) {
    if (!filter.Accepts(e.date)) continue;
    const std::string info = Norm(e.info);
    for (size_t t = 0; t < taxonomy.size(); ++t) {
      const std::string name = Norm(taxonomy[t]);
      bool hit = info == name;
      for (const auto& a : e.attributes) hit = hit || Norm(a.value) == name;
      counts[t] += hit;
    }
  }
  return counts;
}

std::vector<mhe::Ciphertext> SecureHistogram(net::Party& p, const MheKeys& k,
                                             const std::vector<std::string>& taxonomy,
                                             const std::vector<pipeline::MispEvent>& events,
                                             const DateFilter& filter,
                                             const mhe::PublicKey& querier_pk,
                                             uint32_t recipient, mhe::Xof& xof,
                                             std::string_view tag) {
  const mhe::Context& ctx = *k.ctx;
  if (taxonomy.size() > ctx.slots()) {
    throw Error(ErrorCode::kInvalidArgument, "taxonomy longer than the slot count");
  }
  const std::vector<int64_t> counts = CountTaxonomy(taxonomy, events, filter);
  const std::vector<double> v(counts.begin(), counts.end());
  const std::string t(tag);
  std::vector<mhe::Ciphertext> ct{
      mhe::Encrypt(ctx, k.pk, mhe::Encode(ctx, v, ctx.params().log_delta), xof)};
  ct = net::NetAggregateAllBatch(p, ctx, ct, t + "/agg");
  return net::NetPcksBatch(p, ctx, k.sk, ct, querier_pk, recipient, t + "/pcks", xof);
}

std::vector<int64_t> DecodeCounts(const mhe::Context& ctx, const mhe::SecretKey& sk,
                                  const std::vector<mhe::Ciphertext>& cts, size_t entries) {
  std::vector<int64_t> out;
  for (const auto& ct : cts) {
    for (double v : mhe::Decode(ctx, mhe::DecryptDebug(ctx, sk, ct))) {
      out.push_back(std::llround(v));
    }
  }
  if (out.size() < entries) throw Error(ErrorCode::kInvalidArgument, "fewer slots than entries");
  out.resize(entries);
  return out;
}

namespace {

// Largest scale that keeps every aggregated slot below the encoder limit.
// Nodes reveal only the binary exponent of their largest local entry.
int AdaptiveScale(net::Party& p, std::span<const double> v, const std::string& round) {
  double mx = 1.0;
  for (double x : v) mx = std::max(mx, std::fabs(x));
  const auto e = ExchangeCounts(p, static_cast<size_t>(std::ceil(std::log2(mx))), round);
  const double bits = *std::max_element(e.begin(), e.end()) +
                      std::ceil(std::log2(static_cast<double>(p.size()))) + 1;
  return static_cast<int>(std::clamp(120.0 - bits, 20.0, 100.0));
}

}  // namespace

FeatureStats FederatedStandardization(net::Party& p, const MheKeys& k, const Dataset& local,
                                      mhe::Xof& xof, std::string_view tag) {
  const std::string t(tag);
  const size_t m = local.cols();
  const auto cols = ExchangeCounts(p, m, t + "/cols");
  if (std::any_of(cols.begin(), cols.end(), [&](size_t c) { return c != m; })) {
    throw Error(ErrorCode::kInvalidArgument, "nodes disagree on the feature schema");
  }
  // Pass 1: [count, sum x_0, ...]
  std::vector<double> v(1 + m, 0.0);
  v[0] = static_cast<double>(local.rows());
  for (size_t r = 0; r < local.rows(); ++r) {
    for (size_t j = 0; j < m; ++j) v[1 + j] += local.row(r)[j];
  }
  const std::vector<double> s1 =
      SecureSum(p, k, v, AdaptiveScale(p, v, t + "/e1"), t + "/s1", xof);
  FeatureStats st;
  st.names = local.feature_names;
  st.count = static_cast<size_t>(std::llround(s1[0]));
  if (st.count == 0) throw Error(ErrorCode::kInvalidArgument, "empty global dataset");
  const double n = static_cast<double>(st.count);
  for (size_t j = 0; j < m; ++j) st.mean.push_back(s1[1 + j] / n);
  // Pass 2: centered squares, so constant columns sum to (nearly) zero
  // before any noise is added.
  std::vector<double> sq(m, 0.0);
  for (size_t r = 0; r < local.rows(); ++r) {
    for (size_t j = 0; j < m; ++j) {
      const double c = local.row(r)[j] - st.mean[j];
      sq[j] += c * c;
    }
  }
  const std::vector<double> s2 =
      SecureSum(p, k, sq, AdaptiveScale(p, sq, t + "/e2"), t + "/s2", xof);
  for (size_t j = 0; j < m; ++j) {
    const double sd = std::sqrt(std::max(0.0, s2[j] / n));
    st.std.push_back(sd);
    st.constant.push_back(sd < 1e-9);
  }
  return st;
}

}  // namespace cti::analytics
