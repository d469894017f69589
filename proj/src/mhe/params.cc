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


#include "cti/mhe/params.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "cti/common/error.h"
#include "cti/mhe/primes.h"

namespace cti::mhe {
namespace {

constexpr uint64_t kPrimeStep = uint64_t{1} << 17;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// 128-bit classical budget on log2(QP) for ternary secrets, from the
// homomorphic-encryption security standard tables.
double SecurityBudgetBits(size_t n) {
  switch (n) {
    case 1024: return 27;
    case 2048: return 54;
    case 4096: return 109;
    case 8192: return 218;
    case 16384: return 438;
    case 32768: return 881;
    default: return 0;
  }
}

RingParams Build(size_t n, size_t q_count, int log_delta, int prime_bits,
                 int special_bits) {
  RingParams p;
  p.n = n;
  p.q_primes = FindNttPrimes(prime_bits, kPrimeStep, q_count);
  p.special_prime = FindNttPrimes(special_bits, kPrimeStep, 1, p.q_primes)[0];
  p.log_delta = log_delta;
  return p;
}

// The special prime is taken as large as the key-switching budget allows:
// a larger P divides the key-switching noise further.
int SpecialPrimeBits(size_t n, double log_q, bool reduced_security) {
  if (reduced_security) return 61;
  return std::min(61, static_cast<int>(std::floor(SecurityBudgetBits(n) - log_q)));
}

}  // namespace

RingParams GenParams(std::string_view preset) {
  const std::string name = Lower(preset);
  RingParams p;
  if (name == "toy") {
    p = Build(4096, 3, 30, 54, SpecialPrimeBits(4096, 0, true));
    p.reduced_security = true;
  } else if (name == "standard") {
    // Three 54-bit primes: log Q just under 162.
    p = Build(8192, 3, 30, 54, SpecialPrimeBits(8192, 162, false));
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown preset '" + std::string(preset) + "'");
  }
  p.preset_name = name;
  ValidateParams(p, /*check_headroom=*/true);
  return p;
}

RingParams MakeParams(size_t n, size_t q_count, int log_delta, int prime_bits,
                      bool check_headroom) {
  RingParams p = Build(n, q_count, log_delta, prime_bits, 61);
  p.preset_name = "custom";
  p.reduced_security = true;
  p.test_ring = n < 4096;
  ValidateParams(p, check_headroom);
  return p;
}

void ValidateParams(const RingParams& p, bool check_headroom) {
  const size_t min_n = p.test_ring ? 8 : 4096;
  if (p.n < min_n || p.n > 65536 || (p.n & (p.n - 1)) != 0) {
    throw Error(ErrorCode::kInvalidArgument, "ring degree must be a power of two in range");
  }
  if (p.q_primes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no ciphertext primes");
  }
  std::set<uint64_t> seen;
  std::vector<uint64_t> all = p.q_primes;
  all.push_back(p.special_prime);
  for (uint64_t q : all) {
    if (q >= (uint64_t{1} << 61) || !IsPrime(q) || q % (2 * p.n) != 1) {
      throw Error(ErrorCode::kInvalidArgument, "prime is not NTT-friendly");
    }
    if (!seen.insert(q).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate prime");
    }
  }
  if (p.log_delta < 1 || p.cbd_k < 1 || p.max_parties < 1) {
    throw Error(ErrorCode::kInvalidArgument, "bad scale or noise parameters");
  }
  if (check_headroom && HeadroomRequirementBits(p) >= LogQ(p) - 2.0) {
    throw Error(ErrorCode::kHeadroom,
                "Delta^3 * B * 2^lambda * parties exceeds Q/4");
  }
}

double LogQ(const RingParams& p) {
  double bits = 0.0;
  for (uint64_t q : p.q_primes) bits += std::log2(static_cast<double>(q));
  return bits;
}

double LogQP(const RingParams& p) {
  return LogQ(p) + std::log2(static_cast<double>(p.special_prime));
}

double HeadroomRequirementBits(const RingParams& p) {
  return 3.0 * p.log_delta + p.value_bound_bits + p.lambda_smudge +
         std::log2(static_cast<double>(p.max_parties));
}

uint64_t ParamsId(const RingParams& p) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(p.n);
  mix(p.q_primes.size());
  for (uint64_t q : p.q_primes) mix(q);
  mix(p.special_prime);
  mix(static_cast<uint64_t>(p.log_delta));
  return h;
}

}  // namespace cti::mhe
