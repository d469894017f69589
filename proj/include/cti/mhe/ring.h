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


#ifndef CTI_MHE_RING_H_
#define CTI_MHE_RING_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cti/mhe/params.h"
#include "cti/simd/kernels.h"

namespace cti::mhe {

using Int256 = boost::multiprecision::int256_t;
using i128 = __int128;

// Residues of a polynomial in Z[X]/(X^N + 1), one limb per RNS modulus.
// Limb j < #q_i lives mod q_j; an element with #q_i + 1 limbs carries the
// special prime P in its last limb. Storage is limb-major.
class RingElement {
 public:
  RingElement() = default;
  RingElement(size_t n, size_t limbs, bool ntt)
      : n_(n), limbs_(limbs), ntt_(ntt), data_(n * limbs, 0) {}

  size_t n() const { return n_; }
  size_t limbs() const { return limbs_; }
  bool is_ntt() const { return ntt_; }
  void set_ntt(bool ntt) { ntt_ = ntt; }
  bool empty() const { return data_.empty(); }

  std::span<uint64_t> limb(size_t j) { return {data_.data() + j * n_, n_}; }
  std::span<const uint64_t> limb(size_t j) const {
    return {data_.data() + j * n_, n_};
  }
  std::vector<uint64_t>& data() { return data_; }
  const std::vector<uint64_t>& data() const { return data_; }

  bool operator==(const RingElement& other) const = default;

 private:
  size_t n_ = 0;
  size_t limbs_ = 0;
  bool ntt_ = false;
  std::vector<uint64_t> data_;
};

struct NttTables {
  uint64_t q = 0;
  simd::BarrettRatio barrett;
  // Powers of the primitive 2N-th root psi in bit-reversed order.
  std::vector<uint64_t> psi_rev, psi_rev_shoup;
  std::vector<uint64_t> inv_psi_rev, inv_psi_rev_shoup;
  uint64_t n_inv = 0, n_inv_shoup = 0;
};

// Precomputed tables for one parameter set. Immutable once built.
class Context {
 public:
  explicit Context(RingParams params);
  ~Context();
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  static std::shared_ptr<const Context> Make(RingParams params);

  const RingParams& params() const { return params_; }
  size_t n() const { return params_.n; }
  size_t slots() const { return params_.n / 2; }
  size_t q_count() const { return params_.q_primes.size(); }
  size_t qp_count() const { return params_.q_primes.size() + 1; }
  uint64_t modulus(size_t j) const { return tables_[j].q; }
  const NttTables& tables(size_t j) const { return tables_[j]; }
  uint64_t params_id() const { return params_id_; }
  double log_q() const { return log_q_; }

  // CRT data over Q = prod q_j.
  const Int256& big_q() const { return big_q_; }
  const Int256& big_q_half() const { return big_q_half_; }
  const Int256& q_hat(size_t j) const { return q_hat_[j]; }
  uint64_t q_hat_inv(size_t j) const { return q_hat_inv_[j]; }
  // P mod q_j and P^-1 mod q_j.
  uint64_t p_mod_q(size_t j) const { return p_mod_q_[j]; }
  uint64_t p_inv_mod_q(size_t j) const { return p_inv_mod_q_[j]; }

  // Canonical embedding: slot k sits at evaluation point zeta^(5^k), whose
  // index among the odd powers zeta^(2t+1) is slot_index(k).
  size_t slot_index(size_t k) const { return slot_index_[k]; }
  size_t conj_index(size_t k) const { return conj_index_[k]; }
  const std::complex<double>& zeta_pow(size_t i) const { return zeta_pow_[i]; }
  // Unnormalized length-N DFT; sign +1 uses exp(+2 pi i jk / N).
  void Dft(std::vector<std::complex<double>>& data, int sign) const;

 private:
  RingParams params_;
  uint64_t params_id_ = 0;
  double log_q_ = 0.0;
  std::vector<NttTables> tables_;
  Int256 big_q_, big_q_half_;
  std::vector<Int256> q_hat_;
  std::vector<uint64_t> q_hat_inv_;
  std::vector<uint64_t> p_mod_q_, p_inv_mod_q_;
  std::vector<size_t> slot_index_, conj_index_;
  std::vector<std::complex<double>> zeta_pow_;
  void* plan_forward_ = nullptr;
  void* plan_backward_ = nullptr;
};

using ContextPtr = std::shared_ptr<const Context>;

// In-place negacyclic NTT over every limb.
void ToNtt(const Context& ctx, RingElement& a);
void FromNtt(const Context& ctx, RingElement& a);

// Elementwise ring operations; operands must share limb count and form.
void AddInPlace(const Context& ctx, RingElement& a, const RingElement& b);
void SubInPlace(const Context& ctx, RingElement& a, const RingElement& b);
void NegInPlace(const Context& ctx, RingElement& a);
RingElement Add(const Context& ctx, const RingElement& a, const RingElement& b);
RingElement Sub(const Context& ctx, const RingElement& a, const RingElement& b);
// Pointwise product; both operands in NTT form.
RingElement MulNtt(const Context& ctx, const RingElement& a, const RingElement& b);
// a += b * c, all in NTT form.
void MulAddNtt(const Context& ctx, RingElement& acc, const RingElement& b,
               const RingElement& c);
// Multiplies limb j by scalars[j] (already reduced mod the limb modulus).
void MulScalarInPlace(const Context& ctx, RingElement& a,
                      std::span<const uint64_t> scalars);

// Embedding of signed integer coefficients; result in coefficient form.
RingElement FromSigned(const Context& ctx, std::span<const int64_t> coeffs,
                       size_t limbs);
RingElement FromSigned128(const Context& ctx, std::span<const i128> coeffs,
                          size_t limbs);
RingElement FromBig(const Context& ctx, std::span<const Int256> coeffs,
                    size_t limbs);

// Keeps the first `limbs` limbs (e.g. drops the special prime).
RingElement Truncate(const RingElement& a, size_t limbs);

// Exact centered CRT lift of a #q_i-limb element (any form) into
// (-Q/2, Q/2].
std::vector<Int256> LiftCentered(const Context& ctx, const RingElement& a);

// Divides a (#q_i + 1)-limb element by P with rounding:
// x_j <- (x_j - [x_P]) * P^-1 mod q_j. Result has #q_i limbs and the same
// form as the input.
RingElement ModDownBySpecialPrime(const Context& ctx, const RingElement& a);

// Infinity norm of the centered lift.
double LogInfNorm(const Context& ctx, const RingElement& a);

}  // namespace cti::mhe

#endif  // CTI_MHE_RING_H_
