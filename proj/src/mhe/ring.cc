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


#include "cti/mhe/ring.h"

#include <fftw3.h>

#include <cassert>
#include <cmath>
#include <mutex>
#include <numbers>

#include "cti/common/error.h"
#include "cti/mhe/primes.h"

namespace cti::mhe {
namespace {

// FFTW planning is not thread-safe; execution with new arrays is.
std::mutex& FftwMutex() {
  static std::mutex mu;
  return mu;
}

size_t BitReverse(size_t x, int bits) {
  size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

NttTables BuildTables(size_t n, uint64_t q) {
  NttTables t;
  t.q = q;
  t.barrett = simd::ComputeBarrettRatio(q);
  const uint64_t psi = FindPrimitiveRoot(2 * n, q);
  const uint64_t inv_psi = InvMod(psi, q);
  int log_n = 0;
  while ((size_t{1} << log_n) < n) ++log_n;
  t.psi_rev.resize(n);
  t.inv_psi_rev.resize(n);
  uint64_t pw = 1, inv_pw = 1;
  for (size_t i = 0; i < n; ++i) {
    const size_t r = BitReverse(i, log_n);
    t.psi_rev[r] = pw;
    t.inv_psi_rev[r] = inv_pw;
    pw = MulModU64(pw, psi, q);
    inv_pw = MulModU64(inv_pw, inv_psi, q);
  }
  t.psi_rev_shoup.resize(n);
  t.inv_psi_rev_shoup.resize(n);
  for (size_t i = 0; i < n; ++i) {
    t.psi_rev_shoup[i] = simd::ShoupPrecompute(t.psi_rev[i], q);
    t.inv_psi_rev_shoup[i] = simd::ShoupPrecompute(t.inv_psi_rev[i], q);
  }
  t.n_inv = InvMod(n % q, q);
  t.n_inv_shoup = simd::ShoupPrecompute(t.n_inv, q);
  return t;
}

void ForwardNttLimb(const NttTables& t, std::span<uint64_t> a) {
  const auto& k = simd::Active();
  const size_t n = a.size();
  size_t step = n;
  for (size_t m = 1; m < n; m <<= 1) {
    step >>= 1;
    for (size_t i = 0; i < m; ++i) {
      const size_t j1 = 2 * i * step;
      k.ct_butterfly(a.data() + j1, a.data() + j1 + step, step, t.psi_rev[m + i],
                     t.psi_rev_shoup[m + i], t.q);
    }
  }
}

void InverseNttLimb(const NttTables& t, std::span<uint64_t> a) {
  const auto& k = simd::Active();
  const size_t n = a.size();
  size_t step = 1;
  for (size_t m = n; m > 1; m >>= 1) {
    const size_t h = m / 2;
    size_t j1 = 0;
    for (size_t i = 0; i < h; ++i) {
      k.gs_butterfly(a.data() + j1, a.data() + j1 + step, step,
                     t.inv_psi_rev[h + i], t.inv_psi_rev_shoup[h + i], t.q);
      j1 += 2 * step;
    }
    step <<= 1;
  }
  k.mul_scalar_mod(a.data(), t.n_inv, t.n_inv_shoup, a.data(), n, t.q);
}

uint64_t ReduceSigned(int64_t x, uint64_t q) {
  int64_t r = x % static_cast<int64_t>(q);
  return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(q) : r);
}

uint64_t ReduceSigned128(i128 x, uint64_t q) {
  i128 r = x % static_cast<i128>(q);
  return static_cast<uint64_t>(r < 0 ? r + static_cast<i128>(q) : r);
}

uint64_t ReduceBig(const Int256& x, uint64_t q) {
  Int256 r = x % q;
  if (r < 0) r += q;
  return static_cast<uint64_t>(r);
}

void CheckCompatible(const RingElement& a, const RingElement& b) {
  if (a.n() != b.n() || a.limbs() != b.limbs() || a.is_ntt() != b.is_ntt()) {
    throw Error(ErrorCode::kParamsMismatch, "ring element shape mismatch");
  }
}

}  // namespace

Context::Context(RingParams params) : params_(std::move(params)) {
  ValidateParams(params_, /*check_headroom=*/false);
  params_id_ = ParamsId(params_);
  log_q_ = LogQ(params_);
  const size_t n = params_.n;
  const size_t l = params_.q_primes.size();
  for (uint64_t q : params_.q_primes) tables_.push_back(BuildTables(n, q));
  tables_.push_back(BuildTables(n, params_.special_prime));

  big_q_ = 1;
  for (uint64_t q : params_.q_primes) big_q_ *= q;
  big_q_half_ = big_q_ / 2;
  for (size_t j = 0; j < l; ++j) {
    const uint64_t q = params_.q_primes[j];
    Int256 hat = big_q_ / q;
    q_hat_.push_back(hat);
    q_hat_inv_.push_back(InvMod(static_cast<uint64_t>(hat % q), q));
    p_mod_q_.push_back(params_.special_prime % q);
    p_inv_mod_q_.push_back(InvMod(params_.special_prime % q, q));
  }

  const size_t two_n = 2 * n;
  slot_index_.resize(n / 2);
  conj_index_.resize(n / 2);
  uint64_t g = 1;
  for (size_t k = 0; k < n / 2; ++k) {
    slot_index_[k] = (g - 1) / 2;
    conj_index_[k] = (two_n - g - 1) / 2;
    g = g * 5 % two_n;
  }
  zeta_pow_.resize(two_n);
  for (size_t i = 0; i < two_n; ++i) {
    const double angle = std::numbers::pi * static_cast<double>(i) / n;
    zeta_pow_[i] = {std::cos(angle), std::sin(angle)};
  }

  std::lock_guard<std::mutex> lock(FftwMutex());
  auto* buf = fftw_alloc_complex(n);
  plan_forward_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_backward_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                    FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
}

Context::~Context() {
  std::lock_guard<std::mutex> lock(FftwMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_backward_));
}

std::shared_ptr<const Context> Context::Make(RingParams params) {
  return std::make_shared<const Context>(std::move(params));
}

void Context::Dft(std::vector<std::complex<double>>& data, int sign) const {
  assert(data.size() == n());
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  // FFTW_BACKWARD is the +i transform.
  fftw_execute_dft(static_cast<fftw_plan>(sign > 0 ? plan_backward_ : plan_forward_),
                   p, p);
}

void ToNtt(const Context& ctx, RingElement& a) {
  if (a.is_ntt()) return;
  for (size_t j = 0; j < a.limbs(); ++j) ForwardNttLimb(ctx.tables(j), a.limb(j));
  a.set_ntt(true);
}

void FromNtt(const Context& ctx, RingElement& a) {
  if (!a.is_ntt()) return;
  for (size_t j = 0; j < a.limbs(); ++j) InverseNttLimb(ctx.tables(j), a.limb(j));
  a.set_ntt(false);
}

void AddInPlace(const Context& ctx, RingElement& a, const RingElement& b) {
  CheckCompatible(a, b);
  for (size_t j = 0; j < a.limbs(); ++j) {
    simd::AddMod(a.limb(j), b.limb(j), a.limb(j), ctx.modulus(j));
  }
}

void SubInPlace(const Context& ctx, RingElement& a, const RingElement& b) {
  CheckCompatible(a, b);
  for (size_t j = 0; j < a.limbs(); ++j) {
    simd::SubMod(a.limb(j), b.limb(j), a.limb(j), ctx.modulus(j));
  }
}

void NegInPlace(const Context& ctx, RingElement& a) {
  for (size_t j = 0; j < a.limbs(); ++j) {
    simd::NegMod(a.limb(j), a.limb(j), ctx.modulus(j));
  }
}

RingElement Add(const Context& ctx, const RingElement& a, const RingElement& b) {
  RingElement r = a;
  AddInPlace(ctx, r, b);
  return r;
}

RingElement Sub(const Context& ctx, const RingElement& a, const RingElement& b) {
  RingElement r = a;
  SubInPlace(ctx, r, b);
  return r;
}

RingElement MulNtt(const Context& ctx, const RingElement& a, const RingElement& b) {
  CheckCompatible(a, b);
  if (!a.is_ntt()) throw Error(ErrorCode::kInvalidArgument, "MulNtt needs NTT form");
  RingElement r(a.n(), a.limbs(), true);
  for (size_t j = 0; j < a.limbs(); ++j) {
    simd::MulMod(a.limb(j), b.limb(j), r.limb(j), ctx.modulus(j),
                 ctx.tables(j).barrett);
  }
  return r;
}

void MulAddNtt(const Context& ctx, RingElement& acc, const RingElement& b,
               const RingElement& c) {
  RingElement prod = MulNtt(ctx, b, c);
  AddInPlace(ctx, acc, prod);
}

void MulScalarInPlace(const Context& ctx, RingElement& a,
                      std::span<const uint64_t> scalars) {
  assert(scalars.size() >= a.limbs());
  for (size_t j = 0; j < a.limbs(); ++j) {
    simd::MulScalarMod(a.limb(j), scalars[j], a.limb(j), ctx.modulus(j));
  }
}

RingElement FromSigned(const Context& ctx, std::span<const int64_t> coeffs,
                       size_t limbs) {
  RingElement r(ctx.n(), limbs, false);
  assert(coeffs.size() == ctx.n());
  for (size_t j = 0; j < limbs; ++j) {
    const uint64_t q = ctx.modulus(j);
    auto out = r.limb(j);
    for (size_t i = 0; i < coeffs.size(); ++i) out[i] = ReduceSigned(coeffs[i], q);
  }
  return r;
}

RingElement FromSigned128(const Context& ctx, std::span<const i128> coeffs,
                          size_t limbs) {
  RingElement r(ctx.n(), limbs, false);
  assert(coeffs.size() == ctx.n());
  for (size_t j = 0; j < limbs; ++j) {
    const uint64_t q = ctx.modulus(j);
    auto out = r.limb(j);
    for (size_t i = 0; i < coeffs.size(); ++i) out[i] = ReduceSigned128(coeffs[i], q);
  }
  return r;
}

RingElement FromBig(const Context& ctx, std::span<const Int256> coeffs,
                    size_t limbs) {
  RingElement r(ctx.n(), limbs, false);
  assert(coeffs.size() == ctx.n());
  for (size_t j = 0; j < limbs; ++j) {
    const uint64_t q = ctx.modulus(j);
    auto out = r.limb(j);
    for (size_t i = 0; i < coeffs.size(); ++i) out[i] = ReduceBig(coeffs[i], q);
  }
  return r;
}

RingElement Truncate(const RingElement& a, size_t limbs) {
  assert(limbs <= a.limbs());
  RingElement r(a.n(), limbs, a.is_ntt());
  std::copy(a.data().begin(), a.data().begin() + limbs * a.n(), r.data().begin());
  return r;
}

std::vector<Int256> LiftCentered(const Context& ctx, const RingElement& a) {
  const size_t l = ctx.q_count();
  if (a.limbs() < l) throw Error(ErrorCode::kInvalidArgument, "too few limbs to lift");
  RingElement c = Truncate(a, l);
  FromNtt(ctx, c);
  std::vector<Int256> out(ctx.n());
  for (size_t i = 0; i < ctx.n(); ++i) {
    Int256 acc = 0;
    for (size_t j = 0; j < l; ++j) {
      const uint64_t q = ctx.modulus(j);
      acc += ctx.q_hat(j) * MulModU64(c.limb(j)[i], ctx.q_hat_inv(j), q);
    }
    while (acc >= ctx.big_q()) acc -= ctx.big_q();
    if (acc > ctx.big_q_half()) acc -= ctx.big_q();
    out[i] = acc;
  }
  return out;
}

RingElement ModDownBySpecialPrime(const Context& ctx, const RingElement& a) {
  const size_t l = ctx.q_count();
  if (a.limbs() != l + 1) {
    throw Error(ErrorCode::kInvalidArgument, "mod-down expects a QP element");
  }
  const NttTables& pt = ctx.tables(l);
  std::vector<uint64_t> last(a.limb(l).begin(), a.limb(l).end());
  if (a.is_ntt()) InverseNttLimb(pt, last);
  const uint64_t p = pt.q;
  const uint64_t half = p / 2;
  RingElement r = Truncate(a, l);
  std::vector<uint64_t> tmp(ctx.n());
  for (size_t j = 0; j < l; ++j) {
    const uint64_t q = ctx.modulus(j);
    for (size_t i = 0; i < ctx.n(); ++i) {
      // Centered representative of x_P, reduced mod q_j.
      const uint64_t v = last[i];
      tmp[i] = v > half ? (q - (p - v) % q) % q : v % q;
    }
    if (a.is_ntt()) ForwardNttLimb(ctx.tables(j), tmp);
    simd::SubMod(r.limb(j), tmp, r.limb(j), q);
    simd::MulScalarMod(r.limb(j), ctx.p_inv_mod_q(j), r.limb(j), q);
  }
  return r;
}

double LogInfNorm(const Context& ctx, const RingElement& a) {
  std::vector<Int256> lifted = LiftCentered(ctx, a);
  Int256 best = 0;
  for (const Int256& x : lifted) {
    Int256 ax = x < 0 ? Int256(-x) : x;
    if (ax > best) best = ax;
  }
  if (best == 0) return -1.0;
  return std::log2(static_cast<double>(best));
}

}  // namespace cti::mhe
