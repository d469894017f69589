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

// AVX2 has no 64x64->128 multiply, so wide products are assembled from four
// 32x32 partial products (_mm256_mul_epu32). Tails shorter than a vector go
// through the scalar helpers to keep results bit-identical.

#include <immintrin.h>

#include "cti/simd/kernels.h"
#include "kernels_internal.h"

namespace cti::simd {
namespace {

constexpr size_t kLanes = 4;

inline __m256i Load(const uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void Store(uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Operands are < 2^63 everywhere below, so signed compares are safe.
inline __m256i ReduceOnce(__m256i v, __m256i q, __m256i q_minus_1) {
  __m256i ge = _mm256_cmpgt_epi64(v, q_minus_1);
  return _mm256_sub_epi64(v, _mm256_and_si256(ge, q));
}

inline __m256i LessThanU64(__m256i a, __m256i b) {
  const __m256i sign = _mm256_set1_epi64x(static_cast<int64_t>(1ULL << 63));
  return _mm256_cmpgt_epi64(_mm256_xor_si256(b, sign),
                            _mm256_xor_si256(a, sign));
}

inline void MulWide(__m256i a, __m256i b, __m256i* hi, __m256i* lo) {
  const __m256i mask32 = _mm256_set1_epi64x(0xffffffffLL);
  __m256i a_hi = _mm256_srli_epi64(a, 32);
  __m256i b_hi = _mm256_srli_epi64(b, 32);
  __m256i ll = _mm256_mul_epu32(a, b);
  __m256i lh = _mm256_mul_epu32(a, b_hi);
  __m256i hl = _mm256_mul_epu32(a_hi, b);
  __m256i hh = _mm256_mul_epu32(a_hi, b_hi);
  __m256i t = _mm256_add_epi64(hl, _mm256_srli_epi64(ll, 32));
  __m256i u = _mm256_add_epi64(lh, _mm256_and_si256(t, mask32));
  *hi = _mm256_add_epi64(
      hh, _mm256_add_epi64(_mm256_srli_epi64(t, 32), _mm256_srli_epi64(u, 32)));
  *lo = _mm256_or_si256(_mm256_slli_epi64(u, 32), _mm256_and_si256(ll, mask32));
}

inline __m256i MulHi(__m256i a, __m256i b) {
  __m256i hi, lo;
  MulWide(a, b, &hi, &lo);
  return hi;
}

inline __m256i MulLo(__m256i a, __m256i b) {
  __m256i a_hi = _mm256_srli_epi64(a, 32);
  __m256i b_hi = _mm256_srli_epi64(b, 32);
  __m256i ll = _mm256_mul_epu32(a, b);
  __m256i cross =
      _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
  return _mm256_add_epi64(ll, _mm256_slli_epi64(cross, 32));
}

inline __m256i ShoupMul(__m256i a, __m256i w, __m256i w_shoup, __m256i q,
                        __m256i q_minus_1) {
  __m256i hi = MulHi(a, w_shoup);
  __m256i r = _mm256_sub_epi64(MulLo(a, w), MulLo(hi, q));
  return ReduceOnce(r, q, q_minus_1);
}

inline __m256i AddMod(__m256i a, __m256i b, __m256i q, __m256i q_minus_1) {
  return ReduceOnce(_mm256_add_epi64(a, b), q, q_minus_1);
}

inline __m256i SubMod(__m256i a, __m256i b, __m256i q) {
  __m256i borrow = _mm256_cmpgt_epi64(b, a);
  return _mm256_add_epi64(_mm256_sub_epi64(a, b), _mm256_and_si256(borrow, q));
}

void AddModAvx2(const uint64_t* a, const uint64_t* b, uint64_t* out, size_t n,
                uint64_t q) {
  const __m256i vq = _mm256_set1_epi64x(static_cast<int64_t>(q));
  const __m256i vq1 = _mm256_set1_epi64x(static_cast<int64_t>(q - 1));
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    Store(out + i, AddMod(Load(a + i), Load(b + i), vq, vq1));
  }
  ScalarKernels().add_mod(a + i, b + i, out + i, n - i, q);
}

void SubModAvx2(const uint64_t* a, const uint64_t* b, uint64_t* out, size_t n,
                uint64_t q) {
  const __m256i vq = _mm256_set1_epi64x(static_cast<int64_t>(q));
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    Store(out + i, SubMod(Load(a + i), Load(b + i), vq));
  }
  ScalarKernels().sub_mod(a + i, b + i, out + i, n - i, q);
}

void NegModAvx2(const uint64_t* a, uint64_t* out, size_t n, uint64_t q) {
  const __m256i vq = _mm256_set1_epi64x(static_cast<int64_t>(q));
  const __m256i zero = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i v = Load(a + i);
    __m256i is_zero = _mm256_cmpeq_epi64(v, zero);
    Store(out + i, _mm256_andnot_si256(is_zero, _mm256_sub_epi64(vq, v)));
  }
  ScalarKernels().neg_mod(a + i, out + i, n - i, q);
}

void MulModAvx2(const uint64_t* a, const uint64_t* b, uint64_t* out, size_t n,
                uint64_t q, BarrettRatio ratio) {
  const __m256i vq = _mm256_set1_epi64x(static_cast<int64_t>(q));
  const __m256i vq1 = _mm256_set1_epi64x(static_cast<int64_t>(q - 1));
  const __m256i r_lo = _mm256_set1_epi64x(static_cast<int64_t>(ratio.lo));
  const __m256i r_hi = _mm256_set1_epi64x(static_cast<int64_t>(ratio.hi));
  const __m256i one = _mm256_set1_epi64x(1);
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x1, x0;
    MulWide(Load(a + i), Load(b + i), &x1, &x0);
    // Mirrors internal::BarrettReduce128 lane by lane.
    __m256i carry = MulHi(x0, r_lo);
    __m256i t2h, t2l;
    MulWide(x0, r_hi, &t2h, &t2l);
    __m256i t1 = _mm256_add_epi64(t2l, carry);
    __m256i t3 = _mm256_add_epi64(
        t2h, _mm256_and_si256(LessThanU64(t1, carry), one));
    MulWide(x1, r_lo, &t2h, &t2l);
    __m256i sum = _mm256_add_epi64(t1, t2l);
    carry = _mm256_add_epi64(t2h, _mm256_and_si256(LessThanU64(sum, t1), one));
    __m256i quotient =
        _mm256_add_epi64(MulLo(x1, r_hi), _mm256_add_epi64(t3, carry));
    __m256i rem = _mm256_sub_epi64(x0, MulLo(quotient, vq));
    Store(out + i, ReduceOnce(rem, vq, vq1));
  }
  ScalarKernels().mul_mod(a + i, b + i, out + i, n - i, q, ratio);
}

void MulScalarModAvx2(const uint64_t* a, uint64_t w, uint64_t w_shoup,
                      uint64_t* out, size_t n, uint64_t q) {
  const __m256i vq = _mm256_set1_epi64x(static_cast<int64_t>(q));
  const __m256i vq1 = _mm256_set1_epi64x(static_cast<int64_t>(q - 1));
  const __m256i vw = _mm256_set1_epi64x(static_cast<int64_t>(w));
  const __m256i vws = _mm256_set1_epi64x(static_cast<int64_t>(w_shoup));
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    Store(out + i, ShoupMul(Load(a + i), vw, vws, vq, vq1));
  }
  ScalarKernels().mul_scalar_mod(a + i, w, w_shoup, out + i, n - i, q);
}

void CtButterflyAvx2(uint64_t* x, uint64_t* y, size_t n, uint64_t w,
                     uint64_t w_shoup, uint64_t q) {
  const __m256i vq = _mm256_set1_epi64x(static_cast<int64_t>(q));
  const __m256i vq1 = _mm256_set1_epi64x(static_cast<int64_t>(q - 1));
  const __m256i vw = _mm256_set1_epi64x(static_cast<int64_t>(w));
  const __m256i vws = _mm256_set1_epi64x(static_cast<int64_t>(w_shoup));
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i u = Load(x + i);
    __m256i t = ShoupMul(Load(y + i), vw, vws, vq, vq1);
    Store(x + i, AddMod(u, t, vq, vq1));
    Store(y + i, SubMod(u, t, vq));
  }
  ScalarKernels().ct_butterfly(x + i, y + i, n - i, w, w_shoup, q);
}

void GsButterflyAvx2(uint64_t* x, uint64_t* y, size_t n, uint64_t w,
                     uint64_t w_shoup, uint64_t q) {
  const __m256i vq = _mm256_set1_epi64x(static_cast<int64_t>(q));
  const __m256i vq1 = _mm256_set1_epi64x(static_cast<int64_t>(q - 1));
  const __m256i vw = _mm256_set1_epi64x(static_cast<int64_t>(w));
  const __m256i vws = _mm256_set1_epi64x(static_cast<int64_t>(w_shoup));
  size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i u = Load(x + i);
    __m256i v = Load(y + i);
    Store(x + i, AddMod(u, v, vq, vq1));
    Store(y + i, ShoupMul(SubMod(u, v, vq), vw, vws, vq, vq1));
  }
  ScalarKernels().gs_butterfly(x + i, y + i, n - i, w, w_shoup, q);
}

double DotAvx2(const double* a, const double* b, size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void AxpyAvx2(double alpha, const double* x, double* y, size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

namespace internal {

const KernelTable& Avx2Table() {
  static const KernelTable table{
      .name = "avx2",
      .add_mod = AddModAvx2,
      .sub_mod = SubModAvx2,
      .neg_mod = NegModAvx2,
      .mul_mod = MulModAvx2,
      .mul_scalar_mod = MulScalarModAvx2,
      .ct_butterfly = CtButterflyAvx2,
      .gs_butterfly = GsButterflyAvx2,
      .dot = DotAvx2,
      .axpy = AxpyAvx2,
  };
  return table;
}

}  // namespace internal
}  // namespace cti::simd
