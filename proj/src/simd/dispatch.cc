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

#include <cassert>
#include <cstdlib>
#include <string_view>

#include "cti/simd/kernels.h"
#include "kernels_internal.h"

namespace cti::simd {

#if defined(CTI_BUILD_AVX2)
namespace internal {
const KernelTable& Avx2Table();
}  // namespace internal
#endif

BarrettRatio ComputeBarrettRatio(uint64_t q) {
  // floor((2^128 - 1) / q) equals floor(2^128 / q) for q not a power of two.
  internal::u128 hi_part = ~internal::u128{0} / q;
  return {static_cast<uint64_t>(hi_part), static_cast<uint64_t>(hi_part >> 64)};
}

uint64_t ShoupPrecompute(uint64_t w, uint64_t q) {
  return static_cast<uint64_t>((static_cast<internal::u128>(w) << 64) / q);
}

const KernelTable* Avx2Kernels() {
#if defined(CTI_BUILD_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return &internal::Avx2Table();
  }
#endif
  return nullptr;
}

namespace {

const KernelTable& Select() {
  const char* forced = std::getenv("CTI_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return ScalarKernels();
  }
  if (const KernelTable* avx2 = Avx2Kernels()) return *avx2;
  return ScalarKernels();
}

}  // namespace

const KernelTable& Active() {
  static const KernelTable& table = Select();
  return table;
}

void AddMod(std::span<const uint64_t> a, std::span<const uint64_t> b,
            std::span<uint64_t> out, uint64_t q) {
  assert(a.size() == b.size() && a.size() == out.size());
  Active().add_mod(a.data(), b.data(), out.data(), out.size(), q);
}

void SubMod(std::span<const uint64_t> a, std::span<const uint64_t> b,
            std::span<uint64_t> out, uint64_t q) {
  assert(a.size() == b.size() && a.size() == out.size());
  Active().sub_mod(a.data(), b.data(), out.data(), out.size(), q);
}

void NegMod(std::span<const uint64_t> a, std::span<uint64_t> out, uint64_t q) {
  assert(a.size() == out.size());
  Active().neg_mod(a.data(), out.data(), out.size(), q);
}

void MulMod(std::span<const uint64_t> a, std::span<const uint64_t> b,
            std::span<uint64_t> out, uint64_t q, BarrettRatio ratio) {
  assert(a.size() == b.size() && a.size() == out.size());
  Active().mul_mod(a.data(), b.data(), out.data(), out.size(), q, ratio);
}

void MulScalarMod(std::span<const uint64_t> a, uint64_t w,
                  std::span<uint64_t> out, uint64_t q) {
  assert(a.size() == out.size());
  Active().mul_scalar_mod(a.data(), w, ShoupPrecompute(w, q), out.data(),
                          out.size(), q);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return Active().dot(a.data(), b.data(), a.size());
}

void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  Active().axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace cti::simd
