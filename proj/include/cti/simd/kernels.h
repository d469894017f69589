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

#ifndef CTI_SIMD_KERNELS_H_
#define CTI_SIMD_KERNELS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cti::simd {

// Barrett constant floor(2^128 / q), split into 64-bit words.
struct BarrettRatio {
  uint64_t lo = 0;
  uint64_t hi = 0;
};

BarrettRatio ComputeBarrettRatio(uint64_t q);

// floor(w * 2^64 / q), the Shoup companion of a fixed multiplicand w < q.
uint64_t ShoupPrecompute(uint64_t w, uint64_t q);

// Function table for the data-parallel inner loops. Every modular kernel
// requires q < 2^62 and fully reduced inputs (< q), and produces fully
// reduced outputs. Variants must agree bit-for-bit on the modular kernels;
// the floating-point ones may differ by summation order only.
struct KernelTable {
  std::string_view name;

  void (*add_mod)(const uint64_t* a, const uint64_t* b, uint64_t* out,
                  size_t n, uint64_t q);
  void (*sub_mod)(const uint64_t* a, const uint64_t* b, uint64_t* out,
                  size_t n, uint64_t q);
  void (*neg_mod)(const uint64_t* a, uint64_t* out, size_t n, uint64_t q);
  void (*mul_mod)(const uint64_t* a, const uint64_t* b, uint64_t* out,
                  size_t n, uint64_t q, BarrettRatio ratio);
  void (*mul_scalar_mod)(const uint64_t* a, uint64_t w, uint64_t w_shoup,
                         uint64_t* out, size_t n, uint64_t q);
  // Cooley-Tukey butterfly over two half-blocks: x' = x + w*y, y' = x - w*y.
  void (*ct_butterfly)(uint64_t* x, uint64_t* y, size_t n, uint64_t w,
                       uint64_t w_shoup, uint64_t q);
  // Gentleman-Sande butterfly: x' = x + y, y' = (x - y) * w.
  void (*gs_butterfly)(uint64_t* x, uint64_t* y, size_t n, uint64_t w,
                       uint64_t w_shoup, uint64_t q);

  double (*dot)(const double* a, const double* b, size_t n);
  void (*axpy)(double alpha, const double* x, double* y, size_t n);
};

const KernelTable& ScalarKernels();

// nullptr when the variant was not compiled in or the CPU lacks the ISA.
const KernelTable* Avx2Kernels();

// The table used by the library. Chosen once: the best supported variant,
// unless the CTI_SIMD environment variable names one ("scalar", "avx2").
const KernelTable& Active();

// Span conveniences over Active().
void AddMod(std::span<const uint64_t> a, std::span<const uint64_t> b,
            std::span<uint64_t> out, uint64_t q);
void SubMod(std::span<const uint64_t> a, std::span<const uint64_t> b,
            std::span<uint64_t> out, uint64_t q);
void NegMod(std::span<const uint64_t> a, std::span<uint64_t> out, uint64_t q);
void MulMod(std::span<const uint64_t> a, std::span<const uint64_t> b,
            std::span<uint64_t> out, uint64_t q, BarrettRatio ratio);
void MulScalarMod(std::span<const uint64_t> a, uint64_t w,
                  std::span<uint64_t> out, uint64_t q);
double Dot(std::span<const double> a, std::span<const double> b);
void Axpy(double alpha, std::span<const double> x, std::span<double> y);

}  // namespace cti::simd

#endif  // CTI_SIMD_KERNELS_H_
