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

#include "cti/simd/kernels.h"

#include "kernels_internal.h"

namespace cti::simd {
namespace {

void AddModScalar(const uint64_t* a, const uint64_t* b, uint64_t* out,
                  size_t n, uint64_t q) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = a[i] + b[i];
    out[i] = s >= q ? s - q : s;
  }
}

void SubModScalar(const uint64_t* a, const uint64_t* b, uint64_t* out,
                  size_t n, uint64_t q) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + q - b[i];
  }
}

void NegModScalar(const uint64_t* a, uint64_t* out, size_t n, uint64_t q) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] == 0 ? 0 : q - a[i];
}

void MulModScalar(const uint64_t* a, const uint64_t* b, uint64_t* out,
                  size_t n, uint64_t q, BarrettRatio ratio) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = internal::BarrettReduce128(
        static_cast<unsigned __int128>(a[i]) * b[i], q, ratio);
  }
}

void MulScalarModScalar(const uint64_t* a, uint64_t w, uint64_t w_shoup,
                        uint64_t* out, size_t n, uint64_t q) {
  for (size_t i = 0; i < n; ++i) {
    out[i] = internal::ShoupMul(a[i], w, w_shoup, q);
  }
}

void CtButterflyScalar(uint64_t* x, uint64_t* y, size_t n, uint64_t w,
                       uint64_t w_shoup, uint64_t q) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t t = internal::ShoupMul(y[i], w, w_shoup, q);
    uint64_t u = x[i];
    uint64_t s = u + t;
    x[i] = s >= q ? s - q : s;
    y[i] = u >= t ? u - t : u + q - t;
  }
}

void GsButterflyScalar(uint64_t* x, uint64_t* y, size_t n, uint64_t w,
                       uint64_t w_shoup, uint64_t q) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t u = x[i];
    uint64_t v = y[i];
    uint64_t s = u + v;
    x[i] = s >= q ? s - q : s;
    uint64_t d = u >= v ? u - v : u + q - v;
    y[i] = internal::ShoupMul(d, w, w_shoup, q);
  }
}

double DotScalar(const double* a, const double* b, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void AxpyScalar(double alpha, const double* x, double* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{
      .name = "scalar",
      .add_mod = AddModScalar,
      .sub_mod = SubModScalar,
      .neg_mod = NegModScalar,
      .mul_mod = MulModScalar,
      .mul_scalar_mod = MulScalarModScalar,
      .ct_butterfly = CtButterflyScalar,
      .gs_butterfly = GsButterflyScalar,
      .dot = DotScalar,
      .axpy = AxpyScalar,
  };
  return table;
}

}  // namespace cti::simd
