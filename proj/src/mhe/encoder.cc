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


#include "cti/mhe/encoder.h"

#include <cmath>
#include <complex>
#include <string>

#include "cti/common/error.h"

namespace cti::mhe {

std::vector<i128> EncodeCoefficients(const Context& ctx,
                                     std::span<const double> values,
                                     int log_scale) {
  const size_t n = ctx.n();
  if (values.size() > ctx.slots()) {
    throw Error(ErrorCode::kInvalidArgument, "more values than slots");
  }
  if (log_scale < 0) throw Error(ErrorCode::kInvalidArgument, "negative scale");
  double max_abs = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite slot value");
    max_abs = std::max(max_abs, std::fabs(v));
  }
  if (max_abs > 0.0) {
    const double bits = std::log2(max_abs) + log_scale;
    if (bits >= std::min(ctx.log_q() - 2.0, 125.0)) {
      throw Error(ErrorCode::kHeadroom,
                  "encoded magnitude 2^" + std::to_string(bits) + " too large");
    }
  }
  std::vector<std::complex<double>> a(n);
  for (size_t k = 0; k < values.size(); ++k) {
    a[ctx.slot_index(k)] = values[k];
    a[ctx.conj_index(k)] = values[k];
  }
  ctx.Dft(a, -1);
  const double scale = std::ldexp(1.0, log_scale) / static_cast<double>(n);
  std::vector<i128> out(n);
  for (size_t i = 0; i < n; ++i) {
    // Multiply by zeta^-i = conj(zeta^i) and keep the real part.
    const double re = (a[i] * std::conj(ctx.zeta_pow(i))).real() * scale;
    out[i] = static_cast<i128>(std::nearbyint(re));
  }
  return out;
}

Plaintext Encode(const Context& ctx, std::span<const double> values,
                 int log_scale) {
  Plaintext pt;
  pt.poly = FromSigned128(ctx, EncodeCoefficients(ctx, values, log_scale),
                          ctx.q_count());
  ToNtt(ctx, pt.poly);
  pt.log_scale = log_scale;
  return pt;
}

Plaintext EncodeConstant(const Context& ctx, double value, int log_scale) {
  std::vector<double> v(ctx.slots(), value);
  return Encode(ctx, v, log_scale);
}

std::vector<double> DecodeCoefficients(const Context& ctx,
                                       std::span<const Int256> coeffs,
                                       int log_scale) {
  const size_t n = ctx.n();
  if (log_scale < 0) throw Error(ErrorCode::kInvalidArgument, "negative scale");
  std::vector<std::complex<double>> a(n);
  for (size_t i = 0; i < n; ++i) {
    a[i] = static_cast<double>(coeffs[i]) * ctx.zeta_pow(i);
  }
  ctx.Dft(a, +1);
  const double inv_scale = std::ldexp(1.0, -log_scale);
  std::vector<double> out(ctx.slots());
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] = a[ctx.slot_index(k)].real() * inv_scale;
  }
  return out;
}

std::vector<double> Decode(const Context& ctx, const Plaintext& pt) {
  return DecodeCoefficients(ctx, LiftCentered(ctx, pt.poly), pt.log_scale);
}

}  // namespace cti::mhe
