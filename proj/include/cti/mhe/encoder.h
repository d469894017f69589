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


#ifndef CTI_MHE_ENCODER_H_
#define CTI_MHE_ENCODER_H_

#include <span>
#include <vector>

#include "cti/mhe/ciphertext.h"
#include "cti/mhe/ring.h"

namespace cti::mhe {

// Inverse canonical embedding of up to N/2 real slot values (missing slots
// are zero), multiplied by 2^log_scale and rounded. Throws kHeadroom if the
// scaled values cannot be represented below Q/4.
std::vector<i128> EncodeCoefficients(const Context& ctx,
                                     std::span<const double> values,
                                     int log_scale);

// Encoded plaintext over the #q_i limbs, in NTT form.
Plaintext Encode(const Context& ctx, std::span<const double> values,
                 int log_scale);

// Same slot value everywhere.
Plaintext EncodeConstant(const Context& ctx, double value, int log_scale);

// Canonical embedding (real parts of the N/2 slots) divided by 2^log_scale.
std::vector<double> DecodeCoefficients(const Context& ctx,
                                       std::span<const Int256> coeffs,
                                       int log_scale);
std::vector<double> Decode(const Context& ctx, const Plaintext& pt);

}  // namespace cti::mhe

#endif  // CTI_MHE_ENCODER_H_
