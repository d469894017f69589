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


#ifndef CTI_MHE_SAMPLER_H_
#define CTI_MHE_SAMPLER_H_

#include <cstdint>
#include <vector>

#include "cti/mhe/ring.h"
#include "cti/mhe/xof.h"

namespace cti::mhe {

// Uniform over {-1, 0, 1}.
std::vector<int64_t> SampleTernary(Xof& xof, size_t n);

// Centered binomial: popcount of k bits minus popcount of k bits
// (variance k/2). k <= 32.
std::vector<int64_t> SampleCbd(Xof& xof, size_t n, int k);

// Uniform over [-2^bits, 2^bits), bits <= 125.
std::vector<i128> SampleUniformSigned(Xof& xof, size_t n, int bits);

// Ring-valued versions, returned in NTT form.
RingElement SampleTernaryElement(const Context& ctx, Xof& xof, size_t limbs);
RingElement SampleErrorElement(const Context& ctx, Xof& xof, size_t limbs);
RingElement SampleFloodElement(const Context& ctx, Xof& xof, size_t limbs,
                               int bits);

}  // namespace cti::mhe

#endif  // CTI_MHE_SAMPLER_H_
