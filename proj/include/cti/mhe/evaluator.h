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


#ifndef CTI_MHE_EVALUATOR_H_
#define CTI_MHE_EVALUATOR_H_

#include "cti/mhe/ciphertext.h"
#include "cti/mhe/keys.h"
#include "cti/mhe/ring.h"
#include "cti/mhe/xof.h"

namespace cti::mhe {

// Throws kHeadroom when a value of scale 2^log_scale, together with the
// declared value bound, masking and party count, would not fit below Q/4.
void CheckScaleHeadroom(const Context& ctx, int log_scale);

// (u p0 + m + e0, u p1 + e1) over the #q_i limbs of pk.
Ciphertext Encrypt(const Context& ctx, const PublicKey& pk, const Plaintext& pt,
                   Xof& xof);

// c0 + s c1 (+ s^2 c2). Degree-2 input is rejected unless allowed.
Plaintext DecryptDebug(const Context& ctx, const SecretKey& s,
                       const Ciphertext& ct, bool allow_degree2 = false);

Ciphertext Add(const Context& ctx, const Ciphertext& a, const Ciphertext& b);
void AddInPlace(const Context& ctx, Ciphertext& a, const Ciphertext& b);
Ciphertext Negate(const Context& ctx, const Ciphertext& a);
// Plaintext scale must equal the ciphertext scale.
Ciphertext AddPlain(const Context& ctx, const Ciphertext& a, const Plaintext& p);
// Scale multiplies.
Ciphertext MulPlain(const Context& ctx, const Ciphertext& a, const Plaintext& p);
// Degree-2 tensor product; scale multiplies.
Ciphertext Tensor(const Context& ctx, const Ciphertext& a, const Ciphertext& b);
Ciphertext Relinearize(const Context& ctx, const Ciphertext& a,
                       const RelinKey& rlk);
Ciphertext MulCt(const Context& ctx, const Ciphertext& a, const Ciphertext& b,
                 const RelinKey& rlk);

}  // namespace cti::mhe

#endif  // CTI_MHE_EVALUATOR_H_
