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


#include "cti/net/auth.h"

#include <openssl/crypto.h>
#include <openssl/sha.h>

#include "cti/common/error.h"

namespace cti::net {
namespace {

std::array<uint8_t, 32> Digest(std::string_view token) {
  std::array<uint8_t, 32> d{};
  SHA256(reinterpret_cast<const unsigned char*>(token.data()), token.size(), d.data());
  return d;
}

}  // namespace

Role ParseRole(std::string_view name) {
  if (name == "provider") return Role::kProvider;
  if (name == "compute") return Role::kCompute;
  if (name == "querier") return Role::kQuerier;
  throw Error(ErrorCode::kInvalidArgument, "unknown role '" + std::string(name) + "'");
}

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kProvider: return "provider";
    case Role::kCompute: return "compute";
    case Role::kQuerier: return "querier";
  }
  return "?";
}

void TokenTable::Add(std::string_view token, std::vector<Role> roles) {
  if (token.empty()) throw Error(ErrorCode::kInvalidArgument, "empty token");
  uint8_t mask = 0;
  for (Role r : roles) mask |= static_cast<uint8_t>(r);
  entries_.push_back({Digest(token), mask});
}

Grant TokenTable::Authorize(std::string_view token, Role requested) const {
  const auto d = Digest(token);
  // No early exit: every entry is compared.
  uint8_t roles = 0;
  int found = 0;
  for (const Entry& e : entries_) {
    const int eq = CRYPTO_memcmp(e.digest.data(), d.data(), d.size()) == 0;
    const uint8_t sel = static_cast<uint8_t>(-eq);
    roles |= e.roles & sel;
    found |= eq;
  }
  if (!found) throw Error(ErrorCode::kAuth, "unknown token");
  if ((roles & static_cast<uint8_t>(requested)) == 0) {
    throw Error(ErrorCode::kAuth,
                "role '" + std::string(RoleName(requested)) + "' not granted to token");
  }
  return Grant{requested};
}

}  // namespace cti::net
