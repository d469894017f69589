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


#ifndef CTI_NET_AUTH_H_
#define CTI_NET_AUTH_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cti::net {

enum class Role : uint8_t { kProvider = 1, kCompute = 2, kQuerier = 4 };

Role ParseRole(std::string_view name);
std::string_view RoleName(Role role);

struct Grant {
  Role role;
};

// Static bearer-token table. Tokens are stored as SHA-256 digests and
// compared in constant time against every entry.
class TokenTable {
 public:
  void Add(std::string_view token, std::vector<Role> roles);
  size_t size() const { return entries_.size(); }

  // Throws kAuth for an unknown token or a role not granted to it.
  Grant Authorize(std::string_view token, Role requested) const;

 private:
  struct Entry {
    std::array<uint8_t, 32> digest;
    uint8_t roles;
  };
  std::vector<Entry> entries_;
};

}  // namespace cti::net

#endif  // CTI_NET_AUTH_H_
