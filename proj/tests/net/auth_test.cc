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


#include <gtest/gtest.h>

#include "cti/common/error.h"
#include "cti/net/auth.h"

namespace cti::net {
namespace {

TokenTable Table() {
  TokenTable t;
  t.Add("q-token", {Role::kQuerier});
  t.Add("p-token", {Role::kProvider, Role::kCompute});
  return t;
}

ErrorCode CodeOf(const TokenTable& t, std::string_view token, Role r) {
  try {
    t.Authorize(token, r);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(AuthTest, ValidQuerierTokenIsGranted) {
  EXPECT_EQ(Table().Authorize("q-token", Role::kQuerier).role, Role::kQuerier);
  EXPECT_EQ(Table().Authorize("p-token", Role::kCompute).role, Role::kCompute);
}

TEST(AuthTest, InvalidTokenIsRejected) {
  EXPECT_EQ(CodeOf(Table(), "nope", Role::kQuerier), ErrorCode::kAuth);
  EXPECT_EQ(CodeOf(Table(), "", Role::kQuerier), ErrorCode::kAuth);
  EXPECT_EQ(CodeOf(Table(), "q-token ", Role::kQuerier), ErrorCode::kAuth);
}

TEST(AuthTest, ProviderTokenCannotQuery) {
  EXPECT_EQ(CodeOf(Table(), "p-token", Role::kQuerier), ErrorCode::kAuth);
  EXPECT_EQ(CodeOf(Table(), "q-token", Role::kProvider), ErrorCode::kAuth);
}

TEST(AuthTest, RoleNames) {
  for (Role r : {Role::kProvider, Role::kCompute, Role::kQuerier}) {
    EXPECT_EQ(ParseRole(RoleName(r)), r);
  }
  EXPECT_THROW(ParseRole("admin"), Error);
  TokenTable t;
  EXPECT_THROW(t.Add("", {Role::kQuerier}), Error);
}

}  // namespace
}  // namespace cti::net
