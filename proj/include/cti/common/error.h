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


#ifndef CTI_COMMON_ERROR_H_
#define CTI_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cti {

enum class ErrorCode {
  kInvalidArgument,
  kHeadroom,
  kScaleMismatch,
  kParamsMismatch,
  kParse,
  kIo,
  kProtocol,
  kTimeout,
  kAuth,
  kNotFound,
  kFailedPrecondition,
  kAborted,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kHeadroom: return "headroom violation";
    case ErrorCode::kScaleMismatch: return "scale mismatch";
    case ErrorCode::kParamsMismatch: return "params mismatch";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kProtocol: return "protocol failure";
    case ErrorCode::kTimeout: return "timeout";
    case ErrorCode::kAuth: return "authorization failure";
    case ErrorCode::kNotFound: return "not found";
    case ErrorCode::kFailedPrecondition: return "failed precondition";
    case ErrorCode::kAborted: return "session aborted";
  }
  return "unknown";
}

}  // namespace cti

#endif  // CTI_COMMON_ERROR_H_
