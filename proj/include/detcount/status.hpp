// Copyright 2026 The detcount Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace detcount {

// Mirrors dc_status in the C header; values are part of the ABI.
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kNotInvertible = 2,
  kEmptyRange = 3,
  kQuadratureNotConverged = 4,
  kEvenModulus = 5,
  kCompositeModulus = 6,
  kOutOfValidatedRange = 7,
  kPoleAtNonpositiveInteger = 8,
  kInvalidR = 9,
  kInternal = 100,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace detcount
