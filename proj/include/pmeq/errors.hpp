// Copyright 2026 The pmeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PMEQ_ERRORS_HPP_
#define PMEQ_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmeq {

enum class ErrorCode {
  kDivisionByZero,
  kFieldMismatch,
  kFieldTooSmall,
  kInvalidField,
  kNotSquare,
  kDimensionMismatch,
  kLabelMismatch,
  kUnknownLabel,
  kDuplicatePoint,
  kNotACut,
  kZeroBlock,
  kNotIrreducible,
  kTooLarge,
  kRankTooHigh,
  kInvalidArgument,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code name.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace pmeq

#endif  // PMEQ_ERRORS_HPP_
