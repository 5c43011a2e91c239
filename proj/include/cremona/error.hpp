// Copyright 2026 The cremona-kit Authors
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
#include <string_view>

namespace cremona {

// Every failure surfaced by the library carries one of these codes; the CLI
// prints error_name() on stderr.
enum class ErrorCode {
  kFieldMismatch,
  kDivisionByZero,
  kArityMismatch,
  kPoleAtPoint,
  kNotHomogeneous,
  kDegreeMismatch,
  kZeroMap,
  kZeroPoint,
  kDimMismatch,
  kIndeterminateAtPoint,
  kChartDegenerate,
  kEmptyFamily,
  kZeroParameter,
  kPreconditionViolated,
  kMissingInverse,
  kNotUnimodular,
  kBadModulus,
  kDegeneratePair,
  kBadEigenvalue,
  kInverseCheckFailed,
  kSingularLinearPart,
  kSingular,
  kNotACocycle,
  kParseError,
  kInvalidArgument,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace cremona
