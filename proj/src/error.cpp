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

#include "cremona/error.hpp"

namespace cremona {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::kPoleAtPoint: return "POLE_AT_POINT";
    case ErrorCode::kNotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::kDegreeMismatch: return "DEGREE_MISMATCH";
    case ErrorCode::kZeroMap: return "ZERO_MAP";
    case ErrorCode::kZeroPoint: return "ZERO_POINT";
    case ErrorCode::kDimMismatch: return "DIM_MISMATCH";
    case ErrorCode::kIndeterminateAtPoint: return "INDETERMINATE_AT_POINT";
    case ErrorCode::kChartDegenerate: return "CHART_DEGENERATE";
    case ErrorCode::kEmptyFamily: return "EMPTY_FAMILY";
    case ErrorCode::kZeroParameter: return "ZERO_PARAMETER";
    case ErrorCode::kPreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::kMissingInverse: return "MISSING_INVERSE";
    case ErrorCode::kNotUnimodular: return "NOT_UNIMODULAR";
    case ErrorCode::kBadModulus: return "BAD_MODULUS";
    case ErrorCode::kDegeneratePair: return "DEGENERATE_PAIR";
    case ErrorCode::kBadEigenvalue: return "BAD_EIGENVALUE";
    case ErrorCode::kInverseCheckFailed: return "INVERSE_CHECK_FAILED";
    case ErrorCode::kSingularLinearPart: return "SINGULAR_LINEAR_PART";
    case ErrorCode::kSingular: return "SINGULAR";
    case ErrorCode::kNotACocycle: return "NOT_A_COCYCLE";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cremona
