// Copyright 2026 The cbpir Authors.
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

#include "cbpir/error.h"

namespace cbpir {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kSizeLimit: return "size_limit";
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kSingularMatrix: return "singular_matrix";
    case ErrorCode::kShapeMismatch: return "shape_mismatch";
    case ErrorCode::kDatabaseTooSmall: return "database_too_small";
    case ErrorCode::kSessionExhausted: return "session_exhausted";
    case ErrorCode::kUnknownPreset: return "unknown_preset";
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInconsistent: return "inconsistent";
  }
  return "unknown";
}

}  // namespace cbpir
