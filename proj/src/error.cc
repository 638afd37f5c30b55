// Copyright 2026 The Convorec Authors
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

#include "convorec/error.h"

namespace convorec {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIoFailure: return "io_failure";
    case ErrorCode::kEmptyFile: return "empty_file";
    case ErrorCode::kMalformedLine: return "malformed_line";
    case ErrorCode::kZeroVector: return "zero_vector";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kPolarityOutOfRange: return "polarity_out_of_range";
    case ErrorCode::kInvalidProfile: return "invalid_profile";
    case ErrorCode::kNoSignal: return "no_signal";
    case ErrorCode::kEmptyScores: return "empty_scores";
    case ErrorCode::kUnknownCategory: return "unknown_category";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace convorec
