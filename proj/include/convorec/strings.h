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

#ifndef CONVOREC_STRINGS_H_
#define CONVOREC_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace convorec {

// ASCII-only lowercasing; bytes >= 0x80 pass through untouched.
std::string AsciiLower(std::string_view text);

// Splits on runs of ASCII whitespace. Empty pieces are never returned.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Splits on `sep`, trimming whitespace around each piece. Empty pieces are
// dropped, so "" and " , " both yield an empty list.
std::vector<std::string> SplitCsv(std::string_view text, char sep = ',');

std::string_view TrimWhitespace(std::string_view text);

}  // namespace convorec

#endif  // CONVOREC_STRINGS_H_
