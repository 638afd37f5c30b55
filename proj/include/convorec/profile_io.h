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

#ifndef CONVOREC_PROFILE_IO_H_
#define CONVOREC_PROFILE_IO_H_

#include <filesystem>
#include <string>

#include "json.hpp"

#include "convorec/recommender.h"

namespace convorec {

// The wire and storage format is a single object:
//   {"Dress": {"gown": 2, "skirt": 4}, "Shoes": {...}, ...}
// Throws kInvalidProfile when the shape or any profile invariant is wrong.
UserProfile ProfileFromJson(const nlohmann::json& json);
nlohmann::json ProfileToJson(const UserProfile& profile);

// Throws kIoFailure or kInvalidProfile.
UserProfile LoadProfileFile(const std::filesystem::path& path);

// Pretty-printed with a trailing newline. Throws kIoFailure when the file
// cannot be written completely.
void SaveProfileFile(const UserProfile& profile,
                     const std::filesystem::path& path);

// Ten-category catalog with seed keywords, used to bootstrap new clients.
const UserProfile& SampleProfile();

}  // namespace convorec

#endif  // CONVOREC_PROFILE_IO_H_
