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

#include "convorec/profile_io.h"

#include <fstream>
#include <cstdint>

#include "convorec/error.h"

namespace convorec {

UserProfile ProfileFromJson(const nlohmann::json& json) {
  if (!json.is_object()) {
    throw Error(ErrorCode::kInvalidProfile, "profile must be a JSON object");
  }
  UserProfile profile;
  for (const auto& [category, keywords] : json.items()) {
    if (!keywords.is_object()) {
      throw Error(ErrorCode::kInvalidProfile,
                  "category '" + category + "' must map to an object");
    }
    KeywordProfile& kp = profile[category];
    for (const auto& [keyword, frequency] : keywords.items()) {
      if (!frequency.is_number_integer()) {
        throw Error(ErrorCode::kInvalidProfile,
                    "category '" + category + "': frequency of '" + keyword +
                        "' must be an integer");
      }
      if (frequency.is_number_unsigned() &&
          frequency.get<std::uint64_t>() >
              static_cast<std::uint64_t>(INT64_MAX)) {
        throw Error(ErrorCode::kInvalidProfile,
                    "category '" + category + "': frequency of '" + keyword +
                        "' is too large");
      }
      kp[keyword] = frequency.get<std::int64_t>();
    }
  }
  ValidateProfile(profile);
  return profile;
}

nlohmann::json ProfileToJson(const UserProfile& profile) {
  nlohmann::json json = nlohmann::json::object();
  for (const auto& [category, keywords] : profile) {
    nlohmann::json& kp = json[category] = nlohmann::json::object();
    for (const auto& [keyword, frequency] : keywords) kp[keyword] = frequency;
  }
  return json;
}

UserProfile LoadProfileFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open profile " + path.string());
  }
  nlohmann::json json = nlohmann::json::parse(in, nullptr, false);
  if (json.is_discarded()) {
    throw Error(ErrorCode::kInvalidProfile,
                path.string() + " is not valid JSON");
  }
  return ProfileFromJson(json);
}

void SaveProfileFile(const UserProfile& profile,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  }
  out << ProfileToJson(profile).dump(2) << '\n';
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "write to " + path.string() + " failed");
  }
}

const UserProfile& SampleProfile() {
  static const UserProfile kSample = {
      {"Dress",
       {{"dress", 5}, {"gown", 3}, {"skirt", 4}, {"frock", 2},
        {"outfit", 3}, {"fashion", 2}}},
      {"Shoes",
       {{"shoes", 5}, {"sneakers", 3}, {"boots", 3}, {"sandals", 2},
        {"heels", 2}}},
      {"Electronics",
       {{"laptop", 4}, {"phone", 5}, {"headphones", 3}, {"camera", 2},
        {"television", 2}, {"charger", 1}}},
      {"Books",
       {{"novel", 4}, {"fiction", 2}, {"author", 2}, {"paperback", 1},
        {"magazine", 2}}},
      {"Home Furniture",
       {{"sofa", 3}, {"table", 4}, {"chair", 4}, {"bed", 2}, {"cabinet", 1}}},
      {"Groceries",
       {{"vegetables", 3}, {"fruit", 4}, {"rice", 2}, {"milk", 3},
        {"bread", 2}}},
      {"Toys",
       {{"doll", 3}, {"puzzle", 2}, {"lego", 2}, {"games", 2}, {"teddy", 1}}},
      {"Sports",
       {{"cricket", 3}, {"football", 4}, {"racket", 2}, {"fitness", 2},
        {"tennis", 2}}},
      {"Beauty",
       {{"lipstick", 3}, {"perfume", 3}, {"makeup", 4}, {"shampoo", 2},
        {"cream", 2}}},
      {"Jewelry",
       {{"necklace", 3}, {"ring", 3}, {"earrings", 2}, {"bracelet", 2},
        {"gold", 3}}},
  };
  return kSample;
}

}  // namespace convorec
