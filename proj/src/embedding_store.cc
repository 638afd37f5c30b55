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

#include "convorec/embedding_store.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "convorec/error.h"
#include "convorec/strings.h"

namespace convorec {

namespace {

bool ParseFinite(std::string_view text, double* value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, *value);
  return ec == std::errc() && ptr == end && std::isfinite(*value);
}

}  // namespace

EmbeddingTable EmbeddingTable::Load(
    const std::filesystem::path& path,
    std::optional<std::size_t> expected_dimension) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailure,
                "cannot open embeddings file " + path.string());
  }

  EmbeddingTable table;
  if (expected_dimension) table.dimension_ = *expected_dimension;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> fields = SplitWhitespace(line);
    if (fields.empty()) continue;

    const std::string where = path.string() + ":" + std::to_string(line_no);
    std::size_t components = fields.size() - 1;
    if (components == 0) {
      throw Error(ErrorCode::kMalformedLine, where + ": no vector components");
    }
    if (table.dimension_ == 0) table.dimension_ = components;
    if (components != table.dimension_) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": expected " + std::to_string(table.dimension_) +
                      " components, found " + std::to_string(components));
    }

    std::vector<double> vec(components);
    for (std::size_t i = 0; i < components; ++i) {
      if (!ParseFinite(fields[i + 1], &vec[i])) {
        throw Error(ErrorCode::kMalformedLine,
                    where + ": bad component '" + std::string(fields[i + 1]) +
                        "'");
      }
    }
    table.Insert(AsciiLower(fields[0]), std::move(vec), where);
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "read error on " + path.string());
  }
  if (table.entries_.empty()) {
    throw Error(ErrorCode::kEmptyFile,
                "no embeddings found in " + path.string());
  }
  return table;
}

EmbeddingTable EmbeddingTable::FromEntries(
    std::size_t dimension,
    std::vector<std::pair<std::string, std::vector<double>>> entries) {
  if (dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  }
  EmbeddingTable table;
  table.dimension_ = dimension;
  for (auto& [word, vec] : entries) {
    if (vec.size() != dimension) {
      throw Error(ErrorCode::kMalformedLine,
                  "entry '" + word + "' has wrong dimension");
    }
    for (double c : vec) {
      if (!std::isfinite(c)) {
        throw Error(ErrorCode::kMalformedLine,
                    "entry '" + word + "' has a non-finite component");
      }
    }
    if (word.empty()) {
      throw Error(ErrorCode::kMalformedLine, "empty word");
    }
    table.Insert(AsciiLower(word), std::move(vec), word);
  }
  if (table.entries_.empty()) {
    throw Error(ErrorCode::kEmptyFile, "no embeddings given");
  }
  return table;
}

void EmbeddingTable::Insert(std::string word, std::vector<double> components,
                            std::string_view where) {
  bool all_zero = std::all_of(components.begin(), components.end(),
                              [](double c) { return c == 0.0; });
  if (all_zero) {
    throw Error(ErrorCode::kZeroVector,
                std::string(where) + ": zero vector for '" + word + "'");
  }
  entries_.insert_or_assign(std::move(word), std::move(components));
}

std::optional<WordVector> EmbeddingTable::Lookup(std::string_view word) const {
  if (word.empty()) return std::nullopt;
  auto it = entries_.find(AsciiLower(word));
  if (it == entries_.end()) return std::nullopt;
  return WordVector(it->second);
}

double CosineSimilarity(WordVector u, WordVector v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cosine of vectors with " + std::to_string(u.size()) +
                    " and " + std::to_string(v.size()) + " components");
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (uu == 0.0 || vv == 0.0) {
    throw Error(ErrorCode::kZeroVector, "cosine of a zero vector");
  }
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

}  // namespace convorec
