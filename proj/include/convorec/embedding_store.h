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

#ifndef CONVOREC_EMBEDDING_STORE_H_
#define CONVOREC_EMBEDDING_STORE_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace convorec {

// A view of one stored embedding. Valid as long as the owning table lives.
using WordVector = std::span<const double>;

// Immutable word -> dense vector map. Keys are lowercase and non-empty, every
// vector has exactly dimension() finite components and at least one of them
// is nonzero.
class EmbeddingTable {
 public:
  // Reads a whitespace-delimited text file with one `word c1 ... cd` entry per
  // non-empty line (GloVe distribution format). Words are lowercased; when a
  // word repeats, the last line wins. If `expected_dimension` is given, every
  // line must carry exactly that many components.
  //
  // Throws Error with kIoFailure, kEmptyFile, kMalformedLine or kZeroVector.
  static EmbeddingTable Load(
      const std::filesystem::path& path,
      std::optional<std::size_t> expected_dimension = std::nullopt);

  // Builds a table from in-memory entries with the same validation as Load.
  static EmbeddingTable FromEntries(
      std::size_t dimension,
      std::vector<std::pair<std::string, std::vector<double>>> entries);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }

  // Returns the vector for the lowercased word, or nullopt when the word is
  // out of vocabulary. The empty word is never stored.
  std::optional<WordVector> Lookup(std::string_view word) const;

  bool Contains(std::string_view word) const {
    return Lookup(word).has_value();
  }

 private:
  EmbeddingTable() = default;

  void Insert(std::string word, std::vector<double> components,
              std::string_view where);

  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> entries_;
};

// dot(u, v) / (|u| |v|), clamped to [-1, 1]. Throws kDimensionMismatch when
// the lengths differ and kZeroVector when either input has zero norm.
double CosineSimilarity(WordVector u, WordVector v);

}  // namespace convorec

#endif  // CONVOREC_EMBEDDING_STORE_H_
