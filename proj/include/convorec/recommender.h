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

#ifndef CONVOREC_RECOMMENDER_H_
#define CONVOREC_RECOMMENDER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "convorec/embedding_store.h"
#include "convorec/sentiment.h"
#include "convorec/text_pipeline.h"

namespace convorec {

// keyword -> frequency. Keywords are lowercase and non-empty, frequencies >= 1.
using KeywordProfile = std::map<std::string, std::int64_t>;

// Category name -> keyword profile. This is the client-owned personalization
// state; it always holds at least one category.
using UserProfile = std::map<std::string, KeywordProfile>;

// Throws kInvalidProfile naming the first violated invariant.
void ValidateProfile(const UserProfile& profile);

struct CategoryScore {
  std::string category;
  double score = 0.0;

  bool operator==(const CategoryScore&) const = default;
};

using CategoryScores = std::map<std::string, double>;

struct RecommendationResult {
  std::vector<CategoryScore> ranked;
  ImportantWords important_words;
  SentimentResult sentiment;

  bool operator==(const RecommendationResult&) const = default;
};

struct RecommenderConfig {
  std::size_t k = 3;
  // Weight of the header stage; the keyword stage gets 1 - header_weight.
  double header_weight = 0.5;
  double positivity_threshold = kDefaultPositivityThreshold;

  // Throws kInvalidArgument unless k >= 1, header_weight in [0, 1] and the
  // threshold in [-1, 1].
  void Validate() const;
};

// Cosine between the word and the mean of the category name's in-vocabulary
// parts (the name is lowercased and split on whitespace). 0.0 when the word
// or every part is out of vocabulary.
double HeaderSimilarity(std::string_view word, std::string_view category,
                        const EmbeddingTable& table);

// sum(f_i * cos(word, k_i)) / sum(f_i) over the in-vocabulary keywords k_i.
// 0.0 when the word is out of vocabulary or no keyword is.
double KeywordWeightedSimilarity(std::string_view word,
                                 const KeywordProfile& keywords,
                                 const EmbeddingTable& table);

// Mean over words of header_weight * header + (1 - header_weight) * keyword
// similarity, for every category. Throws kNoSignal when words is empty.
CategoryScores ScoreCategories(const ImportantWords& words,
                               const UserProfile& profile,
                               const EmbeddingTable& table,
                               double header_weight);

// Descending by score when positive, ascending otherwise, ties by category
// name; at most k entries. Throws kEmptyScores on an empty map.
std::vector<CategoryScore> RankTopK(const CategoryScores& scores, std::size_t k,
                                    bool positivity);

class Engine;

// Full pipeline for one utterance. Throws kInvalidProfile, kInvalidArgument,
// or kNoSignal when no important words survive filtering.
RecommendationResult Recommend(std::string_view text, const UserProfile& profile,
                               const Engine& engine,
                               const RecommenderConfig& config);

// Adds each word's occurrence count to every selected category, then trims
// categories above `keyword_cap` distinct keywords by evicting the lowest
// frequencies (ties: ascending keyword). Non-selected categories are copied
// unchanged. Throws kUnknownCategory for a selected name not in the profile.
UserProfile ApplyFeedback(const UserProfile& profile,
                          const std::set<std::string>& selected,
                          const ImportantWords& words,
                          std::optional<std::size_t> keyword_cap = std::nullopt);

}  // namespace convorec

#endif  // CONVOREC_RECOMMENDER_H_
