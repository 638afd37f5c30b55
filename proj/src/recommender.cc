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

#include "convorec/recommender.h"

#include <algorithm>
#include <cmath>

#include "convorec/engine.h"
#include "convorec/error.h"
#include "convorec/strings.h"

namespace convorec {

namespace {

bool IsLowercase(std::string_view s) {
  return std::none_of(s.begin(), s.end(),
                      [](char c) { return c >= 'A' && c <= 'Z'; });
}

}  // namespace

void ValidateProfile(const UserProfile& profile) {
  if (profile.empty()) {
    throw Error(ErrorCode::kInvalidProfile,
                "profile must hold at least one category");
  }
  for (const auto& [category, keywords] : profile) {
    if (TrimWhitespace(category).empty()) {
      throw Error(ErrorCode::kInvalidProfile, "empty category name");
    }
    for (const auto& [keyword, frequency] : keywords) {
      if (keyword.empty() || !IsLowercase(keyword)) {
        throw Error(ErrorCode::kInvalidProfile,
                    "category '" + category + "': keyword '" + keyword +
                        "' must be non-empty and lowercase");
      }
      if (frequency < 1) {
        throw Error(ErrorCode::kInvalidProfile,
                    "category '" + category + "': keyword '" + keyword +
                        "' has frequency " + std::to_string(frequency));
      }
    }
  }
}

void RecommenderConfig::Validate() const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (!(header_weight >= 0.0 && header_weight <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "beta must lie in [0, 1]");
  }
  if (!(positivity_threshold >= -1.0 && positivity_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must lie in [-1, 1]");
  }
}

double HeaderSimilarity(std::string_view word, std::string_view category,
                        const EmbeddingTable& table) {
  std::optional<WordVector> query = table.Lookup(word);
  if (!query) return 0.0;

  std::vector<double> centroid(table.dimension(), 0.0);
  size_t parts = 0;
  std::string lowered = AsciiLower(category);
  for (std::string_view part : SplitWhitespace(lowered)) {
    std::optional<WordVector> v = table.Lookup(part);
    if (!v) continue;
    for (size_t i = 0; i < centroid.size(); ++i) centroid[i] += (*v)[i];
    ++parts;
  }
  if (parts == 0) return 0.0;
  for (double& c : centroid) c /= static_cast<double>(parts);
  // Opposite part vectors can cancel out exactly.
  if (std::all_of(centroid.begin(), centroid.end(),
                  [](double c) { return c == 0.0; })) {
    return 0.0;
  }
  return CosineSimilarity(*query, centroid);
}

double KeywordWeightedSimilarity(std::string_view word,
                                 const KeywordProfile& keywords,
                                 const EmbeddingTable& table) {
  std::optional<WordVector> query = table.Lookup(word);
  if (!query) return 0.0;
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [keyword, frequency] : keywords) {
    std::optional<WordVector> v = table.Lookup(keyword);
    if (!v) continue;
    const double f = static_cast<double>(frequency);
    weighted += f * CosineSimilarity(*query, *v);
    total += f;
  }
  if (total == 0.0) return 0.0;
  return std::clamp(weighted / total, -1.0, 1.0);
}

CategoryScores ScoreCategories(const ImportantWords& words,
                               const UserProfile& profile,
                               const EmbeddingTable& table,
                               double header_weight) {
  if (words.empty()) {
    throw Error(ErrorCode::kNoSignal, "no important words to score");
  }
  CategoryScores scores;
  for (const auto& [category, keywords] : profile) {
    double sum = 0.0;
    for (const auto& word : words) {
      sum += header_weight * HeaderSimilarity(word, category, table) +
             (1.0 - header_weight) *
                 KeywordWeightedSimilarity(word, keywords, table);
    }
    scores[category] =
        std::clamp(sum / static_cast<double>(words.size()), -1.0, 1.0);
  }
  return scores;
}

std::vector<CategoryScore> RankTopK(const CategoryScores& scores, std::size_t k,
                                    bool positivity) {
  if (scores.empty()) {
    throw Error(ErrorCode::kEmptyScores, "nothing to rank");
  }
  std::vector<CategoryScore> ranked;
  ranked.reserve(scores.size());
  for (const auto& [category, score] : scores) {
    ranked.push_back({category, score});
  }
  std::sort(ranked.begin(), ranked.end(),
            [positivity](const CategoryScore& a, const CategoryScore& b) {
              if (a.score != b.score) {
                return positivity ? a.score > b.score : a.score < b.score;
              }
              return a.category < b.category;
            });
  ranked.resize(std::min(k, ranked.size()));
  return ranked;
}

RecommendationResult Recommend(std::string_view text, const UserProfile& profile,
                               const Engine& engine,
                               const RecommenderConfig& config) {
  config.Validate();
  ValidateProfile(profile);

  std::vector<Token> tokens = Tokenize(text);
  RecommendationResult result;
  result.important_words = ExtractImportantWords(
      engine.tagger().Tag(RemoveStopwords(tokens, engine.stoplist())),
      engine.keep_tags());
  if (result.important_words.empty()) {
    throw Error(ErrorCode::kNoSignal,
                "no important words survived filtering");
  }
  // Sentiment sees the unfiltered tokens so negators are still there.
  result.sentiment = AnalyzeSentiment(tokens, engine.sentiment(),
                                      config.positivity_threshold);
  CategoryScores scores = ScoreCategories(result.important_words, profile,
                                          engine.embeddings(),
                                          config.header_weight);
  result.ranked = RankTopK(scores, config.k, result.sentiment.positivity);
  return result;
}

UserProfile ApplyFeedback(const UserProfile& profile,
                          const std::set<std::string>& selected,
                          const ImportantWords& words,
                          std::optional<std::size_t> keyword_cap) {
  for (const auto& name : selected) {
    if (profile.count(name) == 0) {
      throw Error(ErrorCode::kUnknownCategory,
                  "unknown category '" + name + "'");
    }
  }
  if (keyword_cap && *keyword_cap == 0) {
    throw Error(ErrorCode::kInvalidArgument, "keyword cap must be >= 1");
  }

  std::map<std::string, std::int64_t> counts;
  for (const auto& word : words) {
    std::string keyword = AsciiLower(TrimWhitespace(word));
    if (keyword.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty important word");
    }
    ++counts[keyword];
  }

  UserProfile updated = profile;
  for (const auto& name : selected) {
    KeywordProfile& keywords = updated.at(name);
    for (const auto& [keyword, count] : counts) keywords[keyword] += count;

    if (!keyword_cap || keywords.size() <= *keyword_cap) continue;
    std::vector<std::pair<std::string, std::int64_t>> order(keywords.begin(),
                                                            keywords.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return a.first < b.first;
    });
    for (size_t i = 0; keywords.size() > *keyword_cap; ++i) {
      keywords.erase(order[i].first);
    }
  }
  return updated;
}

}  // namespace convorec
