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

#ifndef CONVOREC_SENTIMENT_H_
#define CONVOREC_SENTIMENT_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "convorec/text_pipeline.h"

namespace convorec {

// Utterances scoring below this are treated as lacking positive intent. Set
// above zero because weakly negative requests ("I don't want a new dress")
// still come out slightly positive from the lexicon.
inline constexpr double kDefaultPositivityThreshold = 0.2;

// A sentiment word is negated when a negator sits among the kNegationWindow
// tokens right before it; its score is then multiplied by kNegationFactor.
inline constexpr std::size_t kNegationWindow = 2;
inline constexpr double kNegationFactor = -0.5;

// word -> polarity in [-1, 1], plus a disjoint set of negators.
class SentimentLexicon {
 public:
  // Lines are `word<TAB>polarity` or `NEG<TAB>word`; '#' comment lines and
  // blank lines are skipped. A later line for the same word replaces the
  // earlier one. Throws kIoFailure, kMalformedLine, kPolarityOutOfRange.
  static SentimentLexicon Load(const std::filesystem::path& path);

  static SentimentLexicon FromEntries(
      const std::unordered_map<std::string, double>& entries,
      const std::vector<std::string>& negators);

  std::optional<double> Polarity(std::string_view word) const;
  bool IsNegator(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t negator_count() const { return negators_.size(); }

 private:
  void SetPolarity(std::string word, double polarity);
  void AddNegator(std::string word);

  std::unordered_map<std::string, double> entries_;
  std::unordered_set<std::string> negators_;
};

struct SentimentResult {
  double polarity = 0.0;
  bool positivity = false;

  bool operator==(const SentimentResult&) const = default;
};

// Mean score of the sentiment-bearing tokens, 0.0 when there are none. Feed it
// the tokenizer output before stopword removal so negators are still present.
double AnalyzePolarity(const std::vector<Token>& tokens,
                       const SentimentLexicon& lexicon);

// False iff polarity < threshold. Throws kPolarityOutOfRange when polarity is
// outside [-1, 1] (or NaN).
bool ClassifyPositivity(double polarity,
                        double threshold = kDefaultPositivityThreshold);

SentimentResult AnalyzeSentiment(const std::vector<Token>& tokens,
                                 const SentimentLexicon& lexicon,
                                 double threshold = kDefaultPositivityThreshold);

}  // namespace convorec

#endif  // CONVOREC_SENTIMENT_H_
