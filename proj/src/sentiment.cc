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

#include "convorec/sentiment.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "convorec/error.h"
#include "convorec/strings.h"

namespace convorec {

namespace {

constexpr std::string_view kNegatorMarker = "NEG";

bool InRange(double polarity) {
  return polarity >= -1.0 && polarity <= 1.0;  // false for NaN
}

}  // namespace

SentimentLexicon SentimentLexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailure,
                "cannot open sentiment lexicon " + path.string());
  }
  SentimentLexicon lexicon;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = TrimWhitespace(line);
    if (body.empty() || body.front() == '#') continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);

    std::vector<std::string_view> fields = SplitWhitespace(body);
    if (fields.size() != 2) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": expected two tab-separated fields");
    }
    if (fields[0] == kNegatorMarker) {
      lexicon.AddNegator(AsciiLower(fields[1]));
      continue;
    }
    double polarity = 0.0;
    std::string_view num = fields[1];
    auto [ptr, ec] =
        std::from_chars(num.data(), num.data() + num.size(), polarity);
    if (ec != std::errc() || ptr != num.data() + num.size()) {
      throw Error(ErrorCode::kMalformedLine,
                  where + ": bad polarity '" + std::string(num) + "'");
    }
    if (!InRange(polarity)) {
      throw Error(ErrorCode::kPolarityOutOfRange,
                  where + ": polarity " + std::string(num) +
                      " outside [-1, 1]");
    }
    lexicon.SetPolarity(AsciiLower(fields[0]), polarity);
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "read error on " + path.string());
  }
  return lexicon;
}

SentimentLexicon SentimentLexicon::FromEntries(
    const std::unordered_map<std::string, double>& entries,
    const std::vector<std::string>& negators) {
  SentimentLexicon lexicon;
  for (const auto& [word, polarity] : entries) {
    if (!InRange(polarity)) {
      throw Error(ErrorCode::kPolarityOutOfRange,
                  "polarity for '" + word + "' outside [-1, 1]");
    }
    lexicon.SetPolarity(AsciiLower(word), polarity);
  }
  for (const auto& neg : negators) lexicon.AddNegator(AsciiLower(neg));
  return lexicon;
}

void SentimentLexicon::SetPolarity(std::string word, double polarity) {
  negators_.erase(word);
  entries_.insert_or_assign(std::move(word), polarity);
}

void SentimentLexicon::AddNegator(std::string word) {
  entries_.erase(word);
  negators_.insert(std::move(word));
}

std::optional<double> SentimentLexicon::Polarity(std::string_view word) const {
  auto it = entries_.find(AsciiLower(word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool SentimentLexicon::IsNegator(std::string_view word) const {
  return negators_.count(AsciiLower(word)) > 0;
}

double AnalyzePolarity(const std::vector<Token>& tokens,
                       const SentimentLexicon& lexicon) {
  double sum = 0.0;
  size_t count = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    std::optional<double> polarity = lexicon.Polarity(tokens[i]);
    if (!polarity) continue;
    double score = *polarity;
    size_t first = i >= kNegationWindow ? i - kNegationWindow : 0;
    for (size_t j = first; j < i; ++j) {
      if (lexicon.IsNegator(tokens[j])) {
        score *= kNegationFactor;
        break;
      }
    }
    sum += score;
    ++count;
  }
  if (count == 0) return 0.0;
  return std::clamp(sum / static_cast<double>(count), -1.0, 1.0);
}

bool ClassifyPositivity(double polarity, double threshold) {
  if (!InRange(polarity)) {
    throw Error(ErrorCode::kPolarityOutOfRange,
                "polarity " + std::to_string(polarity) + " outside [-1, 1]");
  }
  return !(polarity < threshold);
}

SentimentResult AnalyzeSentiment(const std::vector<Token>& tokens,
                                 const SentimentLexicon& lexicon,
                                 double threshold) {
  SentimentResult result;
  result.polarity = AnalyzePolarity(tokens, lexicon);
  result.positivity = ClassifyPositivity(result.polarity, threshold);
  return result;
}

}  // namespace convorec
