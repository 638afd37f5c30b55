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

#include "convorec/text_pipeline.h"

#include <algorithm>
#include <fstream>

#include "convorec/error.h"
#include "convorec/strings.h"

namespace convorec {

namespace {

constexpr std::string_view kNegationSuffix = "n't";

bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsNumber(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-') {
      return false;
    }
  }
  return digit;
}

// Replaces the UTF-8 right single quotation mark with an ASCII apostrophe;
// speech front ends often emit "don’t".
std::string NormalizeApostrophes(std::string text) {
  static constexpr std::string_view kCurly = "\xE2\x80\x99";
  size_t pos = 0;
  while ((pos = text.find(kCurly, pos)) != std::string::npos) {
    text.replace(pos, kCurly.size(), "'");
    ++pos;
  }
  return text;
}

template <typename Fn>
void ForEachDataLine(const std::filesystem::path& path, std::string_view what,
                     Fn&& fn) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailure,
                "cannot open " + std::string(what) + " " + path.string());
  }
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = TrimWhitespace(line);
    if (body.empty() || body.front() == '#') continue;
    fn(body, path.string() + ":" + std::to_string(line_no));
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "read error on " + path.string());
  }
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::string lowered = NormalizeApostrophes(AsciiLower(text));
  std::vector<Token> tokens;
  for (std::string_view piece : SplitWhitespace(lowered)) {
    while (!piece.empty() && IsAsciiPunct(piece.front())) piece.remove_prefix(1);
    while (!piece.empty() && IsAsciiPunct(piece.back())) piece.remove_suffix(1);
    if (piece.empty()) continue;
    if (piece.size() > kNegationSuffix.size() &&
        EndsWith(piece, kNegationSuffix)) {
      tokens.emplace_back(piece.substr(0, piece.size() - kNegationSuffix.size()));
      tokens.emplace_back(kNegationSuffix);
    } else {
      tokens.emplace_back(piece);
    }
  }
  return tokens;
}

Stoplist Stoplist::Load(const std::filesystem::path& path) {
  std::vector<std::string> words;
  ForEachDataLine(path, "stopword file",
                  [&](std::string_view body, const std::string&) {
                    words.emplace_back(body);
                  });
  if (words.empty()) {
    throw Error(ErrorCode::kEmptyFile, "no stopwords in " + path.string());
  }
  return FromWords(words);
}

Stoplist Stoplist::FromWords(const std::vector<std::string>& words) {
  Stoplist stoplist;
  for (const auto& w : words) stoplist.words_.insert(AsciiLower(w));
  return stoplist;
}

bool Stoplist::Contains(std::string_view word) const {
  return words_.count(AsciiLower(word)) > 0;
}

std::vector<Token> RemoveStopwords(const std::vector<Token>& tokens,
                                   const Stoplist& stoplist) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stoplist.Contains(t)) kept.push_back(t);
  }
  return kept;
}

const std::set<std::string>& PennTagSet() {
  static const std::set<std::string> kTags = {
      "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS",
      "LS",  "MD",  "NN",   "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",
      "PRP$", "RB", "RBR",  "RBS", "RP",  "SYM", "TO",  "UH",  "VB",
      "VBD", "VBG", "VBN",  "VBP", "VBZ", "WDT", "WP",  "WP$", "WRB",
      "$",   "#",   "``",   "''",  "(",   ")",   ",",   ".",   ":"};
  return kTags;
}

std::set<std::string> DefaultKeepTags() {
  return {"NN", "NNS", "NNP", "NNPS", "VB",  "VBD", "VBG",
          "VBN", "VBP", "VBZ", "JJ",  "JJR", "JJS"};
}

PosTagger PosTagger::Load(const std::filesystem::path& path) {
  std::unordered_map<std::string, std::string> lexicon;
  ForEachDataLine(
      path, "tagger lexicon",
      [&](std::string_view body, const std::string& where) {
        std::vector<std::string_view> fields = SplitWhitespace(body);
        if (fields.size() != 2) {
          throw Error(ErrorCode::kMalformedLine,
                      where + ": expected `word TAG`");
        }
        std::string tag(fields[1]);
        if (PennTagSet().count(tag) == 0) {
          throw Error(ErrorCode::kMalformedLine,
                      where + ": unknown tag '" + tag + "'");
        }
        lexicon.insert_or_assign(AsciiLower(fields[0]), std::move(tag));
      });
  if (lexicon.empty()) {
    throw Error(ErrorCode::kEmptyFile, "no entries in " + path.string());
  }
  return FromLexicon(std::move(lexicon));
}

PosTagger PosTagger::FromLexicon(
    std::unordered_map<std::string, std::string> lexicon) {
  PosTagger tagger;
  for (auto& [word, tag] : lexicon) {
    if (PennTagSet().count(tag) == 0) {
      throw Error(ErrorCode::kMalformedLine, "unknown tag '" + tag + "'");
    }
    tagger.lexicon_.insert_or_assign(AsciiLower(word), std::move(tag));
  }
  return tagger;
}

std::string PosTagger::TagWord(std::string_view word) const {
  std::string lowered = AsciiLower(word);
  if (auto it = lexicon_.find(lowered); it != lexicon_.end()) {
    return it->second;
  }
  if (IsNumber(lowered)) return "CD";
  if (lowered.size() > 4 && EndsWith(lowered, "ing")) return "VBG";
  if (lowered.size() > 3 && EndsWith(lowered, "ed")) return "VBD";
  if (lowered.size() > 3 && EndsWith(lowered, "ly")) return "RB";
  if (lowered.size() > 2 && EndsWith(lowered, "s") && !EndsWith(lowered, "ss")) {
    return "NNS";
  }
  return "NN";
}

std::vector<TaggedToken> PosTagger::Tag(const std::vector<Token>& tokens) const {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  for (const auto& t : tokens) tagged.push_back({t, TagWord(t)});
  return tagged;
}

ImportantWords ExtractImportantWords(const std::vector<TaggedToken>& tagged,
                                     const std::set<std::string>& keep_tags) {
  ImportantWords words;
  for (const auto& tt : tagged) {
    if (keep_tags.count(tt.tag)) words.push_back(tt.token);
  }
  return words;
}

ImportantWords ProcessUtterance(std::string_view text, const Stoplist& stoplist,
                                const PosTagger& tagger,
                                const std::set<std::string>& keep_tags) {
  return ExtractImportantWords(
      tagger.Tag(RemoveStopwords(Tokenize(text), stoplist)), keep_tags);
}

}  // namespace convorec
