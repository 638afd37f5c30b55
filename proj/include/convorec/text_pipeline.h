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

#ifndef CONVOREC_TEXT_PIPELINE_H_
#define CONVOREC_TEXT_PIPELINE_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace convorec {

// Token text is lowercase, non-empty and free of whitespace.
using Token = std::string;

struct TaggedToken {
  Token token;
  std::string tag;  // Penn Treebank symbol

  bool operator==(const TaggedToken&) const = default;
};

// Content-bearing tokens in utterance order, duplicates preserved.
using ImportantWords = std::vector<Token>;

// Lowercases, splits on whitespace, strips leading and trailing punctuation
// from every piece and splits a trailing "n't" into its own token, so
// "I don't" becomes [i, do, n't].
std::vector<Token> Tokenize(std::string_view text);

class Stoplist {
 public:
  // One word per line; '#' starts a comment line. Throws kIoFailure, or
  // kEmptyFile when no words are listed.
  static Stoplist Load(const std::filesystem::path& path);
  static Stoplist FromWords(const std::vector<std::string>& words);

  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Drops tokens whose casefolded form is in the stoplist.
std::vector<Token> RemoveStopwords(const std::vector<Token>& tokens,
                                   const Stoplist& stoplist);

// Penn Treebank tag set, punctuation tags included.
const std::set<std::string>& PennTagSet();

// Nouns, verbs and adjectives.
std::set<std::string> DefaultKeepTags();

// Context-free tagger: lexicon lookup (word -> most frequent tag), then
// suffix rules for unknown words, then NN.
class PosTagger {
 public:
  // Lines are `word TAG`; '#' comment lines and blank lines are skipped.
  // Throws kIoFailure, kEmptyFile, or kMalformedLine for a line without
  // exactly two fields or with a tag outside PennTagSet().
  static PosTagger Load(const std::filesystem::path& path);
  static PosTagger FromLexicon(
      std::unordered_map<std::string, std::string> lexicon);

  std::string TagWord(std::string_view word) const;
  std::vector<TaggedToken> Tag(const std::vector<Token>& tokens) const;

  std::size_t lexicon_size() const { return lexicon_.size(); }

 private:
  std::unordered_map<std::string, std::string> lexicon_;
};

ImportantWords ExtractImportantWords(const std::vector<TaggedToken>& tagged,
                                     const std::set<std::string>& keep_tags);

// tokenize -> remove stopwords -> tag -> keep-tag filter. Stopwords are removed
// before tagging, so the tagger never sees them.
ImportantWords ProcessUtterance(std::string_view text, const Stoplist& stoplist,
                                const PosTagger& tagger,
                                const std::set<std::string>& keep_tags);

}  // namespace convorec

#endif  // CONVOREC_TEXT_PIPELINE_H_
