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

#ifndef CONVOREC_ENGINE_H_
#define CONVOREC_ENGINE_H_

#include <filesystem>
#include <set>
#include <string>
#include <utility>

#include "convorec/embedding_store.h"
#include "convorec/sentiment.h"
#include "convorec/text_pipeline.h"

namespace convorec {

struct ResourcePaths {
  std::filesystem::path embeddings;
  std::filesystem::path stoplist;
  std::filesystem::path tagger_lexicon;
  std::filesystem::path sentiment_lexicon;

  // Files shipped in the data/ directory of the source tree.
  static ResourcePaths Bundled();
};

// Directory holding the bundled resource files.
std::filesystem::path BundledDataDir();

// Read-only resources shared by every request.
class Engine {
 public:
  Engine(EmbeddingTable embeddings, Stoplist stoplist, PosTagger tagger,
         SentimentLexicon sentiment,
         std::set<std::string> keep_tags = DefaultKeepTags())
      : embeddings_(std::move(embeddings)),
        stoplist_(std::move(stoplist)),
        tagger_(std::move(tagger)),
        sentiment_(std::move(sentiment)),
        keep_tags_(std::move(keep_tags)) {}

  static Engine Load(const ResourcePaths& paths);

  const EmbeddingTable& embeddings() const { return embeddings_; }
  const Stoplist& stoplist() const { return stoplist_; }
  const PosTagger& tagger() const { return tagger_; }
  const SentimentLexicon& sentiment() const { return sentiment_; }
  const std::set<std::string>& keep_tags() const { return keep_tags_; }

 private:
  EmbeddingTable embeddings_;
  Stoplist stoplist_;
  PosTagger tagger_;
  SentimentLexicon sentiment_;
  std::set<std::string> keep_tags_;
};

}  // namespace convorec

#endif  // CONVOREC_ENGINE_H_
