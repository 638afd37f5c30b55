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

#include "convorec/engine.h"

namespace convorec {

std::filesystem::path BundledDataDir() { return CONVOREC_DATA_DIR; }

ResourcePaths ResourcePaths::Bundled() {
  const std::filesystem::path dir = BundledDataDir();
  return {dir / "embeddings_mini.txt", dir / "stopwords_en.txt",
          dir / "tagger_lexicon.txt", dir / "sentiment_lexicon.txt"};
}

Engine Engine::Load(const ResourcePaths& paths) {
  return Engine(EmbeddingTable::Load(paths.embeddings),
                Stoplist::Load(paths.stoplist),
                PosTagger::Load(paths.tagger_lexicon),
                SentimentLexicon::Load(paths.sentiment_lexicon));
}

}  // namespace convorec
