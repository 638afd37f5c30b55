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

#include <gtest/gtest.h>

#include <random>

#include "convorec/engine.h"
#include "convorec/profile_io.h"
#include "convorec/strings.h"
#include "oracle.h"
#include "test_util.h"

namespace convorec {
namespace {

using testing::BundledEngine;
using testing::CaptureCode;

const EmbeddingTable& Table() { return BundledEngine().embeddings(); }

const oracle::Vectors& OracleVectors() {
  static const oracle::Vectors v =
      oracle::ReadVectors(BundledDataDir() / "embeddings_mini.txt");
  return v;
}

std::map<std::string, long long> AsOracle(const KeywordProfile& kp) {
  return {kp.begin(), kp.end()};
}

std::vector<std::string> Vocabulary() {
  std::vector<std::string> words;
  for (const auto& [w, v] : OracleVectors()) words.push_back(w);
  return words;
}

TEST(HeaderSimilarityTest, Examples) {
  EXPECT_NEAR(HeaderSimilarity("dress", "Dress", Table()), 1.0, 1e-12);
  // Frozen from an independent numpy computation over the fixture file.
  EXPECT_NEAR(HeaderSimilarity("dress", "Electronics", Table()),
              0.088409671593757, 1e-12);
  EXPECT_NEAR(oracle::Header(OracleVectors(), "dress", "electronics"),
              0.088409671593757, 1e-12);
  EXPECT_EQ(HeaderSimilarity("dress", "Qzxv Items", Table()), 0.0);
  EXPECT_EQ(HeaderSimilarity("qzxv", "Dress", Table()), 0.0);
}

TEST(HeaderSimilarityTest, MultiWordNameAveragesParts) {
  for (const char* word : {"sofa", "dress", "kitchen"}) {
    EXPECT_NEAR(HeaderSimilarity(word, "Home Furniture", Table()),
                oracle::Header(OracleVectors(), word, "home furniture"), 1e-12);
    // OOV parts are ignored.
    EXPECT_NEAR(HeaderSimilarity(word, "Qzxv  FURNITURE", Table()),
                HeaderSimilarity(word, "furniture", Table()), 1e-12);
  }
}

TEST(HeaderSimilarityTest, CancellingPartsGiveZero) {
  auto table = EmbeddingTable::FromEntries(
      2, {{"up", {0, 1}}, {"down", {0, -1}}, {"q", {1, 1}}});
  EXPECT_EQ(HeaderSimilarity("q", "up down", table), 0.0);
}

TEST(KeywordWeightedSimilarityTest, Examples) {
  EXPECT_NEAR(KeywordWeightedSimilarity("dress", {{"dress", 5}}, Table()), 1.0,
              1e-12);
  KeywordProfile kp = {{"gown", 1}, {"sneakers", 3}};
  EXPECT_NEAR(KeywordWeightedSimilarity("shoes", kp, Table()),
              0.761733915935712, 1e-12);
  EXPECT_NEAR(oracle::KeywordWeighted(OracleVectors(), "shoes", AsOracle(kp)),
              0.761733915935712, 1e-12);
  EXPECT_EQ(KeywordWeightedSimilarity("dress", {{"qzxv", 7}}, Table()), 0.0);
  EXPECT_EQ(KeywordWeightedSimilarity("qzxv", {{"dress", 7}}, Table()), 0.0);
  EXPECT_EQ(KeywordWeightedSimilarity("dress", {}, Table()), 0.0);
}

TEST(KeywordWeightedSimilarityTest, OOVKeywordsAreSkipped) {
  KeywordProfile with_oov = {{"gown", 2}, {"qzxv", 50}, {"skirt", 1}};
  KeywordProfile without = {{"gown", 2}, {"skirt", 1}};
  EXPECT_DOUBLE_EQ(KeywordWeightedSimilarity("dress", with_oov, Table()),
                   KeywordWeightedSimilarity("dress", without, Table()));
}

KeywordProfile RandomProfile(std::mt19937& rng,
                             const std::vector<std::string>& vocab) {
  std::uniform_int_distribution<size_t> n(1, 8), pick(0, vocab.size() - 1);
  std::uniform_int_distribution<int> freq(1, 50);
  KeywordProfile kp;
  for (size_t i = 0, count = n(rng); i < count; ++i) {
    // Roughly one keyword in ten is out of vocabulary.
    std::string k = rng() % 10 == 0 ? "oov" + std::to_string(rng() % 100)
                                    : vocab[pick(rng)];
    kp[k] = freq(rng);
  }
  return kp;
}

TEST(KeywordWeightedSimilarityTest, MatchesBruteForceOracle) {
  const auto vocab = Vocabulary();
  std::mt19937 rng(1234);
  std::uniform_int_distribution<size_t> pick(0, vocab.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    std::string word = rng() % 20 == 0 ? "qzxv" : vocab[pick(rng)];
    KeywordProfile kp = RandomProfile(rng, vocab);
    EXPECT_NEAR(KeywordWeightedSimilarity(word, kp, Table()),
                oracle::KeywordWeighted(OracleVectors(), word, AsOracle(kp)),
                1e-9);
  }
}

TEST(KeywordWeightedSimilarityTest, FrequencyScaleInvariance) {
  const auto vocab = Vocabulary();
  std::mt19937 rng(77);
  std::uniform_int_distribution<size_t> pick(0, vocab.size() - 1);
  for (int i = 0; i < 300; ++i) {
    KeywordProfile kp = RandomProfile(rng, vocab);
    const std::string& word = vocab[pick(rng)];
    double base = KeywordWeightedSimilarity(word, kp, Table());
    for (int c : {2, 7, 100}) {
      KeywordProfile scaled = kp;
      for (auto& [k, f] : scaled) f *= c;
      EXPECT_NEAR(KeywordWeightedSimilarity(word, scaled, Table()), base, 1e-9);
    }
  }
}

TEST(ScoreCategoriesTest, Examples) {
  auto table = EmbeddingTable::FromEntries(2, {{"dress", {1, 0.5}}});
  UserProfile profile = {{"Dress", {{"dress", 1}}}};
  auto scores = ScoreCategories({"dress"}, profile, table, 0.5);
  EXPECT_NEAR(scores.at("Dress"), 1.0, 1e-12);

  UserProfile two = {{"Dress", {{"gown", 3}}}, {"Shoes", {{"boots", 1}}}};
  auto header_only = ScoreCategories({"dress"}, two, Table(), 1.0);
  auto keyword_only = ScoreCategories({"dress"}, two, Table(), 0.0);
  for (const auto& [c, kp] : two) {
    EXPECT_NEAR(header_only.at(c), HeaderSimilarity("dress", c, Table()), 1e-12);
    EXPECT_NEAR(keyword_only.at(c),
                KeywordWeightedSimilarity("dress", kp, Table()), 1e-12);
  }
  EXPECT_EQ(CaptureCode([&] { ScoreCategories({}, two, Table(), 0.5); }),
            ErrorCode::kNoSignal);
}

TEST(ScoreCategoriesTest, SampleProfileMatchesOracle) {
  // Frozen from an independent numpy computation; the C++ oracle below must
  // agree as well.
  const std::map<std::string, double> expected = {
      {"Beauty", 0.315449763209285},   {"Books", 0.336337238220816},
      {"Dress", 0.473574821845767},    {"Electronics", 0.245402322911001},
      {"Groceries", 0.234948182626192}, {"Home Furniture", 0.404514832696510},
      {"Jewelry", 0.280088163011095},  {"Shoes", 0.386002138126985},
      {"Sports", 0.336458648305834},   {"Toys", 0.255334557640743},
  };
  const ImportantWords words = {"need", "new", "dress"};
  auto scores = ScoreCategories(words, SampleProfile(), Table(), 0.5);
  ASSERT_EQ(scores.size(), 10u);
  for (const auto& [category, kp] : SampleProfile()) {
    double oracle_sum = 0;
    for (const auto& w : words) {
      oracle_sum +=
          0.5 * oracle::Header(OracleVectors(), w, AsciiLower(category)) +
          0.5 * oracle::KeywordWeighted(OracleVectors(), w, AsOracle(kp));
    }
    EXPECT_NEAR(scores.at(category), oracle_sum / 3, 1e-9) << category;
    EXPECT_NEAR(scores.at(category), expected.at(category), 1e-12) << category;
  }
}

TEST(ScoreCategoriesTest, ScoresStayInRange) {
  const auto vocab = Vocabulary();
  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> pick(0, vocab.size() - 1);
  std::uniform_real_distribution<double> beta(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    UserProfile profile;
    for (int c = 0; c < 4; ++c) {
      profile[vocab[pick(rng)] + " " + vocab[pick(rng)]] =
          RandomProfile(rng, vocab);
    }
    ImportantWords words = {vocab[pick(rng)], vocab[pick(rng)], "qzxv"};
    for (const auto& [c, s] : ScoreCategories(words, profile, Table(), beta(rng))) {
      EXPECT_GE(s, -1.0);
      EXPECT_LE(s, 1.0);
    }
  }
}

std::vector<std::string> Names(const std::vector<CategoryScore>& ranked) {
  std::vector<std::string> out;
  for (const auto& r : ranked) out.push_back(r.category);
  return out;
}

TEST(RankTopKTest, Examples) {
  CategoryScores scores = {{"A", 0.9}, {"B", 0.5}, {"C", 0.7}, {"D", 0.1}};
  using V = std::vector<std::string>;
  EXPECT_EQ(Names(RankTopK(scores, 3, true)), (V{"A", "C", "B"}));
  EXPECT_EQ(Names(RankTopK(scores, 3, false)), (V{"D", "B", "C"}));
  EXPECT_EQ(Names(RankTopK({{"A", 0.9}, {"B", 0.5}}, 3, true)), (V{"A", "B"}));
  EXPECT_EQ(Names(RankTopK({{"B", 0.5}, {"A", 0.5}, {"C", 0.6}}, 3, true)),
            (V{"C", "A", "B"}));
  EXPECT_EQ(Names(RankTopK({{"B", 0.5}, {"A", 0.5}, {"C", 0.6}}, 3, false)),
            (V{"A", "B", "C"}));
  EXPECT_EQ(CaptureCode([] { RankTopK({}, 3, true); }), ErrorCode::kEmptyScores);
}

TEST(RankTopKTest, RandomizedOrderingAndFlip) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 500; ++i) {
    CategoryScores scores;
    for (size_t c = 0, n = 1 + rng() % 12; c < n; ++c) {
      scores["c" + std::to_string(c)] = u(rng);
    }
    size_t k = 1 + rng() % 6;
    auto desc = RankTopK(scores, k, true);
    auto asc = RankTopK(scores, k, false);
    ASSERT_EQ(desc.size(), std::min(k, scores.size()));
    ASSERT_EQ(asc.size(), desc.size());
    for (size_t j = 1; j < desc.size(); ++j) {
      EXPECT_GE(desc[j - 1].score, desc[j].score);
      EXPECT_LE(asc[j - 1].score, asc[j].score);
    }
    // Full-length rankings are exact reverses when scores are distinct.
    auto full_desc = RankTopK(scores, scores.size(), true);
    auto full_asc = RankTopK(scores, scores.size(), false);
    std::reverse(full_asc.begin(), full_asc.end());
    EXPECT_EQ(full_desc, full_asc);
  }
}

TEST(RecommendTest, DemoScenarios) {
  RecommenderConfig config;
  auto positive = Recommend("I need a new dress", SampleProfile(),
                            BundledEngine(), config);
  ASSERT_EQ(positive.ranked.size(), 3u);
  EXPECT_EQ(positive.ranked[0].category, "Dress");
  EXPECT_TRUE(positive.sentiment.positivity);
  EXPECT_EQ(positive.important_words, (ImportantWords{"need", "new", "dress"}));

  auto negative = Recommend("I don't want a new dress", SampleProfile(),
                            BundledEngine(), config);
  EXPECT_FALSE(negative.sentiment.positivity);
  EXPECT_NEAR(negative.sentiment.polarity, 0.136, 1e-12);
  ASSERT_EQ(negative.ranked.size(), 3u);
  for (const auto& r : negative.ranked) EXPECT_NE(r.category, "Dress");
}

TEST(RecommendTest, Errors) {
  RecommenderConfig config;
  EXPECT_EQ(CaptureCode([&] {
              Recommend("the a an", SampleProfile(), BundledEngine(), config);
            }),
            ErrorCode::kNoSignal);
  EXPECT_EQ(CaptureCode([&] {
              Recommend("I need a dress", {}, BundledEngine(), config);
            }),
            ErrorCode::kInvalidProfile);
  RecommenderConfig bad;
  bad.header_weight = 1.5;
  EXPECT_EQ(CaptureCode([&] {
              Recommend("I need a dress", SampleProfile(), BundledEngine(), bad);
            }),
            ErrorCode::kInvalidArgument);
}

TEST(RecommendTest, KControlsLengthAndIsDeterministic) {
  RecommenderConfig config;
  config.k = 20;
  auto a = Recommend("looking for a gift for my daughter", SampleProfile(),
                     BundledEngine(), config);
  auto b = Recommend("looking for a gift for my daughter", SampleProfile(),
                     BundledEngine(), config);
  EXPECT_EQ(a.ranked.size(), 10u);
  EXPECT_EQ(a, b);
}

TEST(ApplyFeedbackTest, Examples) {
  UserProfile profile = {{"Dress", {{"gown", 2}}}};
  EXPECT_EQ(ApplyFeedback(profile, {"Dress"}, {"dress", "dress", "new"}),
            (UserProfile{{"Dress", {{"gown", 2}, {"dress", 2}, {"new", 1}}}}));
  EXPECT_EQ(ApplyFeedback(profile, {}, {"dress"}), profile);

  UserProfile capped = {{"Dress", {{"a", 1}, {"b", 5}}}};
  EXPECT_EQ(ApplyFeedback(capped, {"Dress"}, {"c"}, 2),
            (UserProfile{{"Dress", {{"b", 5}, {"c", 1}}}}));
}

TEST(ApplyFeedbackTest, EvictionTiesByName) {
  UserProfile profile = {{"X", {{"m", 1}, {"z", 1}, {"q", 3}}}};
  EXPECT_EQ(ApplyFeedback(profile, {"X"}, {"a"}, 2),
            (UserProfile{{"X", {{"q", 3}, {"z", 1}}}}));
}

TEST(ApplyFeedbackTest, Errors) {
  UserProfile profile = {{"Dress", {{"gown", 2}}}};
  EXPECT_EQ(CaptureCode([&] { ApplyFeedback(profile, {"Nope"}, {"x"}); }),
            ErrorCode::kUnknownCategory);
  EXPECT_EQ(CaptureCode([&] { ApplyFeedback(profile, {"Dress"}, {""}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CaptureCode([&] { ApplyFeedback(profile, {"Dress"}, {"x"}, 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(ApplyFeedbackTest, RandomizedInvariants) {
  const auto vocab = Vocabulary();
  std::mt19937 rng(21);
  std::uniform_int_distribution<size_t> pick(0, vocab.size() - 1);
  const UserProfile& base = SampleProfile();
  std::vector<std::string> names;
  for (const auto& [c, kp] : base) names.push_back(c);

  for (int i = 0; i < 300; ++i) {
    std::set<std::string> selected;
    for (const auto& n : names) {
      if (rng() % 3 == 0) selected.insert(n);
    }
    const std::string& w = vocab[pick(rng)];
    std::optional<size_t> cap;
    if (rng() % 2) cap = 1 + rng() % 8;
    UserProfile updated = ApplyFeedback(base, selected, {w}, cap);

    for (const auto& [c, kp] : updated) {
      for (const auto& [k, f] : kp) EXPECT_GE(f, 1);
      if (!selected.count(c)) {
        EXPECT_EQ(ProfileToJson({{c, kp}}).dump(),
                  ProfileToJson({{c, base.at(c)}}).dump());
      } else if (!cap) {
        // Reinforcement: a word's own similarity never drops.
        EXPECT_GE(KeywordWeightedSimilarity(w, kp, Table()) + 1e-12,
                  KeywordWeightedSimilarity(w, base.at(c), Table()));
      } else {
        EXPECT_LE(kp.size(), *cap);
      }
    }
  }
}

}  // namespace
}  // namespace convorec
