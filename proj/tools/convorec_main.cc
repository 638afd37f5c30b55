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

// convorec command-line driver: batch recommendation, feedback, profile
// bootstrapping and the HTTP service.
//
// Exit codes: 0 ok, 1 error, 2 no important words in the utterance.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>

#include "CLI11.hpp"

#include "convorec/engine.h"
#include "convorec/error.h"
#include "convorec/profile_io.h"
#include "convorec/recommender.h"
#include "convorec/service.h"
#include "convorec/strings.h"

namespace {

using convorec::Error;
using convorec::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoSignal = 2;

void AddResourceFlags(CLI::App* cmd, convorec::ResourcePaths* paths) {
  cmd->add_option("--embeddings", paths->embeddings, "word-vector text file")
      ->envname("CONVOREC_EMBEDDINGS");
  cmd->add_option("--stoplist", paths->stoplist, "stopword file");
  cmd->add_option("--tagger-lexicon", paths->tagger_lexicon,
                  "POS lexicon file (word TAG)");
  cmd->add_option("--sentiment-lexicon", paths->sentiment_lexicon,
                  "sentiment lexicon file");
}

void AddScoringFlags(CLI::App* cmd, convorec::RecommenderConfig* config) {
  cmd->add_option("--k", config->k, "number of categories to return")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--beta", config->header_weight,
                  "header-stage weight in [0,1]")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--threshold", config->positivity_threshold,
                  "polarity threshold for positive intent")
      ->check(CLI::Range(-1.0, 1.0));
}

void PrintReport(const convorec::RecommendationResult& result) {
  std::cout << std::fixed << std::setprecision(4);
  for (size_t i = 0; i < result.ranked.size(); ++i) {
    std::cout << i + 1 << ". " << result.ranked[i].category << "\t"
              << result.ranked[i].score << "\n";
  }
  std::cout << "important words:";
  for (const auto& w : result.important_words) std::cout << ' ' << w;
  std::cout << "\npolarity: " << result.sentiment.polarity << " ("
            << (result.sentiment.positivity ? "positive" : "negative")
            << ")\n";
}

struct RecommendArgs {
  std::optional<std::string> text;
  bool from_stdin = false;
  std::filesystem::path profile;
  bool json = false;
  convorec::ResourcePaths resources = convorec::ResourcePaths::Bundled();
  convorec::RecommenderConfig config;
};

int RunRecommend(const RecommendArgs& args) {
  convorec::UserProfile profile = convorec::LoadProfileFile(args.profile);
  convorec::Engine engine = convorec::Engine::Load(args.resources);

  if (!args.from_stdin) {
    try {
      auto result =
          convorec::Recommend(*args.text, profile, engine, args.config);
      if (args.json) {
        std::cout << convorec::RecommendationToJson(result).dump() << "\n";
      } else {
        PrintReport(result);
      }
      return kExitOk;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoSignal) throw;
      std::cerr << "convorec: " << e.what() << "\n";
      return kExitNoSignal;
    }
  }

  int status = kExitOk;
  std::string line;
  while (std::getline(std::cin, line)) {
    try {
      auto result = convorec::Recommend(line, profile, engine, args.config);
      std::cout << convorec::RecommendationToJson(result).dump() << "\n";
    } catch (const Error& e) {
      std::cout << convorec::ErrorToJson(convorec::ErrorCodeName(e.code()),
                                         e.what())
                       .dump()
                << "\n";
      if (e.code() == ErrorCode::kNoSignal) {
        if (status == kExitOk) status = kExitNoSignal;
      } else {
        status = kExitError;
      }
    }
  }
  return status;
}

struct FeedbackArgs {
  std::filesystem::path profile;
  std::string select;
  std::string words;
  std::optional<std::filesystem::path> out;
  bool in_place = false;
  std::optional<std::size_t> cap;
};

int RunFeedback(const FeedbackArgs& args) {
  if (args.out.has_value() == args.in_place) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --out or --in-place");
  }
  convorec::UserProfile profile = convorec::LoadProfileFile(args.profile);
  std::vector<std::string> selected = convorec::SplitCsv(args.select);
  convorec::UserProfile updated = convorec::ApplyFeedback(
      profile, {selected.begin(), selected.end()},
      convorec::SplitCsv(args.words), args.cap);
  convorec::SaveProfileFile(updated, args.out ? *args.out : args.profile);
  return kExitOk;
}

int RunInitProfile(const std::filesystem::path& out, bool force) {
  if (!force && std::filesystem::exists(out)) {
    throw Error(ErrorCode::kIoFailure,
                out.string() + " already exists (use --force to overwrite)");
  }
  convorec::SaveProfileFile(convorec::SampleProfile(), out);
  return kExitOk;
}

// CLI11 quietly drops env values it cannot convert, so CONVOREC_PORT is
// read by hand.
int ParsePort(std::string_view text) {
  int port = -1;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), port);
  if (ec != std::errc() || end != text.data() + text.size() || port < 0 ||
      port > 65535) {
    throw Error(ErrorCode::kInvalidArgument,
                "CONVOREC_PORT is not a port: " + std::string(text));
  }
  return port;
}

int RunServe(const convorec::ServiceConfig& config) {
  convorec::Service service(config);
  int port = service.Bind();
  std::cerr << "convorec: listening on http://" << config.host << ":" << port
            << std::endl;
  std::thread server([&service] { service.Run(); });

  try {
    service.SetEngine(std::make_shared<const convorec::Engine>(
        convorec::Engine::Load(config.resources)));
  } catch (...) {
    service.Stop();
    server.join();
    throw;
  }
  std::cerr << "convorec: resources loaded, ready" << std::endl;
  server.join();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conversational product-category recommender"};
  app.require_subcommand(1);

  RecommendArgs rec;
  CLI::App* recommend =
      app.add_subcommand("recommend", "rank categories for an utterance");
  auto* text_opt = recommend->add_option("--text", rec.text, "utterance");
  auto* stdin_opt = recommend->add_flag(
      "--stdin", rec.from_stdin, "read one utterance per line, emit JSON lines");
  text_opt->excludes(stdin_opt);
  recommend->add_option("--profile", rec.profile, "profile JSON file")
      ->required();
  recommend->add_flag("--json", rec.json, "emit the /recommend response body");
  AddResourceFlags(recommend, &rec.resources);
  AddScoringFlags(recommend, &rec.config);

  FeedbackArgs fb;
  CLI::App* feedback = app.add_subcommand(
      "feedback", "add important words to the selected categories");
  feedback->add_option("--profile", fb.profile, "profile JSON file")
      ->required();
  feedback->add_option("--select", fb.select, "comma-separated categories")
      ->required();
  feedback->add_option("--words", fb.words, "comma-separated important words");
  feedback->add_option("--out", fb.out, "output profile path");
  feedback->add_flag("--in-place", fb.in_place, "overwrite --profile");
  feedback->add_option("--cap", fb.cap, "max distinct keywords per category")
      ->check(CLI::PositiveNumber);

  std::filesystem::path init_out;
  bool init_force = false;
  CLI::App* init = app.add_subcommand(
      "init-profile", "write the bundled ten-category sample profile");
  init->add_option("--out", init_out, "output path")->required();
  init->add_flag("--force", init_force, "overwrite an existing file");

  convorec::ServiceConfig serve_config;
  CLI::App* serve = app.add_subcommand("serve", "run the HTTP service");
  serve->add_option("--host", serve_config.host, "listen address");
  CLI::Option* port_opt =
      serve->add_option("--port", serve_config.port,
                        "listen port (0 = any), default $CONVOREC_PORT or 8080")
          ->check(CLI::Range(0, 65535));
  serve->add_option("--cap", serve_config.keyword_cap,
                    "max distinct keywords per category")
      ->check(CLI::PositiveNumber);
  serve->add_option("--cors-origin", serve_config.cors_origins,
                    "allowed browser origin (repeatable, '*' for any)");
  AddResourceFlags(serve, &serve_config.resources);
  AddScoringFlags(serve, &serve_config.recommender);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*recommend) {
      if (!rec.text && !rec.from_stdin) {
        throw Error(ErrorCode::kInvalidArgument, "give --text or --stdin");
      }
      return RunRecommend(rec);
    }
    if (*feedback) return RunFeedback(fb);
    if (*init) return RunInitProfile(init_out, init_force);
    if (*serve) {
      if (port_opt->count() == 0) {
        if (const char* env = std::getenv("CONVOREC_PORT")) {
          serve_config.port = ParsePort(env);
        }
      }
      return RunServe(serve_config);
    }
  } catch (const std::exception& e) {
    std::cerr << "convorec: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
