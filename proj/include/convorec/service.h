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

#ifndef CONVOREC_SERVICE_H_
#define CONVOREC_SERVICE_H_

#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "convorec/engine.h"
#include "convorec/recommender.h"

namespace httplib {
class Server;
}

namespace convorec {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  ResourcePaths resources = ResourcePaths::Bundled();
  RecommenderConfig recommender;
  std::optional<std::size_t> keyword_cap;
  // Origins allowed to call the service from a browser; "*" allows any.
  std::vector<std::string> cors_origins;

  void Validate() const;
};

struct HttpReply {
  int status = 200;
  std::string body;
};

// Response bodies. The recommendations array order is the ranking.
nlohmann::json RecommendationToJson(const RecommendationResult& result);
nlohmann::json ErrorToJson(std::string_view code, std::string_view message);

// Transport-independent endpoint logic; `engine` is null until resources are
// loaded. The CLI reuses HandleRecommend so its --json output matches the
// service byte for byte.
HttpReply HandleRecommend(const Engine* engine, const RecommenderConfig& config,
                          std::string_view body);
HttpReply HandleFeedback(std::optional<std::size_t> keyword_cap,
                         std::string_view body);
HttpReply HandleHealth(const Engine* engine);

// Stateless HTTP facade. Requests never touch each other: the only shared
// state is the immutable engine, published once by SetEngine.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // May be called once, from any thread, while the server is running.
  void SetEngine(std::shared_ptr<const Engine> engine);
  bool ready() const { return engine_view_.load() != nullptr; }

  // Binds config().host:config().port (port 0 picks a free one) and returns
  // the bound port. Throws kIoFailure.
  int Bind();

  // Serves until Stop(); call after Bind(). Returns at once if Stop() came
  // first.
  void Run();
  void Stop();

  const ServiceConfig& config() const { return config_; }

 private:
  void InstallRoutes();

  ServiceConfig config_;
  std::unique_ptr<httplib::Server> server_;
  std::shared_ptr<const Engine> engine_;
  std::atomic<const Engine*> engine_view_{nullptr};
  std::mutex run_mutex_;
  bool running_ = false;
  bool stop_requested_ = false;
};

}  // namespace convorec

#endif  // CONVOREC_SERVICE_H_
