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

#include "convorec/service.h"

#include <algorithm>
#include <set>
#include <utility>

#include "httplib.h"

#include "convorec/error.h"
#include "convorec/profile_io.h"

namespace convorec {

namespace {

using nlohmann::json;

constexpr char kJsonType[] = "application/json";

HttpReply ErrorReply(int status, std::string_view code,
                     std::string_view message) {
  return {status, ErrorToJson(code, message).dump()};
}

HttpReply ErrorReply(const Error& e) {
  int status = 500;
  switch (e.code()) {
    case ErrorCode::kInvalidProfile:
    case ErrorCode::kInvalidArgument:
      status = 400;
      break;
    case ErrorCode::kNoSignal:
    case ErrorCode::kUnknownCategory:
      status = 422;
      break;
    default:
      break;
  }
  return ErrorReply(status, ErrorCodeName(e.code()), e.what());
}

// Parses a request body that must be a JSON object. Returns nullopt and fills
// `reply` on failure.
std::optional<json> ParseObject(std::string_view body, HttpReply* reply) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    *reply = ErrorReply(400, "bad_request", "body must be a JSON object");
    return std::nullopt;
  }
  return parsed;
}

std::optional<std::vector<std::string>> StringArray(const json& body,
                                                    const char* field) {
  auto it = body.find(field);
  if (it == body.end() || !it->is_array()) return std::nullopt;
  std::vector<std::string> out;
  for (const auto& item : *it) {
    if (!item.is_string()) return std::nullopt;
    out.push_back(item.get<std::string>());
  }
  return out;
}

const std::set<std::string>& RouteMethods(const std::string& path) {
  static const std::set<std::string> kPost = {"POST", "OPTIONS"};
  static const std::set<std::string> kGet = {"GET", "HEAD", "OPTIONS"};
  static const std::set<std::string> kNone;
  if (path == "/recommend" || path == "/feedback") return kPost;
  if (path == "/health") return kGet;
  return kNone;
}

}  // namespace

void ServiceConfig::Validate() const {
  recommender.Validate();
  if (port < 0 || port > 65535) {
    throw Error(ErrorCode::kInvalidArgument, "port out of range");
  }
  if (keyword_cap && *keyword_cap == 0) {
    throw Error(ErrorCode::kInvalidArgument, "keyword cap must be >= 1");
  }
}

json RecommendationToJson(const RecommendationResult& result) {
  json recommendations = json::array();
  for (const auto& entry : result.ranked) {
    recommendations.push_back(
        {{"category", entry.category}, {"score", entry.score}});
  }
  return {{"important_words", result.important_words},
          {"polarity", result.sentiment.polarity},
          {"positivity", result.sentiment.positivity},
          {"recommendations", std::move(recommendations)}};
}

json ErrorToJson(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

HttpReply HandleRecommend(const Engine* engine, const RecommenderConfig& config,
                          std::string_view body) {
  if (engine == nullptr) {
    return ErrorReply(503, "not_ready", "resources are still loading");
  }
  HttpReply reply;
  std::optional<json> request = ParseObject(body, &reply);
  if (!request) return reply;

  auto text = request->find("text");
  if (text == request->end() || !text->is_string()) {
    return ErrorReply(400, "bad_request", "'text' must be a string");
  }
  auto profile_json = request->find("profile");
  if (profile_json == request->end()) {
    return ErrorReply(400, "bad_request", "'profile' is required");
  }
  RecommenderConfig effective = config;
  if (auto k = request->find("k"); k != request->end()) {
    if (!k->is_number_integer() || k->get<std::int64_t>() < 1) {
      return ErrorReply(400, "bad_request", "'k' must be a positive integer");
    }
    effective.k = k->get<std::size_t>();
  }

  try {
    UserProfile profile = ProfileFromJson(*profile_json);
    RecommendationResult result =
        Recommend(text->get<std::string>(), profile, *engine, effective);
    return {200, RecommendationToJson(result).dump()};
  } catch (const Error& e) {
    return ErrorReply(e);
  }
}

HttpReply HandleFeedback(std::optional<std::size_t> keyword_cap,
                         std::string_view body) {
  HttpReply reply;
  std::optional<json> request = ParseObject(body, &reply);
  if (!request) return reply;

  auto profile_json = request->find("profile");
  if (profile_json == request->end()) {
    return ErrorReply(400, "bad_request", "'profile' is required");
  }
  std::optional<std::vector<std::string>> selected =
      StringArray(*request, "selected");
  if (!selected) {
    return ErrorReply(400, "bad_request",
                      "'selected' must be an array of strings");
  }
  std::optional<std::vector<std::string>> words =
      StringArray(*request, "important_words");
  if (!words) {
    return ErrorReply(400, "bad_request",
                      "'important_words' must be an array of strings");
  }

  try {
    UserProfile profile = ProfileFromJson(*profile_json);
    UserProfile updated =
        ApplyFeedback(profile, {selected->begin(), selected->end()}, *words,
                      keyword_cap);
    return {200, json{{"profile", ProfileToJson(updated)}}.dump()};
  } catch (const Error& e) {
    return ErrorReply(e);
  }
}

HttpReply HandleHealth(const Engine* engine) {
  if (engine == nullptr) {
    return ErrorReply(503, "not_ready", "resources are still loading");
  }
  json body = {{"status", "ok"},
               {"embedding_dimension", engine->embeddings().dimension()},
               {"vocabulary_size", engine->embeddings().size()}};
  return {200, body.dump()};
}

Service::Service(ServiceConfig config)
    : config_(std::move(config)), server_(std::make_unique<httplib::Server>()) {
  config_.Validate();
  InstallRoutes();
}

Service::~Service() { Stop(); }

void Service::SetEngine(std::shared_ptr<const Engine> engine) {
  if (engine_) {
    throw Error(ErrorCode::kInvalidArgument, "engine already set");
  }
  engine_ = std::move(engine);
  engine_view_.store(engine_.get());
}

int Service::Bind() {
  int port = config_.port;
  if (port == 0) {
    port = server_->bind_to_any_port(config_.host);
  } else if (!server_->bind_to_port(config_.host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error(ErrorCode::kIoFailure,
                "cannot bind " + config_.host + ":" +
                    std::to_string(config_.port));
  }
  return port;
}

void Service::Run() {
  {
    std::lock_guard<std::mutex> lock(run_mutex_);
    if (stop_requested_) return;
    running_ = true;
  }
  server_->listen_after_bind();
}

// httplib ignores stop() until the listen loop is up, so wait for it.
void Service::Stop() {
  bool running;
  {
    std::lock_guard<std::mutex> lock(run_mutex_);
    stop_requested_ = true;
    running = running_;
  }
  if (running) {
    server_->wait_until_ready();
    server_->stop();
  }
}

void Service::InstallRoutes() {
  httplib::Server& server = *server_;

  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, kJsonType);
  };

  server.set_pre_routing_handler(
      [send](const httplib::Request& req, httplib::Response& res) {
        const auto& allowed = RouteMethods(req.path);
        if (allowed.empty() || allowed.count(req.method)) {
          return httplib::Server::HandlerResponse::Unhandled;
        }
        std::string allow;
        for (const auto& m : allowed) allow += (allow.empty() ? "" : ", ") + m;
        res.set_header("Allow", allow);
        send(res, ErrorReply(405, "method_not_allowed",
                             req.method + " not allowed on " + req.path));
        return httplib::Server::HandlerResponse::Handled;
      });

  server.set_post_routing_handler(
      [this](const httplib::Request& req, httplib::Response& res) {
        const std::string origin = req.get_header_value("Origin");
        if (origin.empty()) return;
        const auto& allowed = config_.cors_origins;
        bool any = std::find(allowed.begin(), allowed.end(), "*") != allowed.end();
        bool listed =
            std::find(allowed.begin(), allowed.end(), origin) != allowed.end();
        if (!any && !listed) return;
        res.set_header("Access-Control-Allow-Origin", any ? "*" : origin);
        if (!any) res.set_header("Vary", "Origin");
      });

  server.Options(R"(/(recommend|feedback|health))",
                 [](const httplib::Request&, httplib::Response& res) {
                   res.status = 204;
                   res.set_header("Access-Control-Allow-Methods",
                                  "GET, POST, OPTIONS");
                   res.set_header("Access-Control-Allow-Headers",
                                  "Content-Type");
                   res.set_header("Access-Control-Max-Age", "600");
                 });

  server.Post("/recommend", [this, send](const httplib::Request& req,
                                         httplib::Response& res) {
    send(res, HandleRecommend(engine_view_.load(), config_.recommender,
                              req.body));
  });

  server.Post("/feedback", [this, send](const httplib::Request& req,
                                        httplib::Response& res) {
    send(res, HandleFeedback(config_.keyword_cap, req.body));
  });

  server.Get("/health",
             [this, send](const httplib::Request&, httplib::Response& res) {
               send(res, HandleHealth(engine_view_.load()));
             });

  server.set_error_handler(
      [send](const httplib::Request& req, httplib::Response& res) {
        if (!res.body.empty()) return;
        if (res.status == 404) {
          send(res, ErrorReply(404, "not_found", "no route for " + req.path));
        }
      });

  server.set_exception_handler([send](const httplib::Request&,
                                      httplib::Response& res,
                                      std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    send(res, ErrorReply(500, "internal", message));
  });
}

}  // namespace convorec
