// Copyright 2026 The hhd Authors.
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

#include "hhd/http_backend.h"

#include <algorithm>
#include <thread>

#include "hhd/errors.h"
#include "hhd/wire.h"
#include "httplib.h"

namespace hhd {
namespace {

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<1024>& sem) : sem_(sem) {
    sem_.acquire();
  }
  ~SlotGuard() { sem_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<1024>& sem_;
};

std::string ServerMessage(const std::string& body) {
  try {
    auto doc = wire::Json::parse(body);
    if (doc.is_object() && doc.contains("message")) {
      return doc["message"].get<std::string>();
    }
  } catch (const std::exception&) {
  }
  return body.substr(0, 200);
}

}  // namespace

HttpBackend::HttpBackend(HttpBackendOptions options)
    : options_(std::move(options)) {
  if (options_.max_attempts < 1) {
    throw Error(ErrorKind::kInvalidArgument, "max_attempts must be >= 1");
  }
  if (options_.concurrency_limit < 1 ||
      options_.concurrency_limit > kMaxConcurrency) {
    throw Error(ErrorKind::kInvalidArgument,
                "concurrency_limit must be in [1, 1024]");
  }
  const std::string& url = options_.url;
  size_t scheme = url.find("://");
  if (scheme == std::string::npos || url.substr(0, scheme) != "http") {
    throw Error(ErrorKind::kInvalidArgument,
                "backend url must start with http://, got '" + url + "'");
  }
  size_t path = url.find('/', scheme + 3);
  origin_ = url.substr(0, path);
  if (path != std::string::npos) {
    path_prefix_ = url.substr(path);
    while (!path_prefix_.empty() && path_prefix_.back() == '/') {
      path_prefix_.pop_back();
    }
  }
  slots_ = std::make_unique<std::counting_semaphore<kMaxConcurrency>>(
      options_.concurrency_limit);
}

HttpBackend::~HttpBackend() = default;

GenerationResult HttpBackend::Generate(const GenerationRequest& request) {
  request.Validate();
  const std::string body = wire::RequestToJson(request).dump();
  const std::string path = path_prefix_ + std::string(wire::kGeneratePath);

  SlotGuard slot(*slots_);
  auto backoff = options_.initial_backoff;
  std::string last_failure;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    httplib::Client client(origin_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_failure = "transport error: " + httplib::to_string(res.error());
    } else if (res->status == 200) {
      GenerationResult result;
      try {
        result = wire::ResultFromJson(wire::Json::parse(res->body));
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::kMalformedResponse,
                    std::string("response is not JSON: ") + e.what());
      }
      result.CheckAgainst(request);
      return result;
    } else if (res->status == 413) {
      throw Error(ErrorKind::kInputTooLong, ServerMessage(res->body));
    } else if (res->status == 503) {
      last_failure = "503: " + ServerMessage(res->body);
    } else {
      throw Error(ErrorKind::kMalformedResponse,
                  "HTTP " + std::to_string(res->status) + ": " +
                      ServerMessage(res->body));
    }
    if (attempt < options_.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff = std::min(backoff * 2, options_.max_backoff);
    }
  }
  throw Error(ErrorKind::kBackendUnavailable,
              origin_ + " unavailable after " +
                  std::to_string(options_.max_attempts) +
                  " attempts (" + last_failure + ")");
}

bool HttpBackend::Healthy() const {
  httplib::Client client(origin_);
  client.set_connection_timeout(std::chrono::seconds(2));
  auto res = client.Get(path_prefix_ + std::string(wire::kHealthPath));
  if (!res || res->status != 200) return false;
  try {
    return wire::Json::parse(res->body).value("status", "") == "ok";
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace hhd
