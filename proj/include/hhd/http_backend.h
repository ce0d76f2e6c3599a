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

#ifndef HHD_HTTP_BACKEND_H_
#define HHD_HTTP_BACKEND_H_

#include <chrono>
#include <memory>
#include <semaphore>
#include <string>

#include "hhd/backend.h"

namespace hhd {

struct HttpBackendOptions {
  // "http://host:port" with an optional path prefix.
  std::string url;
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{100};
  std::chrono::milliseconds max_backoff{2000};
  // Upper bound on in-flight requests from this client.
  int concurrency_limit = 4;
  std::chrono::seconds timeout{120};
};

// Client for the backend wire protocol. Transport failures and 503s are
// retried with exponential backoff; 413 maps to kInputTooLong, 400 and
// schema violations to kMalformedResponse. Exhausted retries raise
// kBackendUnavailable.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpBackendOptions options);
  ~HttpBackend() override;

  GenerationResult Generate(const GenerationRequest& request) override;

  // GET /v1/health, single attempt.
  bool Healthy() const;

  const HttpBackendOptions& options() const { return options_; }

 private:
  static constexpr std::ptrdiff_t kMaxConcurrency = 1024;

  HttpBackendOptions options_;
  std::string origin_;       // scheme://host:port
  std::string path_prefix_;  // "" or "/prefix"
  std::unique_ptr<std::counting_semaphore<kMaxConcurrency>> slots_;
};

}  // namespace hhd

#endif  // HHD_HTTP_BACKEND_H_
