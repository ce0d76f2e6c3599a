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

#include "hhd/server.h"

#include "hhd/errors.h"
#include "hhd/wire.h"
#include "httplib.h"

namespace hhd {
namespace {

int StatusFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInputTooLong: return 413;
    case ErrorKind::kBackendUnavailable: return 503;
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kMalformedResponse:
    case ErrorKind::kUnknownClassToken:
    case ErrorKind::kUnparseableOutput: return 400;
    default: return 500;
  }
}

void Reply(httplib::Response& res, int status, const wire::Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

BackendServer::BackendServer(Backend& backend)
    : backend_(backend), server_(std::make_unique<httplib::Server>()) {
  server_->Post(std::string(wire::kGeneratePath),
                [this](const httplib::Request& req, httplib::Response& res) {
                  wire::Json body;
                  try {
                    body = wire::Json::parse(req.body);
                  } catch (const nlohmann::json::exception& e) {
                    Reply(res, 400, wire::ErrorBody("InvalidArgument", e.what()));
                    return;
                  }
                  try {
                    GenerationRequest request = wire::RequestFromJson(body);
                    GenerationResult result = backend_.Generate(request);
                    Reply(res, 200, wire::ResultToJson(result));
                  } catch (const Error& e) {
                    Reply(res, StatusFor(e.kind()),
                          wire::ErrorBody(ErrorKindName(e.kind()), e.what()));
                  } catch (const std::exception& e) {
                    Reply(res, 500, wire::ErrorBody("Internal", e.what()));
                  }
                });
  server_->Get(std::string(wire::kHealthPath),
               [](const httplib::Request&, httplib::Response& res) {
                 wire::Json body;
                 body["status"] = "ok";
                 Reply(res, 200, body);
               });
}

BackendServer::~BackendServer() { Stop(); }

int BackendServer::Start(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host)
                        : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error(ErrorKind::kIoError,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void BackendServer::Run(const std::string& host, int port) {
  if (!server_->listen(host, port)) {
    throw Error(ErrorKind::kIoError,
                "cannot listen on " + host + ":" + std::to_string(port));
  }
}

void BackendServer::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace hhd
