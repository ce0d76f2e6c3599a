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

#ifndef HHD_SERVER_H_
#define HHD_SERVER_H_

#include <memory>
#include <string>
#include <thread>

#include "hhd/backend.h"

namespace httplib {
class Server;
}

namespace hhd {

// Serves any Backend over the wire protocol. Used by `mock-serve` and as the
// conformance fixture for other protocol implementations.
class BackendServer {
 public:
  explicit BackendServer(Backend& backend);
  ~BackendServer();

  BackendServer(const BackendServer&) = delete;
  BackendServer& operator=(const BackendServer&) = delete;

  // Binds and serves on a background thread. Port 0 picks a free port.
  // Returns the bound port.
  int Start(const std::string& host, int port);
  // Binds and serves on the calling thread until Stop().
  void Run(const std::string& host, int port);
  void Stop();

 private:
  Backend& backend_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace hhd

#endif  // HHD_SERVER_H_
