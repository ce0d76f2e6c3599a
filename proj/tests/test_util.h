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

#ifndef HHD_TESTS_TEST_UTIL_H_
#define HHD_TESTS_TEST_UTIL_H_

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "hhd/backend.h"
#include "hhd/domain.h"
#include "hhd/errors.h"

namespace hhd::testing {

inline LabeledExample MakeExample(std::string id, std::string title,
                                  std::string body, std::string headline,
                                  std::optional<Label> label = std::nullopt,
                                  std::string explanation = "") {
  LabeledExample ex;
  ex.id = std::move(id);
  ex.article.title = std::move(title);
  ex.article.body = std::move(body);
  ex.headline.text = std::move(headline);
  ex.label = label;
  if (!explanation.empty()) ex.explanation = Explanation{std::move(explanation)};
  return ex;
}

inline GenerationResult ClassResult(std::string text, double p_contradict) {
  GenerationResult r;
  r.outputs.push_back({std::move(text), -0.5});
  r.class_logprobs = ClassLogprobs{std::log(1.0 - p_contradict),
                                   std::log(p_contradict)};
  return r;
}

// Replies from a fixed input -> result table and counts calls.
class TableBackend : public Backend {
 public:
  std::map<std::string, GenerationResult> table;
  std::function<void(const GenerationRequest&)> hook;

  GenerationResult Generate(const GenerationRequest& request) override {
    ++calls;
    if (hook) hook(request);
    {
      std::lock_guard<std::mutex> lock(mu_);
      requests.push_back(request);
    }
    auto it = table.find(request.input);
    if (it == table.end()) {
      throw Error(ErrorKind::kMalformedResponse, "unscripted: " + request.input);
    }
    return it->second;
  }

  std::atomic<int> calls{0};
  std::vector<GenerationRequest> requests;

 private:
  std::mutex mu_;
};

// Unique scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("hhd_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

  std::string Write(const std::string& name, const std::string& content) const {
    std::ofstream out(File(name), std::ios::binary);
    out << content;
    return File(name);
  }

 private:
  std::filesystem::path path_;
};

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string RandomWord(std::mt19937_64& rng, int min_len = 1,
                              int max_len = 8) {
  static const char kAlpha[] = "abcdefghijklmnopqrstuvwxyz";
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> ch(0, 25);
  std::string w;
  for (int i = len(rng); i > 0; --i) w += kAlpha[ch(rng)];
  return w;
}

}  // namespace hhd::testing

#endif  // HHD_TESTS_TEST_UTIL_H_
