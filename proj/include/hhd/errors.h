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

#ifndef HHD_ERRORS_H_
#define HHD_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hhd {

// Every failure raised by the library carries one of these kinds. The CLI
// maps them onto exit codes, the HTTP server onto status codes.
enum class ErrorKind {
  kInvalidArgument,
  kUnknownClassToken,
  kUnparseableOutput,
  kBackendUnavailable,
  kInputTooLong,
  kMalformedResponse,
  kMissingClassLogprobs,
  kUnsupportedLabel,
  kDegenerateData,
  kLengthMismatch,
  kEmptyInput,
  kTooFewRuns,
  kParseError,
  kUnknownFormat,
  kIoError,
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // True for failures that originate in the model backend or its transport.
  bool IsBackendError() const {
    return kind_ == ErrorKind::kBackendUnavailable ||
           kind_ == ErrorKind::kInputTooLong ||
           kind_ == ErrorKind::kMalformedResponse;
  }

 private:
  ErrorKind kind_;
};

// Malformed input file. Line numbers are 1-based; 0 means "no line".
class ParseError : public Error {
 public:
  ParseError(const std::string& path, size_t line, const std::string& what);

  const std::string& path() const { return path_; }
  size_t line() const { return line_; }

 private:
  std::string path_;
  size_t line_;
};

}  // namespace hhd

#endif  // HHD_ERRORS_H_
