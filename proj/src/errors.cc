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

#include "hhd/errors.h"

namespace hhd {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kUnknownClassToken: return "UnknownClassToken";
    case ErrorKind::kUnparseableOutput: return "UnparseableOutput";
    case ErrorKind::kBackendUnavailable: return "BackendUnavailable";
    case ErrorKind::kInputTooLong: return "InputTooLong";
    case ErrorKind::kMalformedResponse: return "MalformedResponse";
    case ErrorKind::kMissingClassLogprobs: return "MissingClassLogprobs";
    case ErrorKind::kUnsupportedLabel: return "UnsupportedLabel";
    case ErrorKind::kDegenerateData: return "DegenerateData";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kTooFewRuns: return "TooFewRuns";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnknownFormat: return "UnknownFormat";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string Located(const std::string& path, size_t line,
                    const std::string& what) {
  std::string out = path;
  if (line > 0) out += ":" + std::to_string(line);
  return out + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& path, size_t line,
                       const std::string& what)
    : Error(ErrorKind::kParseError, Located(path, line, what)),
      path_(path),
      line_(line) {}

}  // namespace hhd
