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

#ifndef HHD_TEXT_H_
#define HHD_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hhd {

// Whitespace split, ASCII lowercase, ASCII punctuation removed; tokens left
// empty by the stripping are dropped.
std::vector<std::string> NormalizedTokens(std::string_view text);

// Unicode scalar values of UTF-8 text. Invalid bytes map to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

// 64-bit FNV-1a. Stable across platforms, used for seeding.
uint64_t Fnv1a64(std::string_view text);

}  // namespace hhd

#endif  // HHD_TEXT_H_
