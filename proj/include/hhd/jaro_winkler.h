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

#ifndef HHD_JARO_WINKLER_H_
#define HHD_JARO_WINKLER_H_

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hhd {

inline constexpr double kWinklerScale = 0.1;
inline constexpr size_t kWinklerMaxPrefix = 4;

// Jaro similarity over arbitrary symbol sequences. Symbols match when equal
// and no further apart than floor(max(|a|,|b|)/2) - 1 positions; t is half
// the number of matched symbols that appear in a different order.
// Two empty sequences score 1, one empty sequence scores 0.
template <typename T>
double Jaro(std::span<const T> a, std::span<const T> b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  const size_t longest = std::max(a.size(), b.size());
  const size_t window = longest / 2 > 0 ? longest / 2 - 1 : 0;

  std::vector<bool> a_matched(a.size(), false), b_matched(b.size(), false);
  size_t matches = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const size_t lo = i > window ? i - window : 0;
    const size_t hi = std::min(b.size(), i + window + 1);
    for (size_t j = lo; j < hi; ++j) {
      if (!b_matched[j] && a[i] == b[j]) {
        a_matched[i] = b_matched[j] = true;
        ++matches;
        break;
      }
    }
  }
  if (matches == 0) return 0.0;

  size_t out_of_order = 0;
  for (size_t i = 0, j = 0; i < a.size(); ++i) {
    if (!a_matched[i]) continue;
    while (!b_matched[j]) ++j;
    if (!(a[i] == b[j])) ++out_of_order;
    ++j;
  }
  const double m = static_cast<double>(matches);
  const double t = static_cast<double>(out_of_order) / 2.0;
  return (m / a.size() + m / b.size() + (m - t) / m) / 3.0;
}

// Jaro plus the Winkler prefix boost: j + l * 0.1 * (1 - j), l being the
// common prefix length capped at 4.
template <typename T>
double JaroWinkler(std::span<const T> a, std::span<const T> b) {
  const double j = Jaro(a, b);
  size_t prefix = 0;
  while (prefix < kWinklerMaxPrefix && prefix < a.size() && prefix < b.size() &&
         a[prefix] == b[prefix]) {
    ++prefix;
  }
  return j + static_cast<double>(prefix) * kWinklerScale * (1.0 - j);
}

template <typename T>
double JaroWinkler(const std::vector<T>& a, const std::vector<T>& b) {
  return JaroWinkler(std::span<const T>(a), std::span<const T>(b));
}

// Character-level, over Unicode scalar values.
double JaroWinklerChars(std::string_view a, std::string_view b);

}  // namespace hhd

#endif  // HHD_JARO_WINKLER_H_
