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

#ifndef HHD_CSV_H_
#define HHD_CSV_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hhd {

struct CsvRecord {
  size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// RFC 4180 reader: quoted fields may hold commas, doubled quotes and line
// breaks. CRLF and LF both end a record. Throws ParseError on an
// unterminated quote.
std::vector<CsvRecord> ReadCsv(std::istream& in, const std::string& path);

// Quotes the field when it holds a comma, quote, CR or LF.
std::string CsvField(std::string_view field);

}  // namespace hhd

#endif  // HHD_CSV_H_
