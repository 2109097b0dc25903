// Copyright 2026 The lgcompile Authors.
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

#ifndef LGC_TEXT_HPP_
#define LGC_TEXT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lgc::text {

std::string read_file(const std::filesystem::path& path);

// Writes through a sibling temporary file and renames it into place, so a
// failed write never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view data);

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split(std::string_view s, std::string_view sep);
std::string_view trim(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Splits into lines, dropping one trailing empty line and any '\r' before '\n'.
std::vector<std::string> lines(std::string_view data);

// Lines of a tab-separated data file with blank lines and '#' comments removed.
// Each element is (1-based line number, fields).
struct Record {
  std::size_t line;
  std::vector<std::string> fields;
};
std::vector<Record> parse_records(std::string_view data);
std::vector<Record> read_records(const std::filesystem::path& path);

}  // namespace lgc::text

#endif  // LGC_TEXT_HPP_
