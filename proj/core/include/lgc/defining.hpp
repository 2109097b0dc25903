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

#ifndef LGC_DEFINING_HPP_
#define LGC_DEFINING_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgc {

// A property that holds for every entry of a table (or, with positive=false,
// for none of them). Labels are stored in canonical spelling.
struct DefiningProperty {
  std::string label;
  bool positive = true;
};

// Defining properties per table, kept outside the tables themselves. The
// first positive construction listed for a table is its base construction.
//
// File format, one property per line:
//   table_name<TAB>label[<TAB>+|-]
class DefiningConfig {
 public:
  static DefiningConfig from_file(const std::filesystem::path& path);
  static DefiningConfig parse(std::string_view text);

  // Throws ConfigError when the label does not parse.
  void add(const std::string& table, std::string_view label, bool positive = true);

  bool covers(std::string_view table) const;
  std::vector<std::string> tables() const;
  const std::vector<DefiningProperty>& properties(std::string_view table) const;

  // Positive labels only.
  std::vector<std::string> defining_labels(std::string_view table) const;
  bool is_defining(std::string_view table, std::string_view canonical) const;
  std::optional<std::string> base_construction(std::string_view table) const;

 private:
  std::map<std::string, std::vector<DefiningProperty>, std::less<>> by_table_;
};

}  // namespace lgc

#endif  // LGC_DEFINING_HPP_
