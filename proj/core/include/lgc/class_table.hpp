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

#ifndef LGC_CLASS_TABLE_HPP_
#define LGC_CLASS_TABLE_HPP_

#include <string>
#include <vector>

#include "lgc/defining.hpp"
#include "lgc/table.hpp"

namespace lgc {

enum class ClassCell { kPlus, kMinus, kCoded, kUnknown };

char to_char(ClassCell c);  // '+', '-', 'o', '?'

// Property x table matrix. Properties are sorted by string, tables by name.
struct ClassTable {
  std::vector<std::string> properties;
  std::vector<std::string> tables;
  std::vector<std::vector<ClassCell>> cells;  // [property][table]

  ClassCell at(std::string_view property, std::string_view table) const;
};

// Every property heading (trimmed, otherwise as written) of every table plus
// every defining label becomes a row, so notation variants stay visible until
// normalization folds them. Throws ConfigError when a table has no defining
// entry.
ClassTable build_class_table(const std::vector<Table>& tables, const DefiningConfig& defining);

// Tab-separated, header "property<TAB>table...", cells "+", "-", "o", "?".
std::string write_class_table(const ClassTable& ct);

enum class SuspectReason { kEditDistance, kHomoglyph, kSpacing };
std::string_view to_string(SuspectReason r);

struct SuspectPair {
  std::string first;   // first < second
  std::string second;
  std::size_t distance = 0;
  SuspectReason reason = SuspectReason::kEditDistance;
};

// Pairs of properties within max_distance edits of each other, or differing
// only by Greek/Latin look-alikes, or only by whitespace. Sorted by distance,
// then lexicographically.
std::vector<SuspectPair> find_suspect_labels(const ClassTable& ct, std::size_t max_distance);
std::vector<SuspectPair> find_suspect_labels(const std::vector<std::string>& labels,
                                             std::size_t max_distance);

std::string render_suspects(const std::vector<SuspectPair>& pairs);

}  // namespace lgc

#endif  // LGC_CLASS_TABLE_HPP_
