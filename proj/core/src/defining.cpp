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

#include "lgc/defining.hpp"

#include <algorithm>

#include "lgc/error.hpp"
#include "lgc/label.hpp"
#include "lgc/text.hpp"

namespace lgc {

DefiningConfig DefiningConfig::from_file(const std::filesystem::path& path) {
  try {
    return parse(text::read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

DefiningConfig DefiningConfig::parse(std::string_view data) {
  DefiningConfig cfg;
  for (const auto& rec : text::parse_records(data)) {
    const auto where = "line " + std::to_string(rec.line) + ": ";
    if (rec.fields.size() < 2 || rec.fields.size() > 3) {
      throw ConfigError(where + "expected table<TAB>label[<TAB>+|-]");
    }
    bool positive = true;
    if (rec.fields.size() == 3) {
      const auto sign = text::trim(rec.fields[2]);
      if (sign == "-") {
        positive = false;
      } else if (sign != "+") {
        throw ConfigError(where + "sign must be + or -");
      }
    }
    try {
      cfg.add(std::string(text::trim(rec.fields[0])), rec.fields[1], positive);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return cfg;
}

void DefiningConfig::add(const std::string& table, std::string_view label, bool positive) {
  if (table.empty()) throw ConfigError("empty table name");
  auto canonical = canonical_label(label);
  if (!canonical) throw ConfigError("cannot parse defining label '" + std::string(label) + "'");
  auto& props = by_table_[table];
  for (auto& p : props) {
    if (p.label == *canonical) {
      if (p.positive != positive) {
        throw ConfigError("table " + table + ": '" + *canonical + "' listed with both signs");
      }
      return;
    }
  }
  props.push_back({std::move(*canonical), positive});
}

bool DefiningConfig::covers(std::string_view table) const { return by_table_.find(table) != by_table_.end(); }

std::vector<std::string> DefiningConfig::tables() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : by_table_) out.push_back(name);
  return out;
}

const std::vector<DefiningProperty>& DefiningConfig::properties(std::string_view table) const {
  static const std::vector<DefiningProperty> kNone;
  auto it = by_table_.find(table);
  return it == by_table_.end() ? kNone : it->second;
}

std::vector<std::string> DefiningConfig::defining_labels(std::string_view table) const {
  std::vector<std::string> out;
  for (const auto& p : properties(table)) {
    if (p.positive) out.push_back(p.label);
  }
  return out;
}

bool DefiningConfig::is_defining(std::string_view table, std::string_view canonical) const {
  const auto& props = properties(table);
  return std::any_of(props.begin(), props.end(), [&](const DefiningProperty& p) { return p.label == canonical; });
}

std::optional<std::string> DefiningConfig::base_construction(std::string_view table) const {
  for (const auto& p : properties(table)) {
    if (!p.positive) continue;
    if (std::holds_alternative<Construction>(parse_label(p.label))) return p.label;
  }
  return std::nullopt;
}

}  // namespace lgc
