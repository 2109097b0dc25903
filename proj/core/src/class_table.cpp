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

#include "lgc/class_table.hpp"

#include <algorithm>
#include <set>

#include "lgc/error.hpp"
#include "lgc/label.hpp"
#include "lgc/text.hpp"
#include "lgc/utf8.hpp"

namespace lgc {

char to_char(ClassCell c) {
  switch (c) {
    case ClassCell::kPlus: return '+';
    case ClassCell::kMinus: return '-';
    case ClassCell::kCoded: return 'o';
    case ClassCell::kUnknown: return '?';
  }
  return '?';
}

ClassCell ClassTable::at(std::string_view property, std::string_view table) const {
  auto p = std::lower_bound(properties.begin(), properties.end(), property);
  auto t = std::lower_bound(tables.begin(), tables.end(), table);
  if (p == properties.end() || *p != property || t == tables.end() || *t != table) {
    throw std::out_of_range("no class-table cell for '" + std::string(property) + "' in " + std::string(table));
  }
  return cells[static_cast<std::size_t>(p - properties.begin())][static_cast<std::size_t>(t - tables.begin())];
}

ClassTable build_class_table(const std::vector<Table>& input, const DefiningConfig& defining) {
  std::vector<const Table*> tables;
  for (const auto& t : input) tables.push_back(&t);
  std::sort(tables.begin(), tables.end(), [](const Table* a, const Table* b) { return a->name < b->name; });

  ClassTable ct;
  std::set<std::string> props;
  std::vector<std::set<std::string>> columns(tables.size());
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const Table& t = *tables[i];
    if (i && t.name == ct.tables.back()) throw ConfigError("table " + t.name + " given twice");
    if (!defining.covers(t.name)) throw ConfigError("no defining properties configured for table " + t.name);
    ct.tables.push_back(t.name);
    for (const auto& col : t.columns) {
      if (!col.is_property()) continue;
      std::string key(text::trim(col.raw_heading));
      columns[i].insert(key);
      props.insert(std::move(key));
    }
    for (const auto& p : defining.properties(t.name)) props.insert(p.label);
  }
  ct.properties.assign(props.begin(), props.end());

  ct.cells.assign(ct.properties.size(), std::vector<ClassCell>(tables.size(), ClassCell::kUnknown));
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t p = 0; p < ct.properties.size(); ++p) {
      if (columns[i].count(ct.properties[p])) ct.cells[p][i] = ClassCell::kCoded;
    }
    for (const auto& d : defining.properties(tables[i]->name)) {
      auto it = std::lower_bound(ct.properties.begin(), ct.properties.end(), d.label);
      ct.cells[static_cast<std::size_t>(it - ct.properties.begin())][i] =
          d.positive ? ClassCell::kPlus : ClassCell::kMinus;
    }
  }
  return ct;
}

std::string write_class_table(const ClassTable& ct) {
  std::string out = "property";
  for (const auto& t : ct.tables) out += '\t' + t;
  out += '\n';
  for (std::size_t p = 0; p < ct.properties.size(); ++p) {
    out += ct.properties[p];
    for (ClassCell c : ct.cells[p]) {
      out += '\t';
      out += to_char(c);
    }
    out += '\n';
  }
  return out;
}

std::string_view to_string(SuspectReason r) {
  switch (r) {
    case SuspectReason::kEditDistance: return "edit-distance";
    case SuspectReason::kHomoglyph: return "homoglyph";
    case SuspectReason::kSpacing: return "spacing";
  }
  return "?";
}

std::vector<SuspectPair> find_suspect_labels(const ClassTable& ct, std::size_t max_distance) {
  return find_suspect_labels(ct.properties, max_distance);
}

std::vector<SuspectPair> find_suspect_labels(const std::vector<std::string>& labels, std::size_t max_distance) {
  if (max_distance < 1) throw std::invalid_argument("max_distance must be at least 1");
  std::set<std::string> unique(labels.begin(), labels.end());
  struct Prepared {
    std::string text;
    std::u32string cps;
    std::u32string skeleton;
    std::u32string squeezed;
  };
  std::vector<Prepared> items;
  for (const auto& l : unique) {
    Prepared p{l, utf8::decode(l), {}, {}};
    p.skeleton = utf8::homoglyph_skeleton(p.cps);
    for (char32_t c : p.cps) {
      if (c != U' ' && c != U'\t' && c != U'\u00A0') p.squeezed += c;
    }
    items.push_back(std::move(p));
  }

  std::vector<SuspectPair> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const auto& a = items[i];
      const auto& b = items[j];
      const std::size_t d = utf8::edit_distance(a.cps, b.cps);
      std::optional<SuspectReason> reason;
      if (a.skeleton == b.skeleton) {
        reason = SuspectReason::kHomoglyph;
      } else if (a.squeezed == b.squeezed) {
        reason = SuspectReason::kSpacing;
      } else if (d <= max_distance) {
        reason = SuspectReason::kEditDistance;
      }
      if (reason) out.push_back({a.text, b.text, d, *reason});
    }
  }
  std::sort(out.begin(), out.end(), [](const SuspectPair& x, const SuspectPair& y) {
    return std::tie(x.distance, x.first, x.second) < std::tie(y.distance, y.first, y.second);
  });
  return out;
}

std::string render_suspects(const std::vector<SuspectPair>& pairs) {
  std::string out = "first\tsecond\tdistance\treason\n";
  for (const auto& p : pairs) {
    out += p.first + '\t' + p.second + '\t' + std::to_string(p.distance) + '\t' + std::string(to_string(p.reason)) +
           '\n';
  }
  return out;
}

}  // namespace lgc
