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

#include "lgc/normalizer.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "lgc/error.hpp"
#include "lgc/label.hpp"
#include "lgc/text.hpp"

namespace lgc {

std::string RewriteRule::apply(const std::string& input) const {
  switch (mode) {
    case MatchMode::kExact:
      return input == pattern ? replacement : input;
    case MatchMode::kLiteral: {
      if (pattern.empty()) return input;
      std::string out;
      std::size_t start = 0;
      for (std::size_t pos; (pos = input.find(pattern, start)) != std::string::npos; start = pos + pattern.size()) {
        out.append(input, start, pos - start);
        out += replacement;
      }
      out.append(input, start, std::string::npos);
      return out;
    }
    case MatchMode::kRegex:
      if (!regex_) throw InvariantError("rule " + id + " has no compiled pattern");
      return std::regex_replace(input, *regex_, replacement);
  }
  return input;
}

RuleSet RuleSet::from_file(const std::filesystem::path& path) {
  try {
    return parse(text::read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

RuleSet RuleSet::parse(std::string_view data) {
  RuleSet set;
  for (const auto& rec : text::parse_records(data)) {
    const auto where = "line " + std::to_string(rec.line) + ": ";
    if (rec.fields.size() < 3 || rec.fields.size() > 4) {
      throw ConfigError(where + "expected id<TAB>category<TAB>match<TAB>replace");
    }
    RewriteRule rule;
    rule.id = std::string(text::trim(rec.fields[0]));
    auto category = parse_category(text::trim(rec.fields[1]));
    if (!category) throw ConfigError(where + "unknown category '" + rec.fields[1] + "'");
    rule.category = *category;
    std::string_view match = rec.fields[2];
    if (match.substr(0, 3) == "eq:") {
      rule.mode = MatchMode::kExact;
      match.remove_prefix(3);
    } else if (match.substr(0, 3) == "re:") {
      rule.mode = MatchMode::kRegex;
      match.remove_prefix(3);
    } else if (match.substr(0, 4) == "lit:") {
      match.remove_prefix(4);
    }
    rule.pattern = std::string(match);
    if (rec.fields.size() == 4) rule.replacement = rec.fields[3];
    try {
      set.add(std::move(rule));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return set;
}

void RuleSet::add(RewriteRule rule) {
  if (rule.id.empty()) throw ConfigError("empty rule id");
  if (rule.pattern.empty()) throw ConfigError("rule " + rule.id + ": empty pattern");
  for (const auto& r : rules_) {
    if (r.id == rule.id) throw ConfigError("duplicate rule id '" + rule.id + "'");
  }
  if (rule.mode == MatchMode::kRegex) {
    try {
      rule.regex_ = std::make_shared<const std::regex>(rule.pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw ConfigError("rule " + rule.id + ": bad pattern: " + e.what());
    }
  }
  rules_.push_back(std::move(rule));
}

std::vector<std::string> NormalizedLabel::rule_ids() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.rule_id);
  return out;
}

NormalizedLabel normalize_label(std::string_view input, const RuleSet& rules, int max_passes) {
  NormalizedLabel result;
  result.text = std::string(input);
  bool settled = false;
  for (int pass = 0; pass < max_passes && !settled; ++pass) {
    settled = true;
    for (const auto& rule : rules.rules()) {
      if (rule.category == ChangeCategory::kLinguistic) continue;
      std::string next = rule.apply(result.text);
      if (next == result.text) continue;
      result.steps.push_back({rule.id, rule.category, result.text, next});
      result.text = std::move(next);
      settled = false;
    }
  }
  if (!settled) {
    throw CycleError("rewriting '" + std::string(input) + "' did not settle within " +
                     std::to_string(max_passes) + " passes");
  }
  result.residual_error = !try_parse_label(result.text).has_value();
  return result;
}

std::vector<std::pair<std::string, std::string>> linguistic_suspects(const Table& table, const RuleSet& rules) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& col : table.columns) {
    if (!col.is_property()) continue;
    for (const auto& rule : rules.rules()) {
      if (rule.category == ChangeCategory::kLinguistic && rule.apply(col.raw_heading) != col.raw_heading) {
        out.emplace_back(col.raw_heading, rule.id);
      }
    }
  }
  return out;
}

const CategoryStat& Histogram::at(ChangeCategory c) const {
  for (const auto& s : categories) {
    if (s.category == c) return s;
  }
  throw InvariantError("histogram lacks a category");
}

void ChangeReport::append(const ChangeReport& other) {
  changes.insert(changes.end(), other.changes.begin(), other.changes.end());
}

Histogram change_stats(const ChangeReport& report) {
  Histogram h;
  h.total = report.changes.size();
  for (ChangeCategory c : kAllCategories) {
    CategoryStat s{c, 0, 0.0};
    for (const auto& ch : report.changes) s.count += ch.category == c;
    if (h.total) s.percent = 100.0 * static_cast<double>(s.count) / static_cast<double>(h.total);
    h.categories.push_back(s);
  }
  return h;
}

std::string render_changes(const ChangeReport& report) {
  std::string out = "table\tcolumn\tcategory\trule\tbefore\tafter\n";
  for (const auto& c : report.changes) {
    out += c.table + '\t' + c.column + '\t' + std::string(to_string(c.category)) + '\t' + c.rule_id + '\t' +
           c.before + '\t' + c.after + '\n';
  }
  return out;
}

std::string render_histogram(const Histogram& h) {
  std::string out = "category\tcount\tpercent\n";
  char buf[32];
  for (const auto& s : h.categories) {
    std::snprintf(buf, sizeof buf, "%.1f", s.percent);
    out += std::string(to_string(s.category)) + '\t' + std::to_string(s.count) + '\t' + buf + '\n';
  }
  out += "total\t" + std::to_string(h.total) + "\t" + (h.total ? "100.0" : "0.0") + "\n";
  return out;
}

namespace {

std::vector<std::size_t> columns_named(const Table& t, std::string_view heading) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i].is_property() && text::trim(t.columns[i].raw_heading) == text::trim(heading)) {
      out.push_back(i);
    }
  }
  return out;
}

void erase_columns(Table& t, std::vector<std::size_t> drop) {
  std::sort(drop.rbegin(), drop.rend());
  for (std::size_t c : drop) {
    t.columns.erase(t.columns.begin() + static_cast<std::ptrdiff_t>(c));
    for (auto& row : t.rows) row.cells.erase(row.cells.begin() + static_cast<std::ptrdiff_t>(c));
  }
}

}  // namespace

Table merge_duplicate_columns(const Table& table, std::string_view heading) {
  const auto cols = columns_named(table, heading);
  if (cols.size() < 2) {
    throw MergeError("table " + table.name + ": fewer than two columns named '" + std::string(heading) + "'");
  }
  for (std::size_t c : cols) {
    if (table.columns[c].kind != ColumnKind::kLexical) {
      throw MergeError("table " + table.name + ": column '" + std::string(heading) + "' is " +
                       std::string(to_string(table.columns[c].kind)) + ", only lexical columns merge");
    }
  }
  Table out = table;
  for (auto& row : out.rows) {
    std::vector<std::string> alts;
    for (std::size_t c : cols) {
      const Cell& cell = row.cells[c];
      std::vector<std::string> parts;
      if (const auto* lex = std::get_if<Lexical>(&cell.value)) {
        parts = lex->alternatives;
      } else if (!is_empty(cell.value)) {
        parts.emplace_back(text::trim(cell.raw));
      }
      for (auto& p : parts) {
        if (std::find(alts.begin(), alts.end(), p) == alts.end()) alts.push_back(std::move(p));
      }
    }
    Cell& first = row.cells[cols.front()];
    if (!alts.empty()) {
      first.raw = text::join(alts, "+");
      first.value = classify_cell(first.raw);
    }
  }
  erase_columns(out, {cols.begin() + 1, cols.end()});
  return out;
}

namespace {

// The support-verb column switches the Vsup/Npred fields off row by row, so
// it stays even when it is "-" everywhere.
bool is_support_gate(std::string_view heading) {
  const auto label = try_parse_label(heading);
  const auto* lf = label ? std::get_if<LexicalField>(&*label) : nullptr;
  return lf && lf->field == Field::kN0VsupNpred;
}

}  // namespace

NormalizeResult normalize_table(const Table& table, const RuleSet& rules, const DefiningConfig& defining) {
  NormalizeResult res{table, {}};
  Table& t = res.table;
  auto& changes = res.report.changes;

  for (auto& col : t.columns) {
    if (!col.is_property()) continue;
    const std::string original = col.raw_heading;
    NormalizedLabel n = normalize_label(original, rules);
    for (auto& step : n.steps) {
      changes.push_back({t.name, original, std::move(step.before), std::move(step.after), std::move(step.rule_id),
                         step.category});
    }
    if (n.text != original) col.kind = infer_column_kind(n.text, LoaderConfig{});
    col.raw_heading = std::move(n.text);
  }

  std::vector<std::string> seen;
  for (const auto& col : t.columns) {
    if (!col.is_property()) continue;
    std::string h(text::trim(col.raw_heading));
    if (std::find(seen.begin(), seen.end(), h) == seen.end()) seen.push_back(std::move(h));
  }
  for (const auto& heading : seen) {
    const auto cols = columns_named(t, heading);
    if (cols.size() < 2) continue;
    const bool lexical = std::all_of(cols.begin(), cols.end(),
                                     [&](std::size_t c) { return t.columns[c].kind == ColumnKind::kLexical; });
    if (lexical) {
      t = merge_duplicate_columns(t, heading);
    } else {
      for (std::size_t c : cols) {
        if (t.columns[c].kind != ColumnKind::kCoded) {
          throw MergeError("table " + t.name + ": '" + heading + "' names both lexical and coded columns");
        }
      }
      for (const auto& row : t.rows) {
        for (std::size_t c : cols) {
          if (render_cell(row.cells[c].value) != render_cell(row.cells[cols.front()].value)) {
            throw MergeError("table " + t.name + ": duplicate coded columns '" + heading + "' disagree on row " +
                             std::to_string(row.row_index));
          }
        }
      }
      erase_columns(t, {cols.begin() + 1, cols.end()});
    }
    for (std::size_t i = 1; i < cols.size(); ++i) {
      changes.push_back({t.name, heading, heading, heading, "merge-duplicates", ChangeCategory::kStructural});
    }
  }

  std::vector<std::size_t> drop;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    const ColumnSpec& col = t.columns[c];
    if (!col.is_property()) continue;
    std::string rule;
    if (auto canonical = canonical_label(col.raw_heading); canonical && defining.is_defining(t.name, *canonical)) {
      rule = "defining";
    } else if (col.kind == ColumnKind::kCoded && !t.rows.empty() && !is_support_gate(col.raw_heading)) {
      const auto all = [&](bool (*pred)(const CellValue&)) {
        return std::all_of(t.rows.begin(), t.rows.end(), [&](const Entry& e) { return pred(e.cells[c].value); });
      };
      if (all(is_minus) || all(is_empty)) rule = "non-pertinent";
    }
    if (rule.empty()) continue;
    drop.push_back(c);
    changes.push_back({t.name, col.raw_heading, col.raw_heading, "", rule, ChangeCategory::kColumnRemoval});
  }
  erase_columns(t, drop);
  return res;
}

}  // namespace lgc
