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

#include "lgc/table.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "lgc/error.hpp"
#include "lgc/greek.hpp"
#include "lgc/label.hpp"
#include "lgc/text.hpp"

namespace lgc {
namespace {

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  for (const auto& part : text::split(v, ',')) {
    auto t = text::trim(part);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

bool contains(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

CellValue classify_cell(std::string_view raw) {
  const std::string_view t = text::trim(raw);
  if (t == "+") return Plus{};
  if (t == "-" || t == "−") return Minus{};
  if (t == "?") return Unknown{};
  if (t.empty() || t == "<E>") return Empty{};
  Lexical lex;
  for (const auto& part : text::split(t, '+')) {
    const auto alt = text::trim(part);
    if (alt.empty() || contains(lex.alternatives, alt)) continue;
    lex.alternatives.emplace_back(alt);
  }
  if (lex.alternatives.empty()) lex.alternatives.emplace_back(t);
  return lex;
}

std::string render_cell(const CellValue& value) {
  if (std::holds_alternative<Plus>(value)) return "+";
  if (std::holds_alternative<Minus>(value)) return "-";
  if (std::holds_alternative<Unknown>(value)) return "?";
  if (std::holds_alternative<Empty>(value)) return "<E>";
  return text::join(std::get<Lexical>(value).alternatives, "+");
}

bool is_plus(const CellValue& v) { return std::holds_alternative<Plus>(v); }
bool is_minus(const CellValue& v) { return std::holds_alternative<Minus>(v); }
bool is_empty(const CellValue& v) { return std::holds_alternative<Empty>(v); }

std::string_view to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kCoded: return "coded";
    case ColumnKind::kLexical: return "lexical";
    case ColumnKind::kLemma: return "lemma";
    case ColumnKind::kIdentifier: return "identifier";
    case ColumnKind::kExample: return "example";
    case ColumnKind::kTranslation: return "translation";
  }
  return "?";
}

std::size_t Table::lemma_column() const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].kind == ColumnKind::kLemma) return i;
  }
  throw InvariantError("table " + name + " has no lemma column");
}

std::optional<std::size_t> Table::find_column(std::string_view heading) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].raw_heading == heading) return i;
  }
  return std::nullopt;
}

LoaderConfig LoaderConfig::from_file(const std::filesystem::path& path) {
  try {
    return parse(text::read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

LoaderConfig LoaderConfig::parse(std::string_view data) {
  LoaderConfig cfg;
  const auto all = text::lines(data);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto line = text::trim(all[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(i + 1) + ": expected key=value");
    }
    const auto key = text::trim(line.substr(0, eq));
    const auto value = text::trim(line.substr(eq + 1));
    if (key == "delimiter") {
      if (value == "tab" || value == "\\t") {
        cfg.delimiter = '\t';
      } else if (value.size() == 1) {
        cfg.delimiter = value.front();
      } else {
        throw ConfigError("line " + std::to_string(i + 1) + ": delimiter must be one character or 'tab'");
      }
    } else if (key == "lemma_column") {
      cfg.lemma_column = value;
    } else if (key == "id_column") {
      cfg.id_column = value;
    } else if (key == "category") {
      cfg.category = value;
    } else if (key == "example_columns") {
      cfg.example_columns = split_list(value);
    } else if (key == "translation_columns") {
      cfg.translation_columns = split_list(value);
    } else if (key == "lexical_columns") {
      cfg.lexical_columns = split_list(value);
    } else if (key == "coded_columns") {
      cfg.coded_columns = split_list(value);
    } else if (key == "allow_duplicate_headings") {
      cfg.allow_duplicate_headings = value == "true" || value == "1" || value == "yes";
    } else {
      throw ConfigError("line " + std::to_string(i + 1) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (cfg.lemma_column.empty()) throw ConfigError("lemma_column must not be empty");
  return cfg;
}

ColumnKind infer_column_kind(std::string_view heading, const LoaderConfig& config) {
  const auto h = text::trim(heading);
  if (contains(config.lexical_columns, h)) return ColumnKind::kLexical;
  if (contains(config.coded_columns, h)) return ColumnKind::kCoded;
  if (auto label = try_parse_label(h)) {
    if (const auto* f = std::get_if<LexicalField>(&*label); f && f->field != Field::kN0VsupNpred) {
      return ColumnKind::kLexical;
    }
  }
  return ColumnKind::kCoded;
}

Table parse_table(std::string_view data, std::string name, const LoaderConfig& config) {
  const auto all = text::lines(data);
  if (all.empty()) throw ConfigError("table " + name + ": no heading line");

  Table t;
  t.name = std::move(name);
  t.category = config.category;
  const std::string delim(1, config.delimiter);

  std::optional<std::size_t> lemma;
  std::optional<std::size_t> id;
  std::set<std::string> seen;
  for (auto& heading : text::split(all.front(), delim)) {
    ColumnSpec col;
    const auto h = std::string(text::trim(heading));
    if (h == config.lemma_column) {
      col.kind = ColumnKind::kLemma;
      if (lemma) throw ConfigError("table " + t.name + ": lemma column '" + h + "' appears twice");
      lemma = t.columns.size();
    } else if (!config.id_column.empty() && h == config.id_column) {
      col.kind = ColumnKind::kIdentifier;
      if (id) throw ConfigError("table " + t.name + ": id column '" + h + "' appears twice");
      id = t.columns.size();
    } else if (contains(config.example_columns, h)) {
      col.kind = ColumnKind::kExample;
    } else if (contains(config.translation_columns, h)) {
      col.kind = ColumnKind::kTranslation;
    } else {
      col.kind = infer_column_kind(h, config);
      if (!seen.insert(h).second && !config.allow_duplicate_headings) {
        throw DuplicateHeadingError("table " + t.name + ": duplicate heading '" + h + "'");
      }
    }
    col.raw_heading = std::move(heading);
    t.columns.push_back(std::move(col));
  }
  if (!lemma) throw ConfigError("table " + t.name + ": no lemma column '" + config.lemma_column + "'");
  if (!config.id_column.empty() && !id) {
    throw ConfigError("table " + t.name + ": no id column '" + config.id_column + "'");
  }

  for (std::size_t li = 1; li < all.size(); ++li) {
    auto cells = text::split(all[li], delim);
    if (cells.size() != t.columns.size()) throw RaggedRowError(li + 1, cells.size(), t.columns.size());
    Entry e;
    if (id) {
      const auto idtext = text::trim(cells[*id]);
      int value = 0;
      auto [ptr, ec] = std::from_chars(idtext.data(), idtext.data() + idtext.size(), value);
      if (ec != std::errc() || ptr != idtext.data() + idtext.size() || value < 1) {
        throw ConfigError("table " + t.name + " line " + std::to_string(li + 1) + ": bad entry id '" +
                          std::string(idtext) + "'");
      }
      e.row_index = value;
    } else {
      e.row_index = static_cast<int>(li);
    }
    if (!t.rows.empty() && e.row_index <= t.rows.back().row_index) {
      throw ConfigError("table " + t.name + " line " + std::to_string(li + 1) +
                        ": entry numbers must be strictly increasing");
    }
    e.lemma = std::string(text::trim(cells[*lemma]));
    if (e.lemma.empty()) {
      throw ConfigError("table " + t.name + " line " + std::to_string(li + 1) + ": empty lemma");
    }
    e.cells.reserve(cells.size());
    for (auto& raw : cells) {
      CellValue v = classify_cell(raw);
      e.cells.push_back({std::move(raw), std::move(v)});
    }
    t.rows.push_back(std::move(e));
  }
  return t;
}

Table load_table(const std::filesystem::path& path, const LoaderConfig& config) {
  return parse_table(text::read_file(path), path.stem().string(), config);
}

std::string write_table(const Table& table, const LoaderConfig& config) {
  const std::string delim(1, config.delimiter);
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += delim;
    out += table.columns[i].raw_heading;
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      if (i) out += delim;
      out += row.cells[i].raw;
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ChangeCategory category) {
  switch (category) {
    case ChangeCategory::kTypographic: return "typographic";
    case ChangeCategory::kStructural: return "structural";
    case ChangeCategory::kLexicalAddition: return "lexical_addition";
    case ChangeCategory::kColumnRemoval: return "column_removal";
    case ChangeCategory::kLinguistic: return "linguistic";
  }
  return "?";
}

std::optional<ChangeCategory> parse_category(std::string_view text) {
  for (ChangeCategory c : kAllCategories) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

bool ValidationReport::has_errors() const {
  return std::any_of(items.begin(), items.end(),
                     [](const ValidationItem& i) { return i.severity == Severity::kError; });
}

namespace {

void check_words(const Table& t, std::size_t col, const PropertyLabel& label, const Lexicons& lex,
                 std::vector<ValidationItem>& out) {
  const std::string& heading = t.columns[col].raw_heading;
  const LabelWords words = collect_words(label);
  for (const auto& p : words.prepositions) {
    if (!lex.knows_preposition(p)) {
      out.push_back({t.name, col, std::nullopt, heading, "unknown_preposition", ChangeCategory::kLinguistic,
                     Severity::kWarning, "preposition '" + p + "' not in the case lexicon; accusative assumed"});
    }
  }
  for (const auto& c : words.conjunctions) {
    if (!lex.conj_mood(c)) {
      out.push_back({t.name, col, std::nullopt, heading, "unknown_conjunction", ChangeCategory::kLinguistic,
                     Severity::kError, "conjunction '" + c + "' has no mood entry"});
    }
  }
  if (lex.has_clitics()) {
    for (const auto& c : words.clitics) {
      if (!lex.knows_clitic(c)) {
        out.push_back({t.name, col, std::nullopt, heading, "unknown_clitic", ChangeCategory::kLinguistic,
                       Severity::kWarning, "clitic '" + c + "' is not a known form"});
      }
    }
  }
  if (const auto* c = std::get_if<Construction>(&label)) {
    for (int pos = 0; pos <= 3; ++pos) {
      auto site = locate_noun(*c, pos);
      if (!site || !site->noun.case_tag || !site->governor || site->governor->empty()) continue;
      if (*site->noun.case_tag == CaseTag::kDatif) continue;
      const Case tagged = case_from_tag(*site->noun.case_tag);
      const Case governed = lex.prep_case(*site->governor);
      if (lex.knows_preposition(*site->governor) && tagged != governed) {
        out.push_back({t.name, col, std::nullopt, heading, "case_tag_conflict", ChangeCategory::kLinguistic,
                       Severity::kWarning,
                       "N" + std::to_string(pos) + " is tagged " + std::string(to_string(tagged)) + " but '" +
                           *site->governor + "' governs the " + std::string(to_string(governed))});
      }
    }
  }
}

}  // namespace

ValidationReport validate_table(const Table& t, const Lexicons* lexicons) {
  ValidationReport report;
  auto& out = report.items;

  std::map<std::string, std::vector<std::size_t>> by_heading;
  for (std::size_t col = 0; col < t.columns.size(); ++col) {
    const ColumnSpec& spec = t.columns[col];
    if (!spec.is_property()) continue;
    const std::string heading(text::trim(spec.raw_heading));
    by_heading[heading].push_back(col);
    try {
      const PropertyLabel label = parse_label(spec.raw_heading);
      const std::string canonical = render_label(label);
      if (canonical != spec.raw_heading) {
        out.push_back({t.name, col, std::nullopt, spec.raw_heading, "non_canonical_heading",
                       ChangeCategory::kTypographic, Severity::kWarning,
                       "unparseable or non-canonical heading; canonical form is '" + canonical + "'"});
      }
      if (lexicons) check_words(t, col, label, *lexicons, out);
    } catch (const Error& e) {
      out.push_back({t.name, col, std::nullopt, spec.raw_heading, "unparseable_heading",
                     ChangeCategory::kTypographic, Severity::kError,
                     std::string("unparseable or non-canonical heading: ") + e.what()});
    }
  }

  for (const auto& [heading, cols] : by_heading) {
    if (cols.size() < 2) continue;
    const bool all_lexical = std::all_of(cols.begin(), cols.end(), [&](std::size_t c) {
      return t.columns[c].kind == ColumnKind::kLexical;
    });
    for (std::size_t c : cols) {
      out.push_back({t.name, c, std::nullopt, t.columns[c].raw_heading, "duplicate_heading",
                     ChangeCategory::kStructural, all_lexical ? Severity::kWarning : Severity::kError,
                     "duplicate heading (" + std::to_string(cols.size()) + " columns)" +
                         (all_lexical ? "; lexical columns can be merged" : "")});
    }
  }

  for (const auto& row : t.rows) {
    for (std::size_t col = 0; col < t.columns.size(); ++col) {
      const ColumnSpec& spec = t.columns[col];
      const Cell& cell = row.cells[col];
      if (spec.kind == ColumnKind::kCoded && std::holds_alternative<Lexical>(cell.value)) {
        out.push_back({t.name, col, row.row_index, spec.raw_heading, "lexical_in_coded_column",
                       ChangeCategory::kLinguistic, Severity::kError,
                       "coded column holds '" + cell.raw + "'"});
      } else if (spec.kind == ColumnKind::kLexical &&
                 (std::holds_alternative<Plus>(cell.value) || std::holds_alternative<Minus>(cell.value))) {
        out.push_back({t.name, col, row.row_index, spec.raw_heading, "sign_in_lexical_column",
                       ChangeCategory::kLinguistic, Severity::kWarning,
                       "lexical column holds the sign '" + cell.raw + "'"});
      } else if (spec.kind == ColumnKind::kLexical) {
        if (const auto* lex = std::get_if<Lexical>(&cell.value)) {
          if (render_cell(*lex) != text::trim(cell.raw)) {
            out.push_back({t.name, col, row.row_index, spec.raw_heading, "malformed_lexical_cell",
                           ChangeCategory::kLinguistic, Severity::kWarning,
                           "empty or repeated alternatives in '" + cell.raw + "'"});
          }
        }
      }
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const ValidationItem& a, const ValidationItem& b) {
    return std::tuple(a.row.value_or(0), a.column.value_or(0)) < std::tuple(b.row.value_or(0), b.column.value_or(0));
  });
  return report;
}

std::string render_report(const ValidationReport& report) {
  std::string out = "table\tcolumn\trow\tseverity\tcategory\tcode\theading\tmessage\n";
  for (const auto& i : report.items) {
    out += i.table + '\t';
    out += (i.column ? std::to_string(*i.column + 1) : "") + '\t';
    out += (i.row ? std::to_string(*i.row) : "") + '\t';
    out += i.severity == Severity::kError ? "error" : "warning";
    out += '\t';
    out += std::string(to_string(i.category)) + '\t' + i.code + '\t' + i.heading + '\t' + i.message + '\n';
  }
  return out;
}

}  // namespace lgc
