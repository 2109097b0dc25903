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

#ifndef LGC_TABLE_HPP_
#define LGC_TABLE_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lgc {

struct Plus {
  friend bool operator==(Plus, Plus) = default;
};
struct Minus {
  friend bool operator==(Minus, Minus) = default;
};
struct Unknown {
  friend bool operator==(Unknown, Unknown) = default;
};
struct Empty {
  friend bool operator==(Empty, Empty) = default;
};
// Word forms of a lexical cell; "x+y" lists alternatives.
struct Lexical {
  std::vector<std::string> alternatives;
  friend bool operator==(const Lexical&, const Lexical&) = default;
};

using CellValue = std::variant<Plus, Minus, Unknown, Empty, Lexical>;

// Maps a raw cell string onto exactly one CellValue. "+", "-" (or U+2212),
// "?", "<E>" and "" are signs; everything else is lexical material.
CellValue classify_cell(std::string_view raw);
std::string render_cell(const CellValue& value);

bool is_plus(const CellValue& v);
bool is_minus(const CellValue& v);
bool is_empty(const CellValue& v);

struct Cell {
  std::string raw;
  CellValue value;
};

enum class ColumnKind { kCoded, kLexical, kLemma, kIdentifier, kExample, kTranslation };

std::string_view to_string(ColumnKind kind);

struct ColumnSpec {
  std::string raw_heading;
  ColumnKind kind = ColumnKind::kCoded;

  // Property columns carry a label; lemma/id/example/translation do not.
  bool is_property() const {
    return kind == ColumnKind::kCoded || kind == ColumnKind::kLexical;
  }
};

struct Entry {
  int row_index = 0;  // 1-based
  std::string lemma;
  std::vector<Cell> cells;
};

struct Table {
  std::string name;
  std::string category = "V";
  std::vector<ColumnSpec> columns;
  std::vector<Entry> rows;

  std::size_t lemma_column() const;
  std::optional<std::size_t> find_column(std::string_view heading) const;
};

// Per-run loader settings. Read from a key=value file.
struct LoaderConfig {
  char delimiter = '\t';
  std::string lemma_column = "ENT";
  std::string id_column;  // empty: entry numbers follow row order
  std::string category = "V";
  std::vector<std::string> example_columns;
  std::vector<std::string> translation_columns;
  std::vector<std::string> lexical_columns;  // forced lexical kind
  std::vector<std::string> coded_columns;    // forced coded kind
  // Repeated headings are an error unless a later merge will fold them.
  bool allow_duplicate_headings = false;

  static LoaderConfig from_file(const std::filesystem::path& path);
  static LoaderConfig parse(std::string_view text);
};

// Column kind for a property heading: lexical-field labels hold word forms,
// every other label is coded.
ColumnKind infer_column_kind(std::string_view heading, const LoaderConfig& config);

// Parses table text. The table name is taken from `name`.
Table parse_table(std::string_view data, std::string name, const LoaderConfig& config);

// Loads "<dir>/38GL.tsv" as table "38GL".
Table load_table(const std::filesystem::path& path, const LoaderConfig& config);

// Writes headings and raw cells back out. For a freshly loaded table this
// reproduces the source bytes, except that the output always ends with
// exactly one newline.
std::string write_table(const Table& table, const LoaderConfig& config);

// ---------------------------------------------------------------------------
// Validation

enum class Severity { kWarning, kError };

// The five kinds of edits made to the tables; validation items and
// normalization changes are both filed under one of them.
enum class ChangeCategory { kTypographic, kStructural, kLexicalAddition, kColumnRemoval, kLinguistic };

inline constexpr ChangeCategory kAllCategories[] = {
    ChangeCategory::kTypographic, ChangeCategory::kStructural,
    ChangeCategory::kLexicalAddition, ChangeCategory::kColumnRemoval,
    ChangeCategory::kLinguistic};

std::string_view to_string(ChangeCategory category);
std::optional<ChangeCategory> parse_category(std::string_view text);

struct ValidationItem {
  std::string table;
  std::optional<std::size_t> column;  // 0-based
  std::optional<int> row;             // entry row_index
  std::string heading;
  std::string code;
  ChangeCategory category;
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationItem> items;

  bool empty() const { return items.empty(); }
  bool has_errors() const;
};

class Lexicons;

// Checks headings against the label grammar and cells against the column
// kinds. With `lexicons` given, prepositions, conjunctions and clitics in
// labels are also checked against them.
ValidationReport validate_table(const Table& table, const Lexicons* lexicons = nullptr);

// One line per item, tab-separated, with a header line.
std::string render_report(const ValidationReport& report);

}  // namespace lgc

#endif  // LGC_TABLE_HPP_
