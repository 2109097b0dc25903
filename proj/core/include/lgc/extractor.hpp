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

#ifndef LGC_EXTRACTOR_HPP_
#define LGC_EXTRACTOR_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/defining.hpp"
#include "lgc/greek.hpp"
#include "lgc/label.hpp"
#include "lgc/lglex.hpp"
#include "lgc/table.hpp"

namespace lgc {

enum class Effect {
  kAddAbsoluteConstruction,
  kAddRelative,
  kAddDistribution,
  kAddLocatif,
  kAddPreposition,
  kAddPfxVerb,
  kAddLexicalField,
  kAddRole,
  kIgnore,
};

std::string_view to_string(Effect e);

// One script line: a selector ("kind:<name>" or an exact canonical label),
// an effect, and optional "key=value;key=value" parameters.
struct Directive {
  std::string selector;
  bool by_kind = false;
  Effect effect = Effect::kIgnore;
  std::string params;
  std::size_t line = 0;

  std::string param(std::string_view key, std::string_view fallback = {}) const;
};

// Tells the extractor what each heading means. A label is handled by the
// directives naming it exactly, or failing that by those naming its kind.
class ExtractionScript {
 public:
  static ExtractionScript from_file(const std::filesystem::path& path);
  static ExtractionScript parse(std::string_view text);

  void add(Directive d);
  const std::vector<Directive>& directives() const { return directives_; }
  std::vector<const Directive*> match(const PropertyLabel& label, std::string_view canonical) const;

 private:
  std::vector<Directive> directives_;
};

struct ExtractOptions {
  bool expand_prefixes = true;
};

// Compiles one row (0-based index into table.rows) into its entry followed by
// one clone per prefixed verb when expand_prefixes is set.
std::vector<LGLexEntry> extract_entry(const Table& table, std::size_t row,
                                      const ExtractionScript& script,
                                      const DefiningConfig& defining, const Lexicons& lex,
                                      bool expand_prefixes);

struct LexiconStats {
  std::size_t tables = 0;
  std::size_t rows = 0;
  std::size_t entries = 0;
  std::size_t prefix_clones = 0;
};

struct ExtractionResult {
  LGLexLexicon lexicon;
  LexiconStats stats;
};

// Entries ordered by table name, row, base before clones. Per-entry failures
// are collected and rethrown as one ExtractError.
ExtractionResult extract_lexicon(const std::vector<Table>& tables, const ExtractionScript& script,
                                 const DefiningConfig& defining, const Lexicons& lex,
                                 const ExtractOptions& options = {});

// Throws UnmatchedLabel naming the first property heading without a directive.
void check_script_coverage(const Table& table, const ExtractionScript& script);

}  // namespace lgc

#endif  // LGC_EXTRACTOR_HPP_
