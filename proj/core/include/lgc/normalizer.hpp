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

#ifndef LGC_NORMALIZER_HPP_
#define LGC_NORMALIZER_HPP_

#include <filesystem>
#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "lgc/defining.hpp"
#include "lgc/table.hpp"

namespace lgc {

enum class MatchMode {
  kExact,    // "eq:" prefix, whole heading must equal the pattern
  kLiteral,  // no prefix, every occurrence of the substring is replaced
  kRegex,    // "re:" prefix, ECMAScript regex, every match replaced
};

struct RewriteRule {
  std::string id;
  ChangeCategory category = ChangeCategory::kTypographic;
  MatchMode mode = MatchMode::kLiteral;
  std::string pattern;
  std::string replacement;

  // Returns the rewritten text; equal to the input when the rule does not fire.
  std::string apply(const std::string& text) const;

 private:
  friend class RuleSet;
  std::shared_ptr<const std::regex> regex_;
};

// Ordered rewrite rules, one per line:
//   id<TAB>category<TAB>match<TAB>replace
// Rules filed under "linguistic" are loaded but never applied; headings
// they match are reported as suspects instead.
class RuleSet {
 public:
  static RuleSet from_file(const std::filesystem::path& path);
  static RuleSet parse(std::string_view text);

  void add(RewriteRule rule);
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<RewriteRule> rules_;
};

struct RewriteStep {
  std::string rule_id;
  ChangeCategory category;
  std::string before;
  std::string after;
};

struct NormalizedLabel {
  std::string text;
  std::vector<RewriteStep> steps;
  bool residual_error = false;  // result still does not parse

  std::vector<std::string> rule_ids() const;
};

inline constexpr int kDefaultMaxPasses = 32;

// Applies the rules in order, pass after pass, until a pass changes nothing.
// Throws CycleError when no fixpoint is reached within max_passes.
NormalizedLabel normalize_label(std::string_view text, const RuleSet& rules,
                                int max_passes = kDefaultMaxPasses);

// Headings matched by a linguistic rule, with the rule id.
std::vector<std::pair<std::string, std::string>> linguistic_suspects(const Table& table,
                                                                     const RuleSet& rules);

struct Change {
  std::string table;
  std::string column;
  std::string before;
  std::string after;
  std::string rule_id;
  ChangeCategory category;
};

struct CategoryStat {
  ChangeCategory category;
  std::size_t count = 0;
  double percent = 0.0;
};

struct Histogram {
  std::size_t total = 0;
  std::vector<CategoryStat> categories;  // all five, fixed order

  const CategoryStat& at(ChangeCategory c) const;
};

struct ChangeReport {
  std::vector<Change> changes;

  void append(const ChangeReport& other);
};

Histogram change_stats(const ChangeReport& report);

std::string render_changes(const ChangeReport& report);
std::string render_histogram(const Histogram& histogram);

// Folds lexical columns sharing `heading` into one: each cell becomes the
// "+"-join of the non-empty source cells, first occurrence order, without
// duplicates. Throws MergeError if fewer than two such columns exist or any
// of them is coded.
Table merge_duplicate_columns(const Table& table, std::string_view heading);

struct NormalizeResult {
  Table table;
  ChangeReport report;
};

// Rewrites headings, merges duplicate columns, drops defining columns and
// constant ("-" everywhere or "<E>" everywhere) coded columns. Lemma, id,
// example and translation columns are left alone.
NormalizeResult normalize_table(const Table& table, const RuleSet& rules,
                                const DefiningConfig& defining);

}  // namespace lgc

#endif  // LGC_NORMALIZER_HPP_
