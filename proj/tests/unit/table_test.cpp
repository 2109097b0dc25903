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

#include <gtest/gtest.h>

#include "lgc/error.hpp"
#include "lgc/greek.hpp"
#include "lgc/table.hpp"
#include "lgc/text.hpp"
#include "test_support.hpp"

namespace lgc {
namespace {

LoaderConfig fixture_config() { return LoaderConfig::from_file(testing::test_data("38GL/loader.conf")); }

TEST(Cell, Classification) {
  EXPECT_TRUE(is_plus(classify_cell("+")));
  EXPECT_TRUE(is_minus(classify_cell("-")));
  EXPECT_TRUE(is_minus(classify_cell("−")));
  EXPECT_TRUE(std::holds_alternative<Unknown>(classify_cell("?")));
  EXPECT_TRUE(is_empty(classify_cell("<E>")));
  EXPECT_TRUE(is_empty(classify_cell("")));
  EXPECT_TRUE(is_plus(classify_cell(" + ")));
  const auto lex = std::get<Lexical>(classify_cell("βόλτα + περίπατος+βόλτα"));
  EXPECT_EQ(lex.alternatives, (std::vector<std::string>{"βόλτα", "περίπατος"}));
  EXPECT_EQ(render_cell(classify_cell("a+b")), "a+b");
}

TEST(Table, LoadsFixtureWithIdColumn) {
  const Table t = load_table(testing::test_data("38GL/38GL.tsv"), fixture_config());
  EXPECT_EQ(t.name, "38GL");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].row_index, 33);
  EXPECT_EQ(t.rows[0].lemma, "βγάζω");
  EXPECT_EQ(t.columns[t.lemma_column()].raw_heading, "ENT");
  EXPECT_EQ(t.columns[*t.find_column("Vpp")].kind, ColumnKind::kLexical);
  EXPECT_EQ(t.columns[*t.find_column("N0 =: Nhum")].kind, ColumnKind::kCoded);
  EXPECT_EQ(t.columns[*t.find_column("Example")].kind, ColumnKind::kExample);
  EXPECT_FALSE(t.columns[*t.find_column("Translation")].is_property());
}

TEST(Table, RowOrderNumberingWithoutIdColumn) {
  const Table t = parse_table("ENT\tN0 V\na\t+\nb\t-\n", "T", {});
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].row_index, 1);
  EXPECT_EQ(t.rows[1].row_index, 2);
  EXPECT_EQ(t.category, "V");
}

TEST(Table, RaggedRowNamesFileLine) {
  try {
    parse_table("ENT\tN0 V\tN1 =: Nhum\nβγάζω\t+\n", "T", {});
    FAIL() << "expected RaggedRowError";
  } catch (const RaggedRowError& e) {
    EXPECT_EQ(e.row(), 2u);
  }
}

TEST(Table, DuplicateHeadingsNeedPermission) {
  const std::string data = "ENT\tNpred\tNpred\nα\tx\ty\n";
  EXPECT_THROW(parse_table(data, "T", {}), DuplicateHeadingError);
  LoaderConfig cfg;
  cfg.allow_duplicate_headings = true;
  EXPECT_EQ(parse_table(data, "T", cfg).columns.size(), 3u);
}

TEST(Table, LoaderErrors) {
  EXPECT_THROW(parse_table("X\tN0 V\na\t+\n", "T", {}), ConfigError);
  EXPECT_THROW(parse_table("ENT\tN0 V\n\t+\n", "T", {}), ConfigError);
  LoaderConfig cfg;
  cfg.id_column = "ID";
  EXPECT_THROW(parse_table("ID\tENT\n5\ta\n5\tb\n", "T", cfg), ConfigError);
  EXPECT_THROW(parse_table("ID\tENT\nx\ta\n", "T", cfg), ConfigError);
  EXPECT_THROW(LoaderConfig::parse("colour = blue\n"), ConfigError);
  EXPECT_THROW(LoaderConfig::parse("no equals sign\n"), ConfigError);
}

TEST(Table, LoaderConfigKeys) {
  const auto cfg = LoaderConfig::parse("delimiter = ;\nlemma_column = Lemma\nlexical_columns = A, B\ncategory = N\n");
  EXPECT_EQ(cfg.delimiter, ';');
  EXPECT_EQ(cfg.lemma_column, "Lemma");
  EXPECT_EQ(cfg.lexical_columns, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(cfg.category, "N");
  EXPECT_EQ(LoaderConfig::parse("delimiter = tab\n").delimiter, '\t');
  EXPECT_EQ(infer_column_kind("A", cfg), ColumnKind::kLexical);
  EXPECT_EQ(infer_column_kind("V-adj, Sfx = os", {}), ColumnKind::kLexical);
  EXPECT_EQ(infer_column_kind("N0 Vsup Npred", {}), ColumnKind::kCoded);
  EXPECT_EQ(infer_column_kind("gibberish [x]", {}), ColumnKind::kCoded);
}

TEST(Table, WriteBackIsByteIdentical) {
  for (const auto& [file, cfg] : std::vector<std::pair<std::string, LoaderConfig>>{
           {"38GL/38GL.tsv", fixture_config()}, {"seed/SEED.tsv", {}}, {"prefix/32GC.tsv", {}}}) {
    LoaderConfig c = cfg;
    c.allow_duplicate_headings = true;
    const auto path = testing::test_data(file);
    EXPECT_EQ(write_table(load_table(path, c), c), text::read_file(path)) << file;
  }
}

TEST(Validate, CleanFixtureHasEmptyReport) {
  const Table t = load_table(testing::test_data("38GL/38GL.tsv"), fixture_config());
  const Lexicons lex = Lexicons::load_dir(testing::shipped_data("lexicons"));
  const auto report = validate_table(t, &lex);
  EXPECT_TRUE(report.empty()) << render_report(report);
}

TEST(Validate, FlagsNotationProblems) {
  LoaderConfig cfg;
  cfg.allow_duplicate_headings = true;
  const Table t = parse_table("ENT\tppv\tN0=:Nhum\tN1 =: Nhum\tN1 =: Nhum\tVpp\nα\t+\t+\tx\t+\t-\n", "T", cfg);
  const auto report = validate_table(t);
  ASSERT_TRUE(report.has_errors());
  const auto has = [&](const std::string& code, const std::string& heading, Severity sev, ChangeCategory cat) {
    return std::any_of(report.items.begin(), report.items.end(), [&](const ValidationItem& i) {
      return i.code == code && i.heading == heading && i.severity == sev && i.category == cat;
    });
  };
  EXPECT_TRUE(has("unparseable_heading", "ppv", Severity::kError, ChangeCategory::kTypographic));
  EXPECT_TRUE(has("non_canonical_heading", "N0=:Nhum", Severity::kWarning, ChangeCategory::kTypographic));
  EXPECT_TRUE(has("duplicate_heading", "N1 =: Nhum", Severity::kError, ChangeCategory::kStructural));
  EXPECT_TRUE(has("lexical_in_coded_column", "N1 =: Nhum", Severity::kError, ChangeCategory::kLinguistic));
  EXPECT_TRUE(has("sign_in_lexical_column", "Vpp", Severity::kWarning, ChangeCategory::kLinguistic));
}

TEST(Validate, UsesLexicons) {
  Lexicons lex;
  lex.set_prep_case("κατά", Case::kGenitive);
  lex.set_conj_mood("ότι", Mood::kIndicative);
  const Table t = parse_table("ENT\tPπως\tN0 V κατά N2accusatif\tN0 V προς N2\nα\t+\t+\t+\n", "T", {});
  const auto report = validate_table(t, &lex);
  std::vector<std::string> codes;
  for (const auto& i : report.items) codes.push_back(i.code);
  EXPECT_NE(std::find(codes.begin(), codes.end(), "unknown_conjunction"), codes.end());
  EXPECT_NE(std::find(codes.begin(), codes.end(), "case_tag_conflict"), codes.end());
  EXPECT_NE(std::find(codes.begin(), codes.end(), "unknown_preposition"), codes.end());
}

TEST(Validate, CategoryNames) {
  for (ChangeCategory c : kAllCategories) EXPECT_EQ(parse_category(to_string(c)), c);
  EXPECT_FALSE(parse_category("spelling"));
}

}  // namespace
}  // namespace lgc
