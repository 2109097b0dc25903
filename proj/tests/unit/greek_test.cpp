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
#include "lgc/label.hpp"
#include "test_support.hpp"

namespace lgc {
namespace {

const Lexicons& lex() {
  static const Lexicons l = Lexicons::load_dir(testing::shipped_data("lexicons"));
  return l;
}

Construction cons(const std::string& s) { return std::get<Construction>(parse_label(s)); }

TEST(Lexicons, ShippedTables) {
  EXPECT_EQ(lex().prep_case("κατά"), Case::kGenitive);
  EXPECT_EQ(lex().prep_case("σε"), Case::kAccusative);
  EXPECT_EQ(lex().prep_case("άγνωστη"), Case::kAccusative);
  EXPECT_TRUE(lex().knows_preposition("από"));
  EXPECT_FALSE(lex().knows_preposition("άγνωστη"));
  EXPECT_EQ(lex().conj_mood("να"), Mood::kSubjunctive);
  EXPECT_EQ(lex().conj_mood("ότι"), Mood::kIndicative);
  EXPECT_TRUE(lex().is_transitive("βγάζω"));
  EXPECT_TRUE(lex().is_copula("είμαι"));
  EXPECT_TRUE(lex().knows_clitic("τους"));
}

TEST(Lexicons, EmptyDirAndBadLines) {
  EXPECT_THROW(Lexicons::load_dir("/nonexistent"), IoError);
  testing::TempDir dir;
  const auto empty = Lexicons::load_dir(dir.path());
  EXPECT_FALSE(empty.has_clitics());
  EXPECT_FALSE(empty.conj_mood("να"));
  Lexicons l;
  EXPECT_THROW(l.load_prep_case("σε\tablative\n"), ConfigError);
  EXPECT_THROW(l.load_conj_mood("να\n"), ConfigError);
  EXPECT_THROW(l.load_verb_classes("x\tditransitive\n"), ConfigError);
  EXPECT_NO_THROW(l.load_prep_case("σε\tgenitif\n"));
  EXPECT_EQ(l.prep_case("σε"), Case::kGenitive);
}

TEST(Case, Resolution) {
  auto r = resolve_case(cons("N0 V N1"), 0, "βγάζω", lex());
  EXPECT_EQ(r.value, Case::kNominative);
  EXPECT_EQ(r.rule, CaseRule::kSubject);
  r = resolve_case(cons("N0 V N1"), 1, "βγάζω", lex());
  EXPECT_EQ(r.value, Case::kAccusative);
  EXPECT_EQ(r.rule, CaseRule::kObject);
  r = resolve_case(cons("N0 V N1"), 1, "είμαι", lex());
  EXPECT_EQ(r.value, Case::kNominative);
  r = resolve_case(cons("N0 V κατά N2"), 2, "βγάζω", lex());
  EXPECT_EQ(r.value, Case::kGenitive);
  EXPECT_EQ(r.rule, CaseRule::kPreposition);
  r = resolve_case(cons("N1 V από N0"), 0, "βγάζω", lex());
  EXPECT_EQ(r.value, Case::kAccusative);
  EXPECT_EQ(r.rule, CaseRule::kPreposition);
  r = resolve_case(cons("N1nominatif V"), 1, "βγάζω", lex());
  EXPECT_EQ(r.value, Case::kNominative);
  EXPECT_EQ(r.rule, CaseRule::kExplicitTag);
  r = resolve_case(cons("N0 V N1 Loc N2 source"), 2, "βγάζω", lex());
  EXPECT_EQ(r.value, Case::kAccusative);
  r = resolve_case(cons("N0 V N1 N2"), 2, "βγάζω", lex());
  EXPECT_TRUE(r.defaulted);
  EXPECT_EQ(r.rule, CaseRule::kDefault);
  r = resolve_case(cons("N0 V N1 (E+κατά N2)"), 2, "βγάζω", lex());
  EXPECT_EQ(r.value, Case::kGenitive);
  EXPECT_THROW(resolve_case(cons("N0 V"), 1, "βγάζω", lex()), ParseError);
}

TEST(Case, LocateNoun) {
  const auto site = locate_noun(cons("N0 V N1 σε N2"), 2);
  ASSERT_TRUE(site);
  EXPECT_EQ(site->governor, "σε");
  EXPECT_FALSE(locate_noun(cons("N0 V N1"), 1)->governor);
  EXPECT_EQ(locate_noun(cons("N0 V N1 Loc N2"), 2)->governor, "");
  EXPECT_FALSE(locate_noun(cons("N0 V"), 3));
}

TEST(Mood, Lookup) {
  EXPECT_EQ(lookup_mood("να", lex()), Mood::kSubjunctive);
  EXPECT_THROW(lookup_mood("ώστε", lex()), UnknownConjunction);
}

TEST(Prefix, Apply) {
  EXPECT_EQ(apply_prefix("βγάζω", "ξανα"), "ξαναβγάζω");
  EXPECT_EQ(apply_prefix("βγάζω", "ξανα-"), "ξαναβγάζω");
  EXPECT_THROW(apply_prefix("", "ξανα"), std::invalid_argument);
  EXPECT_THROW(apply_prefix("βγάζω", ""), std::invalid_argument);
}

}  // namespace
}  // namespace lgc
