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

#include <random>

#include "lgc/error.hpp"
#include "lgc/label.hpp"
#include "test_support.hpp"

namespace lgc {
namespace {

TEST(Label, CorpusParsesClassifiesAndRoundTrips) {
  const auto corpus = testing::label_corpus();
  ASSERT_GE(corpus.size(), 60u);
  for (const auto& [text, kinds] : corpus) {
    const PropertyLabel label = parse_label(text);
    EXPECT_EQ(classify_label(label).to_string(), kinds) << text;
    EXPECT_EQ(render_label(label), text);
    EXPECT_EQ(parse_label(render_label(label)), label) << text;
  }
}

TEST(Label, DistributionShapes) {
  const auto d = std::get<Distribution>(parse_label("N2 =: Nhum"));
  ASSERT_TRUE(d.arg);
  EXPECT_EQ(d.arg->position, 2);
  EXPECT_EQ(std::get<NounClass>(d.value).trait, Trait::kHum);

  const auto comp = std::get<CompletiveSpec>(std::get<Distribution>(parse_label("N1 =: το γεγονός Pότι")).value);
  EXPECT_EQ(comp.conjunction, "ότι");
  EXPECT_EQ(comp.nominalizer, Nominalizer::kToGegonos);

  const auto ctl = std::get<CompletiveSpec>(std::get<Distribution>(parse_label("N1 =: να V0")).value);
  EXPECT_TRUE(ctl.controlled_by_subject);
  EXPECT_EQ(ctl.conjunction, "να");

  const auto bare = std::get<Distribution>(parse_label("Pcomp0"));
  EXPECT_FALSE(bare.arg);
  EXPECT_EQ(std::get<CompletiveSpec>(bare.value).marker, CompletiveSpec::Marker::kPcomp);
  EXPECT_TRUE(std::holds_alternative<VerbalNoun>(std::get<Distribution>(parse_label("N0 =: V-n")).value));
}

TEST(Label, ConstructionTokens) {
  const auto c = std::get<Construction>(parse_label("N0 V κατά N2humgenitif"));
  ASSERT_EQ(c.tokens.size(), 4u);
  EXPECT_EQ(std::get<PrepToken>(c.tokens[2].value).word, "κατά");
  const auto n2 = std::get<NounToken>(c.tokens[3].value).noun;
  EXPECT_EQ(n2.position, 2);
  EXPECT_EQ(n2.trait, Trait::kHum);
  EXPECT_EQ(n2.case_tag, CaseTag::kGenitif);

  const auto pfx = std::get<Construction>(parse_label("N0 εκ-V N1 Loc N2 source"));
  EXPECT_EQ(construction_verb(pfx).prefix, "εκ");
  EXPECT_EQ(std::get<LocToken>(pfx.tokens[3].value).role, Role::kSource);

  const auto opt = std::get<Construction>(parse_label("N0 V N1 Loc N2 source (E+Loc N3 destination)"));
  EXPECT_EQ(std::get<OptionalGroup>(opt.tokens.back().value).tokens.size(), 1u);

  EXPECT_EQ(construction_verb(std::get<Construction>(parse_label("N1 είμαι ξε-Vpp"))).form, VerbForm::kVpp);
}

TEST(Label, OtherKinds) {
  const auto lp = std::get<LocPrepDistribution>(parse_label("Loc N2 =: (με+σε) N2 moyen-destination"));
  EXPECT_EQ(lp.preps, (std::vector<std::string>{"με", "σε"}));
  EXPECT_EQ(lp.role, Role::kMoyenDestination);

  const auto rel = std::get<RelativeTransform>(parse_label("Loc N2 = Ppv =: (μου+μας+σου+σας+του+τους+της)"));
  EXPECT_TRUE(rel.locative);
  EXPECT_TRUE(rel.equality);
  EXPECT_EQ(rel.rhs.clitics.size(), 7u);

  const auto lf = std::get<LexicalField>(parse_label("V-adj, Sfx = τικός"));
  EXPECT_EQ(lf.field, Field::kVadj);
  EXPECT_EQ(lf.suffix, "τικός");
  EXPECT_EQ(std::get<LexicalField>(parse_label("V-n instrument")).role, Role::kInstrument);
  EXPECT_EQ(std::get<EntryFormation>(parse_label("ξανα-V")).prefix, "ξανα");
  EXPECT_TRUE(std::holds_alternative<EtymologicalMark>(parse_label("X-V")));
  EXPECT_EQ(std::get<ExtraComplement>(parse_label("με N")).prep, "με");
}

TEST(Label, SpacingAroundOperatorsIsInsignificant) {
  EXPECT_EQ(parse_label("N0=:Nhum"), parse_label("N0 =: Nhum"));
  EXPECT_EQ(canonical_label("N0=:Nhum"), "N0 =: Nhum");
  EXPECT_EQ(canonical_label("V-adj,Sfx=os"), "V-adj, Sfx = os");
}

TEST(Label, Rejections) {
  EXPECT_THROW(parse_label("κατά [katá=contre] N2"), LexError);
  EXPECT_THROW(parse_label("Ν0 =: Nhum"), HomoglyphError);
  EXPECT_THROW(parse_label("ppv"), ParseError);
  EXPECT_THROW(parse_label(""), ParseError);
  EXPECT_THROW(parse_label("N0 V V N1"), ParseError);
  EXPECT_THROW(parse_label("N0 =: Nhum;"), LexError);
  EXPECT_FALSE(try_parse_label("disp"));
}

TEST(Label, CollectWords) {
  const auto w = collect_words(parse_label("N1 = Ppv =: (με+μας)"));
  EXPECT_EQ(w.clitics, (std::vector<std::string>{"με", "μας"}));
  EXPECT_EQ(collect_words(parse_label("N0 V κατά N2")).prepositions, (std::vector<std::string>{"κατά"}));
  EXPECT_EQ(collect_words(parse_label("Pμήπως")).conjunctions, (std::vector<std::string>{"μήπως"}));
}

// Random constructions assembled from canonical pieces parse back to
// themselves and classify as constructions.
TEST(LabelProperty, RandomConstructionsRoundTrip) {
  const std::vector<std::string> nouns = {"N0", "N1", "N2hum", "N3", "N1nominatif", "N2humgenitif", "N1conc"};
  const std::vector<std::string> extras = {"Loc N2 source", "Loc N3 destination", "σε N2", "κατά N2",
                                           "από N0",        "Prep N2",            "(E+Loc N3 destination)",
                                           "(E+σε N2)",     "Loc N2"};
  const std::vector<std::string> verbs = {"V", "εκ-V", "Vpp", "ξε-Vpp", "Vsup"};
  std::mt19937 rng(20261018);
  const auto pick = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  for (int i = 0; i < 300; ++i) {
    std::string text = pick(nouns) + " " + pick(verbs);
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k) {
      text += " " + (k % 2 ? pick(extras) : pick(nouns));
    }
    const auto label = parse_label(text);
    ASSERT_TRUE(std::holds_alternative<Construction>(label)) << text;
    EXPECT_EQ(render_label(label), text);
    EXPECT_EQ(classify_label(label).to_string(), "4");
  }
}

}  // namespace
}  // namespace lgc
