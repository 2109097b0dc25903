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
#include "lgc/lglex.hpp"
#include "lgc/text.hpp"
#include "test_support.hpp"

namespace lgc {
namespace {

std::string golden() { return text::read_file(testing::test_data("golden/V_38GL_33.txt")); }

LGLexEntry minimal(const std::string& id) {
  LGLexEntry e;
  e.id = id;
  e.lexical_info.lemma = "κρύβω";
  e.constructions.absolute = {"true::N0 V N1"};
  return e;
}

TEST(LGLexText, EmptyLexicon) {
  EXPECT_EQ(write_text({}), "");
  EXPECT_TRUE(read_text("").entries.empty());
}

TEST(LGLexText, MinimalEntry) {
  EXPECT_EQ(write_text({{minimal("V_T_1")}}),
            "ID=V_T_1\n"
            "lexical-info=[cat=\"verb\",verb=[lemma=\"κρύβω\"],pfx-V=(),prepositions=(),locatifs=()]\n"
            "args=()\n"
            "all-constructions=[absolute=(construction=\"true::N0 V N1\"),relative=()]\n"
            "example=[example=]\n");
  auto e = minimal("V_T_1");
  e.example = "το κρύβει";
  EXPECT_NE(write_text({{e}}).find("example=[example=\"το κρύβει\"]\n"), std::string::npos);
}

TEST(LGLexText, EntriesSeparatedByBlankLine) {
  const auto out = write_text({{minimal("a"), minimal("b")}});
  EXPECT_NE(out.find("example=[example=]\n\nID=b\n"), std::string::npos);
  EXPECT_EQ(read_text(out).entries.size(), 2u);
}

TEST(LGLexText, UnrepresentableValues) {
  auto e = minimal("a");
  e.lexical_info.lemma = "x\"y";
  EXPECT_THROW(write_text({{e}}), ValueContainsQuote);
  e.lexical_info.lemma = "x\ny";
  EXPECT_THROW(write_text({{e}}), ValueError);
  e = minimal("a");
  e.args.push_back({0, "", {{"NP", {{"cat", "x"}}, {}, {}, {}}}});
  EXPECT_THROW(write_text({{e}}), ValueError);
}

TEST(LGLexText, ReadsGolden) {
  const auto lex = read_text(golden());
  ASSERT_EQ(lex.entries.size(), 1u);
  const auto& e = lex.entries[0];
  EXPECT_EQ(e.id, "V_38GL_33");
  EXPECT_EQ(e.lexical_info.lemma, "βγάζω");
  EXPECT_EQ(e.lexical_info.pfx_verbs, (std::vector<std::string>{"ξαναβγάζω", "παραβγάζω"}));
  ASSERT_EQ(e.lexical_info.locatifs.size(), 2u);
  EXPECT_EQ(e.lexical_info.locatifs[1], (Locatif{3, {"σε"}}));
  ASSERT_EQ(e.args.size(), 3u);
  EXPECT_EQ(e.args[0].dists[0].features, (std::vector<Feature>{{"hum", "true"}}));
  EXPECT_EQ(e.args[2].dists[0].origins, (std::vector<std::string>{"N2 =: Nconc"}));
  EXPECT_EQ(e.constructions.absolute.size(), 3u);
  EXPECT_EQ(e.constructions.relative.size(), 1u);
  EXPECT_FALSE(e.example);
  EXPECT_EQ(write_text(lex), golden());
}

TEST(LGLexText, SyntaxErrors) {
  const std::string g = golden();
  EXPECT_THROW(read_text(g.substr(0, g.size() - 1)), SyntaxError);
  EXPECT_THROW(read_text(g.substr(0, g.size() / 2)), SyntaxError);
  EXPECT_THROW(read_text("ID=x\nargs=()\n"), SyntaxError);
  try {
    read_text("ID=x\nlexical-info=[cat=\"verb\"\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(read_field("a=[b=\"c\""), SyntaxError);
  EXPECT_THROW(read_field("a=\"c"), SyntaxError);
}

TEST(LGLexText, FieldRoundTrip) {
  const LGLexField f{"r", LGLexValue::Record({{"s", LGLexValue::Str("é,[]()=")},
                                              {"e", LGLexValue::Empty()},
                                              {"l", LGLexValue::List({{"x", LGLexValue::Str("")}})}})};
  EXPECT_EQ(write_field(f), "r=[s=\"é,[]()=\",e=,l=(x=\"\")]");
  EXPECT_EQ(read_field(write_field(f)), f);
}

TEST(LGLexProperty, RandomLexiconsRoundTrip) {
  std::mt19937 rng(42);
  for (int i = 0; i < 300; ++i) {
    const auto lex = testing::random_lexicon(rng);
    const auto text = write_text(lex);
    ASSERT_EQ(read_text(text), lex) << text;
    EXPECT_EQ(write_text(read_text(text)), text);
    for (const auto& e : lex.entries) EXPECT_EQ(from_sections(e.id, to_sections(e)), e);
  }
}

TEST(LGLexXml, Shape) {
  EXPECT_EQ(write_xml({}), "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<lglex/>\n");
  auto e = minimal("V_T_1");
  e.example = "a<b & \"c\"";
  const auto xml = write_xml({{e}});
  EXPECT_NE(xml.find("<entry id=\"V_T_1\">"), std::string::npos);
  EXPECT_NE(xml.find("<lexical-info cat=\"verb\">"), std::string::npos);
  EXPECT_NE(xml.find("<construction>true::N0 V N1</construction>"), std::string::npos);
  EXPECT_NE(xml.find("a&lt;b &amp; &quot;c&quot;"), std::string::npos);
  e.lexical_info.lemma = std::string("\x01");
  EXPECT_THROW(write_xml({{e}}), ValueError);
  e.lexical_info.lemma = std::string("\xff");
  EXPECT_THROW(write_xml({{e}}), ValueError);
}

TEST(LGLexXml, GoldenHasOneElementPerValue) {
  const auto xml = write_xml(read_text(golden()));
  std::size_t n = 0;
  for (std::size_t p = 0; (p = xml.find("<orig>", p)) != std::string::npos; ++p) ++n;
  EXPECT_EQ(n, 3u);
  EXPECT_NE(xml.find("<locatif id=\"2\">"), std::string::npos);
}

}  // namespace
}  // namespace lgc
