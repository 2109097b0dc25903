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

#ifndef LGC_LGLEX_HPP_
#define LGC_LGLEX_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgc {

// ---------------------------------------------------------------------------
// Generic value tree of the LGLex text syntax:
//   Record  name=[f1,f2,...]
//   List    name=(i1,i2,...)
//   Str     name="value"
//   Empty   name=

struct LGLexField;

struct LGLexValue {
  enum class Type { kStr, kRecord, kList, kEmpty };

  Type type = Type::kEmpty;
  std::string str;
  std::vector<LGLexField> items;

  static LGLexValue Str(std::string s);
  static LGLexValue Record(std::vector<LGLexField> fields);
  static LGLexValue List(std::vector<LGLexField> items);
  static LGLexValue Empty();
};

struct LGLexField {
  std::string name;
  LGLexValue value;
};

bool operator==(const LGLexValue& a, const LGLexValue& b);
bool operator==(const LGLexField& a, const LGLexField& b);

// ---------------------------------------------------------------------------
// Typed entries.

struct LexicalFieldValue {
  std::string name;    // "Vpp", "V-adj", "Npred", ...
  std::string suffix;  // "τος" for "V-adj, Sfx = τος"
  std::string role;
  std::vector<std::string> forms;
  friend bool operator==(const LexicalFieldValue&, const LexicalFieldValue&) = default;
};

struct Locatif {
  int arg = 0;
  std::vector<std::string> preps;
  friend bool operator==(const Locatif&, const Locatif&) = default;
};

struct LexicalInfo {
  std::string cat = "verb";
  std::string lemma;
  std::vector<LexicalFieldValue> fields;
  std::vector<std::string> pfx_verbs;
  std::vector<std::string> prepositions;
  std::vector<Locatif> locatifs;
  friend bool operator==(const LexicalInfo&, const LexicalInfo&) = default;
};

struct Feature {
  std::string key;
  std::string value;
  friend bool operator==(const Feature&, const Feature&) = default;
};

// One admissible realization of an argument, with the labels it came from.
struct ArgDistribution {
  std::string cat;                // "NP", "S", "V-n"
  std::vector<Feature> features;  // hum="true", conj="ότι", mood="indicative", ...
  std::vector<std::string> introd_prep;
  std::vector<std::string> introd_loc;
  std::vector<std::string> origins;
  friend bool operator==(const ArgDistribution&, const ArgDistribution&) = default;
};

struct ArgConst {
  int pos = 0;
  std::string role;  // empty when the argument has no role property
  std::vector<ArgDistribution> dists;
  friend bool operator==(const ArgConst&, const ArgConst&) = default;
};

struct AllConstructions {
  std::vector<std::string> absolute;  // "true::..." or "o::..."
  std::vector<std::string> relative;
  friend bool operator==(const AllConstructions&, const AllConstructions&) = default;
};

struct LGLexEntry {
  std::string id;  // category_table_row, "_pfx<k>" appended for prefix clones
  LexicalInfo lexical_info;
  std::vector<ArgConst> args;
  AllConstructions constructions;
  std::optional<std::string> example;  // unset renders "example=[example=]"
  friend bool operator==(const LGLexEntry&, const LGLexEntry&) = default;
};

struct LGLexLexicon {
  std::vector<LGLexEntry> entries;
  friend bool operator==(const LGLexLexicon&, const LGLexLexicon&) = default;
};

// The four sections of an entry, in output order.
std::vector<LGLexField> to_sections(const LGLexEntry& entry);
// Inverse of to_sections. Throws ValueError on a shape mismatch.
LGLexEntry from_sections(std::string id, const std::vector<LGLexField>& sections);

// ---------------------------------------------------------------------------
// Text and XML forms.

// "ID=<id>" then one line per section; a blank line between entries; final
// newline. Throws ValueContainsQuote / ValueError on unrepresentable values.
std::string write_text(const LGLexLexicon& lexicon);
std::string write_field(const LGLexField& field);

// Throws SyntaxError with line and column.
LGLexLexicon read_text(std::string_view data);
LGLexField read_field(std::string_view line);

std::string write_xml(const LGLexLexicon& lexicon);

}  // namespace lgc

#endif  // LGC_LGLEX_HPP_
