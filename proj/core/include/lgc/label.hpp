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

#ifndef LGC_LABEL_HPP_
#define LGC_LABEL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Property labels: the column headings of a Lexicon-Grammar table, parsed
// into an AST and printed back in canonical spelling.
namespace lgc {

enum class Trait { kHum, kNonHum, kConc, kPc, kPlObl, kArgent, kTransport };
enum class CaseTag { kNominatif, kGenitif, kAccusatif, kDatif };
enum class Role { kSource, kDestination, kApparition, kDisparition, kInstrument, kMoyenDestination };
enum class Field { kVn, kVadj, kVpp, kVP, kNpred, kVsup, kN0VsupNpred };

std::string_view to_string(Trait t);    // "hum", "-hum", "pl obl", ...
std::string_view to_string(CaseTag c);  // "genitif", ...
std::string_view to_string(Role r);     // "moyen-destination", ...
std::string_view to_string(Field f);    // "V-adj", "N0 Vsup Npred", ...

std::optional<Trait> parse_trait(std::string_view s);
std::optional<CaseTag> parse_case_tag(std::string_view s);
std::optional<Role> parse_role(std::string_view s);

// N0..N3, with an optional semantic trait and case tag glued on:
// "N2humgenitif".
struct NounRef {
  int position = 0;
  std::optional<Trait> trait;
  std::optional<CaseTag> case_tag;
  friend bool operator==(const NounRef&, const NounRef&) = default;
};
std::string render(const NounRef& n);

// --- distribution values --------------------------------------------------

struct PlainNP {
  friend bool operator==(const PlainNP&, const PlainNP&) = default;
};
struct NounClass {
  Trait trait;
  friend bool operator==(const NounClass&, const NounClass&) = default;
};
// Preverbal clitic pronoun, optionally with the admissible forms spelled out.
struct Ppv {
  std::vector<std::string> clitics;  // empty: no enumeration
  friend bool operator==(const Ppv&, const Ppv&) = default;
};
struct VerbalNoun {
  friend bool operator==(const VerbalNoun&, const VerbalNoun&) = default;
};

enum class Nominalizer { kNone, kTo, kToGegonos };

// Finite complement clause. Pcomp0/Pcomp1 mark a complement clause standing
// in argument position 0/1; otherwise the introducing conjunction is named.
struct CompletiveSpec {
  enum class Marker { kPcomp, kConjunction };
  Marker marker = Marker::kConjunction;
  int position = 0;         // kPcomp only
  std::string conjunction;  // kConjunction only
  bool controlled_by_subject = false;
  Nominalizer nominalizer = Nominalizer::kNone;
  friend bool operator==(const CompletiveSpec&, const CompletiveSpec&) = default;
};

using DistValue = std::variant<PlainNP, NounClass, Ppv, VerbalNoun, CompletiveSpec>;

// --- construction tokens --------------------------------------------------

enum class VerbForm { kV, kVpp, kVsup };

struct NounToken {
  NounRef noun;
  friend bool operator==(const NounToken&, const NounToken&) = default;
};
struct VerbToken {
  std::string prefix;  // "εκ" in "εκ-V"
  VerbForm form = VerbForm::kV;
  friend bool operator==(const VerbToken&, const VerbToken&) = default;
};
// A preposition; an empty word is the generic "Prep".
struct PrepToken {
  std::string word;
  friend bool operator==(const PrepToken&, const PrepToken&) = default;
};
struct LocToken {
  NounRef noun;
  std::optional<Role> role;
  friend bool operator==(const LocToken&, const LocToken&) = default;
};
struct RoleToken {
  Role role;
  friend bool operator==(const RoleToken&, const RoleToken&) = default;
};
struct FieldToken {
  Field field;
  std::optional<CaseTag> case_tag;
  friend bool operator==(const FieldToken&, const FieldToken&) = default;
};
struct WordToken {
  std::string word;
  friend bool operator==(const WordToken&, const WordToken&) = default;
};

struct ConstructionToken;
// "(E+Loc N3 destination)": the group may be erased.
struct OptionalGroup {
  std::vector<ConstructionToken> tokens;
};
bool operator==(const OptionalGroup& a, const OptionalGroup& b);

struct ConstructionToken {
  std::variant<NounToken, VerbToken, PrepToken, LocToken, RoleToken, FieldToken, WordToken, OptionalGroup> value;
  friend bool operator==(const ConstructionToken&, const ConstructionToken&) = default;
};

// --- labels ---------------------------------------------------------------

// "N2 =: Nhum". A bare completive marker ("Pcomp0", "Pότι") has no arg.
struct Distribution {
  std::optional<NounRef> arg;
  DistValue value;
  friend bool operator==(const Distribution&, const Distribution&) = default;
};
// "Loc N2 =: από N2 source", "Loc N2 =: (με+σε) N2 moyen-destination".
struct LocPrepDistribution {
  NounRef arg;
  std::vector<std::string> preps;
  std::optional<Role> role;
  friend bool operator==(const LocPrepDistribution&, const LocPrepDistribution&) = default;
};
// "N0 destination".
struct RoleAssignment {
  NounRef arg;
  Role role;
  friend bool operator==(const RoleAssignment&, const RoleAssignment&) = default;
};
// "N0 V N1 Loc N2 source". Holds exactly one verb token.
struct Construction {
  std::vector<ConstructionToken> tokens;
  friend bool operator==(const Construction&, const Construction&) = default;
};
// "N1 =: Ppv", "N1 = Ppv", "Loc N2 = Ppv =: (μου+μας+...)".
struct RelativeTransform {
  bool locative = false;
  NounRef lhs;
  bool equality = false;  // "=" rather than "=:"
  Ppv rhs;
  friend bool operator==(const RelativeTransform&, const RelativeTransform&) = default;
};
// "με N".
struct ExtraComplement {
  std::string prep;
  std::optional<Trait> head_trait;
  friend bool operator==(const ExtraComplement&, const ExtraComplement&) = default;
};
// "V-adj", "V-adj, Sfx = τος", "V-n instrument", "N0 Vsup Npred".
struct LexicalField {
  Field field;
  std::string suffix;
  std::optional<Role> role;
  friend bool operator==(const LexicalField&, const LexicalField&) = default;
};
// "από-V": the prefixed verb is a further entry.
struct EntryFormation {
  std::string prefix;
  friend bool operator==(const EntryFormation&, const EntryFormation&) = default;
};
// "X-V": etymology only.
struct EtymologicalMark {
  friend bool operator==(const EtymologicalMark&, const EtymologicalMark&) = default;
};

using PropertyLabel = std::variant<Distribution, LocPrepDistribution, RoleAssignment, Construction,
                                   RelativeTransform, ExtraComplement, LexicalField, EntryFormation,
                                   EtymologicalMark>;

// Row numbers of the structure inventory a label belongs to; combinations
// such as "N0 =: V-n" carry two rows ({1, 7}).
struct LabelKind {
  std::vector<int> rows;
  friend bool operator==(const LabelKind&, const LabelKind&) = default;
  std::string to_string() const;  // "1+7"
};

// Parses one heading. Throws LexError (including HomoglyphError),
// ParseError or AmbiguityError.
PropertyLabel parse_label(std::string_view text);
std::optional<PropertyLabel> try_parse_label(std::string_view text);

std::string render_label(const PropertyLabel& label);
LabelKind classify_label(const PropertyLabel& label);

// Name of the AST alternative, as used by extraction-script directives:
// "distribution", "construction", "lexical-field", ...
std::string_view kind_name(const PropertyLabel& label);

// render_label(parse_label(text)) when the text parses.
std::optional<std::string> canonical_label(std::string_view text);

// The single verb token of a construction.
const VerbToken& construction_verb(const Construction& c);

// Open-class words a label mentions; used to check labels against lexicons.
struct LabelWords {
  std::vector<std::string> prepositions;
  std::vector<std::string> conjunctions;
  std::vector<std::string> clitics;
};
LabelWords collect_words(const PropertyLabel& label);

}  // namespace lgc

#endif  // LGC_LABEL_HPP_
