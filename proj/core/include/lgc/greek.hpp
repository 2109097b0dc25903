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

#ifndef LGC_GREEK_HPP_
#define LGC_GREEK_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "lgc/label.hpp"

namespace lgc {

enum class Case { kNominative, kGenitive, kAccusative, kDative };
enum class Mood { kIndicative, kSubjunctive };
enum class VerbClass { kTransitive, kCopula };

std::string_view to_string(Case c);
std::string_view to_string(Mood m);
std::optional<Case> parse_case(std::string_view s);
std::optional<Mood> parse_mood(std::string_view s);
Case case_from_tag(CaseTag tag);

// Knowledge kept outside the tables: the case each preposition governs, the
// mood each conjunction selects, which verbs are transitive or copulas, and
// the known clitic forms.
class Lexicons {
 public:
  // Reads prep_case.tsv, conj_mood.tsv, verb_classes.tsv and clitics.tsv from
  // `dir`; missing files leave the matching table empty.
  static Lexicons load_dir(const std::filesystem::path& dir);

  void load_prep_case(std::string_view text);
  void load_conj_mood(std::string_view text);
  void load_verb_classes(std::string_view text);
  void load_clitics(std::string_view text);

  void set_prep_case(const std::string& prep, Case c) { prep_case_[prep] = c; }
  void set_conj_mood(const std::string& conj, Mood m) { conj_mood_[conj] = m; }
  void set_verb_class(const std::string& lemma, VerbClass vc);
  void add_clitic(const std::string& form) { clitics_.insert(form); }

  // Prepositions not listed govern the accusative.
  Case prep_case(std::string_view prep) const;
  bool knows_preposition(std::string_view prep) const;
  std::optional<Mood> conj_mood(std::string_view conj) const;
  bool is_transitive(std::string_view lemma) const;
  bool is_copula(std::string_view lemma) const;
  bool knows_clitic(std::string_view form) const;
  bool has_clitics() const { return !clitics_.empty(); }

 private:
  std::map<std::string, Case, std::less<>> prep_case_;
  std::map<std::string, Mood, std::less<>> conj_mood_;
  std::set<std::string, std::less<>> transitive_;
  std::set<std::string, std::less<>> copula_;
  std::set<std::string, std::less<>> clitics_;
};

enum class CaseRule {
  kExplicitTag,  // tag glued to the noun: "N1nominatif"
  kPreposition,  // a: prepositions govern their case, accusative by default
  kSubject,      // b: N0 is nominative
  kObject,       // c: N1 of a transitive verb is accusative, of a copula nominative
  kDefault,      // nothing applied; accusative
};

std::string_view to_string(CaseRule r);

struct CaseResolution {
  Case value;
  CaseRule rule;
  bool defaulted = false;
};

// Where a noun position sits in a construction: the noun itself and the
// preposition governing it, if any ("" for generic Prep or Loc).
struct NounSite {
  NounRef noun;
  std::optional<std::string> governor;
};
std::optional<NounSite> locate_noun(const Construction& c, int position);

// Case of argument `position`. An explicit tag wins; then rules a, b, c
// in that order. Throws ParseError if the position does not occur.
CaseResolution resolve_case(const Construction& c, int position, std::string_view verb_lemma,
                            const Lexicons& lex);

// Throws UnknownConjunction.
Mood lookup_mood(std::string_view conjunction, const Lexicons& lex);

// Citation form of a prefixed verb: plain concatenation, no hyphen.
// Throws std::invalid_argument when either side is empty.
std::string apply_prefix(std::string_view form, std::string_view prefix);

}  // namespace lgc

#endif  // LGC_GREEK_HPP_
