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

#include "lgc/greek.hpp"

#include <stdexcept>

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {

std::string_view to_string(Case c) {
  switch (c) {
    case Case::kNominative: return "nominative";
    case Case::kGenitive: return "genitive";
    case Case::kAccusative: return "accusative";
    case Case::kDative: return "dative";
  }
  return "?";
}

std::string_view to_string(Mood m) { return m == Mood::kIndicative ? "indicative" : "subjunctive"; }

std::optional<Case> parse_case(std::string_view s) {
  for (Case c : {Case::kNominative, Case::kGenitive, Case::kAccusative, Case::kDative}) {
    if (to_string(c) == s) return c;
  }
  if (auto tag = parse_case_tag(s)) return case_from_tag(*tag);
  return std::nullopt;
}

std::optional<Mood> parse_mood(std::string_view s) {
  if (s == "indicative") return Mood::kIndicative;
  if (s == "subjunctive") return Mood::kSubjunctive;
  return std::nullopt;
}

Case case_from_tag(CaseTag tag) {
  switch (tag) {
    case CaseTag::kNominatif: return Case::kNominative;
    case CaseTag::kGenitif: return Case::kGenitive;
    case CaseTag::kAccusatif: return Case::kAccusative;
    case CaseTag::kDatif: return Case::kDative;
  }
  return Case::kAccusative;
}

std::string_view to_string(CaseRule r) {
  switch (r) {
    case CaseRule::kExplicitTag: return "tag";
    case CaseRule::kPreposition: return "preposition";
    case CaseRule::kSubject: return "subject";
    case CaseRule::kObject: return "object";
    case CaseRule::kDefault: return "default";
  }
  return "?";
}

namespace {

std::vector<text::Record> records(std::string_view data, std::size_t min_fields, std::string_view what) {
  auto recs = text::parse_records(data);
  for (const auto& r : recs) {
    if (r.fields.size() < min_fields) {
      throw ConfigError(std::string(what) + " line " + std::to_string(r.line) + ": too few fields");
    }
  }
  return recs;
}

template <class F>
void load_optional(const std::filesystem::path& path, F&& load) {
  if (!std::filesystem::exists(path)) return;
  try {
    load(text::read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace

Lexicons Lexicons::load_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  Lexicons lex;
  load_optional(dir / "prep_case.tsv", [&](std::string_view d) { lex.load_prep_case(d); });
  load_optional(dir / "conj_mood.tsv", [&](std::string_view d) { lex.load_conj_mood(d); });
  load_optional(dir / "verb_classes.tsv", [&](std::string_view d) { lex.load_verb_classes(d); });
  load_optional(dir / "clitics.tsv", [&](std::string_view d) { lex.load_clitics(d); });
  return lex;
}

void Lexicons::load_prep_case(std::string_view data) {
  for (const auto& r : records(data, 2, "prep_case")) {
    auto c = parse_case(text::trim(r.fields[1]));
    if (!c) throw ConfigError("prep_case line " + std::to_string(r.line) + ": unknown case '" + r.fields[1] + "'");
    set_prep_case(std::string(text::trim(r.fields[0])), *c);
  }
}

void Lexicons::load_conj_mood(std::string_view data) {
  for (const auto& r : records(data, 2, "conj_mood")) {
    auto m = parse_mood(text::trim(r.fields[1]));
    if (!m) throw ConfigError("conj_mood line " + std::to_string(r.line) + ": unknown mood '" + r.fields[1] + "'");
    set_conj_mood(std::string(text::trim(r.fields[0])), *m);
  }
}

void Lexicons::load_verb_classes(std::string_view data) {
  for (const auto& r : records(data, 2, "verb_classes")) {
    const auto cls = text::trim(r.fields[1]);
    if (cls == "transitive") {
      set_verb_class(std::string(text::trim(r.fields[0])), VerbClass::kTransitive);
    } else if (cls == "copula") {
      set_verb_class(std::string(text::trim(r.fields[0])), VerbClass::kCopula);
    } else {
      throw ConfigError("verb_classes line " + std::to_string(r.line) + ": unknown class '" + r.fields[1] + "'");
    }
  }
}

void Lexicons::load_clitics(std::string_view data) {
  for (const auto& r : records(data, 1, "clitics")) add_clitic(std::string(text::trim(r.fields[0])));
}

void Lexicons::set_verb_class(const std::string& lemma, VerbClass vc) {
  transitive_.erase(lemma);
  copula_.erase(lemma);
  (vc == VerbClass::kTransitive ? transitive_ : copula_).insert(lemma);
}

Case Lexicons::prep_case(std::string_view prep) const {
  auto it = prep_case_.find(prep);
  return it == prep_case_.end() ? Case::kAccusative : it->second;
}

bool Lexicons::knows_preposition(std::string_view prep) const { return prep_case_.find(prep) != prep_case_.end(); }

std::optional<Mood> Lexicons::conj_mood(std::string_view conj) const {
  auto it = conj_mood_.find(conj);
  if (it == conj_mood_.end()) return std::nullopt;
  return it->second;
}

bool Lexicons::is_transitive(std::string_view lemma) const { return transitive_.find(lemma) != transitive_.end(); }
bool Lexicons::is_copula(std::string_view lemma) const { return copula_.find(lemma) != copula_.end(); }
bool Lexicons::knows_clitic(std::string_view form) const { return clitics_.find(form) != clitics_.end(); }

namespace {

std::optional<NounSite> find_in(const std::vector<ConstructionToken>& tokens, int position) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& v = tokens[i].value;
    if (const auto* n = std::get_if<NounToken>(&v); n && n->noun.position == position) {
      NounSite site{n->noun, std::nullopt};
      if (i > 0) {
        if (const auto* p = std::get_if<PrepToken>(&tokens[i - 1].value)) site.governor = p->word;
      }
      return site;
    }
    if (const auto* l = std::get_if<LocToken>(&v); l && l->noun.position == position) {
      return NounSite{l->noun, std::string()};
    }
    if (const auto* g = std::get_if<OptionalGroup>(&v)) {
      if (auto site = find_in(g->tokens, position)) return site;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<NounSite> locate_noun(const Construction& c, int position) { return find_in(c.tokens, position); }

CaseResolution resolve_case(const Construction& c, int position, std::string_view verb_lemma,
                            const Lexicons& lex) {
  auto site = locate_noun(c, position);
  if (!site) {
    throw ParseError("N" + std::to_string(position) + " does not occur in '" + render_label(c) + "'");
  }
  if (site->noun.case_tag) return {case_from_tag(*site->noun.case_tag), CaseRule::kExplicitTag, false};
  if (site->governor) return {lex.prep_case(*site->governor), CaseRule::kPreposition, false};
  if (position == 0) return {Case::kNominative, CaseRule::kSubject, false};
  if (position == 1) {
    if (lex.is_copula(verb_lemma)) return {Case::kNominative, CaseRule::kObject, false};
    if (lex.is_transitive(verb_lemma)) return {Case::kAccusative, CaseRule::kObject, false};
  }
  return {Case::kAccusative, CaseRule::kDefault, true};
}

Mood lookup_mood(std::string_view conjunction, const Lexicons& lex) {
  if (auto m = lex.conj_mood(conjunction)) return *m;
  throw UnknownConjunction("no mood known for conjunction '" + std::string(conjunction) + "'");
}

std::string apply_prefix(std::string_view form, std::string_view prefix) {
  while (!prefix.empty() && prefix.back() == '-') prefix.remove_suffix(1);
  if (form.empty() || prefix.empty()) throw std::invalid_argument("apply_prefix: empty form or prefix");
  std::string out(prefix);
  out += form;
  return out;
}

}  // namespace lgc
