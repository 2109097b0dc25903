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

#include "lgc/label.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "label_lexer.hpp"
#include "lgc/error.hpp"
#include "lgc/utf8.hpp"

namespace lgc {

using detail::Token;
using detail::TokenType;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::array<std::pair<Trait, std::string_view>, 7> kTraits = {{
    {Trait::kHum, "hum"},
    {Trait::kNonHum, "-hum"},
    {Trait::kConc, "conc"},
    {Trait::kPc, "pc"},
    {Trait::kPlObl, "pl obl"},
    {Trait::kArgent, "argent"},
    {Trait::kTransport, "transport"},
}};

constexpr std::array<std::pair<CaseTag, std::string_view>, 4> kCaseTags = {{
    {CaseTag::kNominatif, "nominatif"},
    {CaseTag::kGenitif, "genitif"},
    {CaseTag::kAccusatif, "accusatif"},
    {CaseTag::kDatif, "datif"},
}};

constexpr std::array<std::pair<Role, std::string_view>, 6> kRoles = {{
    {Role::kSource, "source"},
    {Role::kDestination, "destination"},
    {Role::kApparition, "apparition"},
    {Role::kDisparition, "disparition"},
    {Role::kInstrument, "instrument"},
    {Role::kMoyenDestination, "moyen-destination"},
}};

constexpr std::array<std::pair<Field, std::string_view>, 7> kFields = {{
    {Field::kVn, "V-n"},
    {Field::kVadj, "V-adj"},
    {Field::kVpp, "Vpp"},
    {Field::kVP, "VP"},
    {Field::kNpred, "Npred"},
    {Field::kVsup, "Vsup"},
    {Field::kN0VsupNpred, "N0 Vsup Npred"},
}};

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return {};
}

template <class E, std::size_t N>
std::optional<E> value_of(const std::array<std::pair<E, std::string_view>, N>& table,
                          std::string_view s) {
  for (const auto& [e, name] : table) {
    if (name == s) return e;
  }
  return std::nullopt;
}

bool greek_word(std::string_view w) {
  try {
    return detail::is_greek_word(utf8::decode(w));
  } catch (const LexError&) {
    return false;
  }
}

// "N2humgenitif" -> {2, hum, genitif}. Position required.
std::optional<NounRef> noun_ref_word(std::string_view w) {
  if (w.size() < 2 || w[0] != 'N' || w[1] < '0' || w[1] > '3') return std::nullopt;
  NounRef n;
  n.position = w[1] - '0';
  std::string_view rest = w.substr(2);
  if (rest.empty()) return n;
  for (const auto& [tag, name] : kCaseTags) {
    if (rest == name) {
      n.case_tag = tag;
      return n;
    }
  }
  for (const auto& [trait, name] : kTraits) {
    if (trait == Trait::kPlObl || !rest.starts_with(name)) continue;
    std::string_view tail = rest.substr(name.size());
    if (tail.empty()) {
      n.trait = trait;
      return n;
    }
    if (auto c = value_of(kCaseTags, tail)) {
      n.trait = trait;
      n.case_tag = c;
      return n;
    }
  }
  return std::nullopt;
}

bool plain_position(const NounRef& n) { return !n.trait && !n.case_tag; }

std::optional<Trait> noun_class_word(std::string_view w) {
  if (w.size() < 2 || w[0] != 'N') return std::nullopt;
  auto t = value_of(kTraits, w.substr(1));
  if (t == Trait::kPlObl) return std::nullopt;
  return t;
}

std::optional<VerbToken> verb_word(std::string_view w) {
  if (w == "V") return VerbToken{"", VerbForm::kV};
  if (w == "Vpp") return VerbToken{"", VerbForm::kVpp};
  if (w == "Vsup") return VerbToken{"", VerbForm::kVsup};
  for (auto [tail, form] : {std::pair<std::string_view, VerbForm>{"-Vpp", VerbForm::kVpp},
                            std::pair<std::string_view, VerbForm>{"-V", VerbForm::kV}}) {
    if (w.size() > tail.size() && w.ends_with(tail)) {
      std::string_view prefix = w.substr(0, w.size() - tail.size());
      if (greek_word(prefix)) return VerbToken{std::string(prefix), form};
    }
  }
  return std::nullopt;
}

// "V-adjaccusatif", "V-n".
std::optional<FieldToken> field_word(std::string_view w) {
  for (Field f : {Field::kVadj, Field::kVn}) {
    std::string_view name = name_of(kFields, f);
    if (!w.starts_with(name)) continue;
    std::string_view rest = w.substr(name.size());
    if (rest.empty()) return FieldToken{f, std::nullopt};
    if (auto c = value_of(kCaseTags, rest)) return FieldToken{f, c};
  }
  return std::nullopt;
}

class Cursor {
 public:
  explicit Cursor(const std::vector<Token>& tokens, std::size_t begin = 0, std::size_t end = std::string::npos)
      : tokens_(tokens), pos_(begin), end_(std::min(end, tokens.size())) {}

  bool done() const { return pos_ >= end_; }
  std::size_t remaining() const { return done() ? 0 : end_ - pos_; }
  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < end_ ? &tokens_[pos_ + ahead] : nullptr;
  }
  bool peek_is(TokenType t, std::size_t ahead = 0) const {
    const Token* tok = peek(ahead);
    return tok && tok->type == t;
  }
  bool peek_word(std::string_view w, std::size_t ahead = 0) const {
    const Token* tok = peek(ahead);
    return tok && tok->type == TokenType::kWord && tok->text == w;
  }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(TokenType t) {
    if (!peek_is(t)) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    if (!peek_word(w)) return false;
    ++pos_;
    return true;
  }
  const std::string* word() {
    if (!peek_is(TokenType::kWord)) return nullptr;
    return &tokens_[pos_++].text;
  }
  std::size_t position() const { return pos_; }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_;
  std::size_t end_;
};

// "(a+b+c)" after the opening parenthesis has been consumed.
std::optional<std::vector<std::string>> word_list(Cursor& c) {
  std::vector<std::string> out;
  while (true) {
    const std::string* w = c.word();
    if (!w) return std::nullopt;
    out.push_back(*w);
    if (c.accept(TokenType::kRParen)) break;
    if (!c.accept(TokenType::kPlus)) return std::nullopt;
  }
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  return out;
}

// --- per-kind recognizers. Each returns nullopt when the tokens are not of
// its kind; parse_label reports an error when none (or several) match.

std::optional<PropertyLabel> as_etymological(const std::vector<Token>& t) {
  if (t.size() == 1 && t[0].type == TokenType::kWord && t[0].text == "X-V") return EtymologicalMark{};
  return std::nullopt;
}

std::optional<PropertyLabel> as_entry_formation(const std::vector<Token>& t) {
  if (t.size() != 1 || t[0].type != TokenType::kWord) return std::nullopt;
  auto v = verb_word(t[0].text);
  if (!v || v->form != VerbForm::kV || v->prefix.empty()) return std::nullopt;
  return EntryFormation{v->prefix};
}

std::optional<PropertyLabel> as_lexical_field(const std::vector<Token>& t) {
  Cursor c(t);
  if (c.remaining() == 3 && c.peek_word("N0") && c.peek_word("Vsup", 1) && c.peek_word("Npred", 2)) {
    return LexicalField{Field::kN0VsupNpred, "", std::nullopt};
  }
  const std::string* w = c.word();
  if (!w) return std::nullopt;
  auto f = value_of(kFields, *w);
  if (!f || *f == Field::kN0VsupNpred) return std::nullopt;
  LexicalField out{*f, "", std::nullopt};
  if (c.done()) return out;
  if (c.accept(TokenType::kComma)) {
    if (!c.accept_word("Sfx") || !c.accept(TokenType::kEquals)) return std::nullopt;
    const std::string* sfx = c.word();
    if (!sfx || !c.done()) return std::nullopt;
    out.suffix = *sfx;
    return out;
  }
  const std::string* role = c.word();
  if (!role || !c.done()) return std::nullopt;
  out.role = parse_role(*role);
  if (!out.role) return std::nullopt;
  return out;
}

std::optional<PropertyLabel> as_extra_complement(const std::vector<Token>& t) {
  if (t.size() != 2 || t[0].type != TokenType::kWord || t[1].type != TokenType::kWord) return std::nullopt;
  if (!greek_word(t[0].text)) return std::nullopt;
  if (t[1].text == "N") return ExtraComplement{t[0].text, std::nullopt};
  if (auto trait = noun_class_word(t[1].text)) return ExtraComplement{t[0].text, trait};
  return std::nullopt;
}

std::optional<PropertyLabel> as_role_assignment(const std::vector<Token>& t) {
  if (t.size() != 2 || t[0].type != TokenType::kWord || t[1].type != TokenType::kWord) return std::nullopt;
  auto n = noun_ref_word(t[0].text);
  auto r = parse_role(t[1].text);
  if (!n || !r) return std::nullopt;
  return RoleAssignment{*n, *r};
}

// Completive value starting at the cursor; consumes to the end.
std::optional<CompletiveSpec> completive(Cursor& c) {
  CompletiveSpec spec;
  if (c.accept_word("το")) {
    spec.nominalizer = c.accept_word("γεγονός") ? Nominalizer::kToGegonos : Nominalizer::kTo;
  }
  const std::string* w = c.word();
  if (!w) return std::nullopt;
  if (*w == "Pcomp0" || *w == "Pcomp1") {
    spec.marker = CompletiveSpec::Marker::kPcomp;
    spec.position = (*w)[5] - '0';
    if (!c.done()) return std::nullopt;
    return spec;
  }
  spec.marker = CompletiveSpec::Marker::kConjunction;
  if (w->size() > 1 && (*w)[0] == 'P' && greek_word(std::string_view(*w).substr(1))) {
    spec.conjunction = w->substr(1);
    if (!c.done()) return std::nullopt;
    return spec;
  }
  if (greek_word(*w) && c.accept_word("V0") && c.done()) {
    spec.conjunction = *w;
    spec.controlled_by_subject = true;
    return spec;
  }
  return std::nullopt;
}

std::optional<PropertyLabel> as_distribution(const std::vector<Token>& t) {
  Cursor c(t);
  Distribution d;
  if (!c.peek_is(TokenType::kAssign, 1)) {
    // Bare completive marker: "Pcomp0", "Pότι".
    auto spec = completive(c);
    if (!spec || spec->nominalizer != Nominalizer::kNone || spec->controlled_by_subject) return std::nullopt;
    d.value = *spec;
    return d;
  }
  const std::string* w = c.word();
  if (!w) return std::nullopt;
  d.arg = noun_ref_word(*w);
  if (!d.arg) return std::nullopt;
  c.accept(TokenType::kAssign);
  if (c.remaining() == 1 && c.peek_word("N")) {
    d.value = PlainNP{};
    return d;
  }
  if (c.remaining() == 1 && c.peek_word("V-n")) {
    d.value = VerbalNoun{};
    return d;
  }
  if (c.remaining() == 2 && c.peek_word("Npl") && c.peek_word("obl", 1)) {
    d.value = NounClass{Trait::kPlObl};
    return d;
  }
  if (c.remaining() == 1) {
    if (auto trait = noun_class_word(c.peek()->text)) {
      d.value = NounClass{*trait};
      return d;
    }
  }
  auto spec = completive(c);
  if (!spec) return std::nullopt;
  d.value = *spec;
  return d;
}

std::optional<PropertyLabel> as_loc_prep_distribution(const std::vector<Token>& t) {
  Cursor c(t);
  if (!c.accept_word("Loc")) return std::nullopt;
  const std::string* w = c.word();
  if (!w) return std::nullopt;
  auto head = noun_ref_word(*w);
  if (!head || !plain_position(*head) || !c.accept(TokenType::kAssign)) return std::nullopt;
  LocPrepDistribution out;
  if (c.accept(TokenType::kLParen)) {
    auto preps = word_list(c);
    if (!preps || preps->size() < 2) return std::nullopt;
    for (const auto& p : *preps) {
      if (!greek_word(p)) return std::nullopt;
    }
    out.preps = std::move(*preps);
  } else {
    const std::string* p = c.word();
    if (!p || !greek_word(*p)) return std::nullopt;
    out.preps = {*p};
  }
  const std::string* tail = c.word();
  if (!tail) return std::nullopt;
  auto arg = noun_ref_word(*tail);
  if (!arg || arg->position != head->position) return std::nullopt;
  out.arg = *arg;
  if (!c.done()) {
    const std::string* r = c.word();
    if (!r || !c.done()) return std::nullopt;
    out.role = parse_role(*r);
    if (!out.role) return std::nullopt;
  }
  return out;
}

std::optional<PropertyLabel> as_relative_transform(const std::vector<Token>& t) {
  Cursor c(t);
  RelativeTransform out;
  out.locative = c.accept_word("Loc");
  const std::string* w = c.word();
  if (!w) return std::nullopt;
  auto lhs = noun_ref_word(*w);
  if (!lhs) return std::nullopt;
  out.lhs = *lhs;
  if (c.accept(TokenType::kAssign)) {
    out.equality = false;
  } else if (c.accept(TokenType::kEquals)) {
    out.equality = true;
  } else {
    return std::nullopt;
  }
  if (!c.accept_word("Ppv")) return std::nullopt;
  if (c.done()) return out;
  if (!out.equality || !c.accept(TokenType::kAssign) || !c.accept(TokenType::kLParen)) return std::nullopt;
  auto clitics = word_list(c);
  if (!clitics || !c.done()) return std::nullopt;
  for (const auto& cl : *clitics) {
    if (!greek_word(cl)) return std::nullopt;
  }
  out.rhs.clitics = std::move(*clitics);
  return out;
}

bool construction_tokens(Cursor& c, std::vector<ConstructionToken>& out, bool nested) {
  while (!c.done()) {
    if (nested && c.peek_is(TokenType::kRParen)) return true;
    if (c.accept(TokenType::kLParen)) {
      if (!c.accept_word("E") || !c.accept(TokenType::kPlus)) return false;
      OptionalGroup group;
      if (!construction_tokens(c, group.tokens, true) || group.tokens.empty()) return false;
      if (!c.accept(TokenType::kRParen)) return false;
      out.push_back({std::move(group)});
      continue;
    }
    const std::string* w = c.word();
    if (!w) return false;
    if (*w == "Loc") {
      const std::string* n = c.word();
      if (!n) return false;
      auto noun = noun_ref_word(*n);
      if (!noun) return false;
      LocToken loc{*noun, std::nullopt};
      if (const Token* r = c.peek(); r && r->type == TokenType::kWord) {
        if (auto role = parse_role(r->text)) {
          loc.role = role;
          c.next();
        }
      }
      out.push_back({loc});
    } else if (auto noun = noun_ref_word(*w)) {
      out.push_back({NounToken{*noun}});
    } else if (auto verb = verb_word(*w)) {
      out.push_back({*verb});
    } else if (*w == "Prep") {
      out.push_back({PrepToken{""}});
    } else if (auto field = field_word(*w)) {
      out.push_back({*field});
    } else if (auto role = parse_role(*w)) {
      out.push_back({RoleToken{*role}});
    } else if (greek_word(*w)) {
      const Token* n = c.peek();
      if (n && n->type == TokenType::kWord && noun_ref_word(n->text)) {
        out.push_back({PrepToken{*w}});
      } else {
        out.push_back({WordToken{*w}});
      }
    } else {
      return false;
    }
  }
  return !nested;
}

void count_tokens(const std::vector<ConstructionToken>& tokens, int& verbs, int& nouns) {
  for (const auto& tok : tokens) {
    std::visit(Overloaded{
                   [&](const VerbToken&) { ++verbs; },
                   [&](const NounToken&) { ++nouns; },
                   [&](const LocToken&) { ++nouns; },
                   [&](const OptionalGroup& g) { count_tokens(g.tokens, verbs, nouns); },
                   [](const auto&) {},
               },
               tok.value);
  }
}

std::optional<PropertyLabel> as_construction(const std::vector<Token>& t) {
  if (t.size() < 2) return std::nullopt;
  Cursor c(t);
  Construction out;
  if (!construction_tokens(c, out.tokens, false)) return std::nullopt;
  int verbs = 0;
  int nouns = 0;
  count_tokens(out.tokens, verbs, nouns);
  if (verbs != 1 || nouns == 0) return std::nullopt;
  return out;
}

// --- rendering ------------------------------------------------------------

std::string render_words(const std::vector<std::string>& words) {
  std::string out = "(";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += "+";
    out += words[i];
  }
  return out + ")";
}

std::string render_verb(const VerbToken& v) {
  std::string out = v.prefix.empty() ? "" : v.prefix + "-";
  switch (v.form) {
    case VerbForm::kV: return out + "V";
    case VerbForm::kVpp: return out + "Vpp";
    case VerbForm::kVsup: return out + "Vsup";
  }
  return out;
}

std::string render_tokens(const std::vector<ConstructionToken>& tokens) {
  std::string out;
  for (const auto& tok : tokens) {
    if (!out.empty()) out += ' ';
    out += std::visit(
        Overloaded{
            [](const NounToken& n) { return render(n.noun); },
            [](const VerbToken& v) { return render_verb(v); },
            [](const PrepToken& p) { return p.word.empty() ? std::string("Prep") : p.word; },
            [](const LocToken& l) {
              std::string s = "Loc " + render(l.noun);
              if (l.role) s += " " + std::string(to_string(*l.role));
              return s;
            },
            [](const RoleToken& r) { return std::string(to_string(r.role)); },
            [](const FieldToken& f) {
              std::string s(to_string(f.field));
              if (f.case_tag) s += to_string(*f.case_tag);
              return s;
            },
            [](const WordToken& w) { return w.word; },
            [](const OptionalGroup& g) { return "(E+" + render_tokens(g.tokens) + ")"; },
        },
        tok.value);
  }
  return out;
}

std::string render_completive(const CompletiveSpec& s) {
  std::string out;
  if (s.nominalizer == Nominalizer::kTo) out += "το ";
  if (s.nominalizer == Nominalizer::kToGegonos) out += "το γεγονός ";
  if (s.marker == CompletiveSpec::Marker::kPcomp) return out + "Pcomp" + std::to_string(s.position);
  if (s.controlled_by_subject) return out + s.conjunction + " V0";
  return out + "P" + s.conjunction;
}

std::string render_value(const DistValue& v) {
  return std::visit(Overloaded{
                        [](const PlainNP&) { return std::string("N"); },
                        [](const NounClass& n) { return "N" + std::string(to_string(n.trait)); },
                        [](const Ppv& p) {
                          std::string s = "Ppv";
                          if (!p.clitics.empty()) s += " =: " + render_words(p.clitics);
                          return s;
                        },
                        [](const VerbalNoun&) { return std::string("V-n"); },
                        [](const CompletiveSpec& s) { return render_completive(s); },
                    },
                    v);
}

void collect_tokens(const std::vector<ConstructionToken>& tokens, LabelWords& out) {
  for (const auto& tok : tokens) {
    if (const auto* p = std::get_if<PrepToken>(&tok.value); p && !p->word.empty()) {
      out.prepositions.push_back(p->word);
    } else if (const auto* g = std::get_if<OptionalGroup>(&tok.value)) {
      collect_tokens(g->tokens, out);
    }
  }
}

const VerbToken* find_verb(const std::vector<ConstructionToken>& tokens) {
  for (const auto& tok : tokens) {
    if (const auto* v = std::get_if<VerbToken>(&tok.value)) return v;
    if (const auto* g = std::get_if<OptionalGroup>(&tok.value)) {
      if (const VerbToken* v = find_verb(g->tokens)) return v;
    }
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(Trait t) { return name_of(kTraits, t); }
std::string_view to_string(CaseTag c) { return name_of(kCaseTags, c); }
std::string_view to_string(Role r) { return name_of(kRoles, r); }
std::string_view to_string(Field f) { return name_of(kFields, f); }

std::optional<Trait> parse_trait(std::string_view s) { return value_of(kTraits, s); }
std::optional<CaseTag> parse_case_tag(std::string_view s) { return value_of(kCaseTags, s); }
std::optional<Role> parse_role(std::string_view s) { return value_of(kRoles, s); }

bool operator==(const OptionalGroup& a, const OptionalGroup& b) { return a.tokens == b.tokens; }

std::string render(const NounRef& n) {
  std::string out = "N" + std::to_string(n.position);
  if (n.trait) out += to_string(*n.trait);
  if (n.case_tag) out += to_string(*n.case_tag);
  return out;
}

std::string LabelKind::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(rows[i]);
  }
  return out;
}

PropertyLabel parse_label(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) trimmed.remove_prefix(1);
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) trimmed.remove_suffix(1);
  if (trimmed.empty()) throw ParseError("empty label");

  const std::vector<Token> tokens = detail::lex_label(trimmed);
  using Recognizer = std::optional<PropertyLabel> (*)(const std::vector<Token>&);
  static constexpr Recognizer kRecognizers[] = {
      as_distribution,   as_loc_prep_distribution, as_role_assignment, as_construction,
      as_relative_transform, as_extra_complement,  as_lexical_field,   as_entry_formation,
      as_etymological,
  };
  std::vector<PropertyLabel> matches;
  for (Recognizer r : kRecognizers) {
    if (auto m = r(tokens)) matches.push_back(std::move(*m));
  }
  if (matches.empty()) throw ParseError("no label structure matches '" + std::string(trimmed) + "'");
  if (matches.size() > 1) {
    std::string kinds;
    for (const auto& m : matches) kinds += std::string(kinds.empty() ? "" : ", ") + std::string(kind_name(m));
    throw AmbiguityError("label '" + std::string(trimmed) + "' matches several structures: " + kinds);
  }
  return std::move(matches.front());
}

std::optional<PropertyLabel> try_parse_label(std::string_view text) {
  try {
    return parse_label(text);
  } catch (const LexError&) {
    return std::nullopt;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::string render_label(const PropertyLabel& label) {
  return std::visit(
      Overloaded{
          [](const Distribution& d) {
            if (!d.arg) return render_value(d.value);
            return render(*d.arg) + " =: " + render_value(d.value);
          },
          [](const LocPrepDistribution& l) {
            std::string s = "Loc N" + std::to_string(l.arg.position) + " =: ";
            s += l.preps.size() == 1 ? l.preps.front() : render_words(l.preps);
            s += " " + render(l.arg);
            if (l.role) s += " " + std::string(to_string(*l.role));
            return s;
          },
          [](const RoleAssignment& r) { return render(r.arg) + " " + std::string(to_string(r.role)); },
          [](const Construction& c) { return render_tokens(c.tokens); },
          [](const RelativeTransform& r) {
            std::string s = r.locative ? "Loc " : "";
            s += render(r.lhs);
            s += r.equality ? " = Ppv" : " =: Ppv";
            if (!r.rhs.clitics.empty()) s += " =: " + render_words(r.rhs.clitics);
            return s;
          },
          [](const ExtraComplement& e) {
            return e.prep + " N" + (e.head_trait ? std::string(to_string(*e.head_trait)) : "");
          },
          [](const LexicalField& f) {
            std::string s(to_string(f.field));
            if (!f.suffix.empty()) s += ", Sfx = " + f.suffix;
            if (f.role) s += " " + std::string(to_string(*f.role));
            return s;
          },
          [](const EntryFormation& e) { return e.prefix + "-V"; },
          [](const EtymologicalMark&) { return std::string("X-V"); },
      },
      label);
}

LabelKind classify_label(const PropertyLabel& label) {
  return std::visit(Overloaded{
                        [](const Distribution& d) {
                          if (std::holds_alternative<VerbalNoun>(d.value)) return LabelKind{{1, 7}};
                          return LabelKind{{1}};
                        },
                        [](const LocPrepDistribution& l) {
                          return l.role ? LabelKind{{2, 3}} : LabelKind{{2}};
                        },
                        [](const RoleAssignment&) { return LabelKind{{3}}; },
                        [](const Construction&) { return LabelKind{{4}}; },
                        [](const RelativeTransform&) { return LabelKind{{5}}; },
                        [](const ExtraComplement&) { return LabelKind{{6}}; },
                        [](const LexicalField& f) { return f.role ? LabelKind{{3, 7}} : LabelKind{{7}}; },
                        [](const EntryFormation&) { return LabelKind{{8}}; },
                        [](const EtymologicalMark&) { return LabelKind{{8}}; },
                    },
                    label);
}

std::string_view kind_name(const PropertyLabel& label) {
  static constexpr std::string_view kNames[] = {
      "distribution",       "loc-prep-distribution", "role-assignment",
      "construction",       "relative-transform",    "extra-complement",
      "lexical-field",      "entry-formation",       "etymological-mark",
  };
  return kNames[label.index()];
}

std::optional<std::string> canonical_label(std::string_view text) {
  auto l = try_parse_label(text);
  if (!l) return std::nullopt;
  return render_label(*l);
}

const VerbToken& construction_verb(const Construction& c) {
  const VerbToken* v = find_verb(c.tokens);
  if (!v) throw InvariantError("construction without a verb: " + render_tokens(c.tokens));
  return *v;
}

LabelWords collect_words(const PropertyLabel& label) {
  LabelWords out;
  std::visit(Overloaded{
                 [&](const Distribution& d) {
                   if (const auto* s = std::get_if<CompletiveSpec>(&d.value);
                       s && s->marker == CompletiveSpec::Marker::kConjunction) {
                     out.conjunctions.push_back(s->conjunction);
                   }
                 },
                 [&](const LocPrepDistribution& l) { out.prepositions = l.preps; },
                 [&](const Construction& c) { collect_tokens(c.tokens, out); },
                 [&](const RelativeTransform& r) { out.clitics = r.rhs.clitics; },
                 [&](const ExtraComplement& e) { out.prepositions.push_back(e.prep); },
                 [](const auto&) {},
             },
             label);
  return out;
}

}  // namespace lgc
