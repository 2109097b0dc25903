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

#include "lgc/extractor.hpp"

#include <algorithm>

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {
namespace {

constexpr std::pair<Effect, std::string_view> kEffects[] = {
    {Effect::kAddAbsoluteConstruction, "add_absolute_construction"},
    {Effect::kAddRelative, "add_relative"},
    {Effect::kAddDistribution, "add_distribution"},
    {Effect::kAddLocatif, "add_locatif"},
    {Effect::kAddPreposition, "add_preposition"},
    {Effect::kAddPfxVerb, "add_pfx_verb"},
    {Effect::kAddLexicalField, "add_lexical_field"},
    {Effect::kAddRole, "add_role"},
    {Effect::kIgnore, "ignore"},
};

constexpr std::string_view kKinds[] = {
    "distribution",   "loc-prep-distribution", "role-assignment", "construction",      "relative-transform",
    "extra-complement", "lexical-field",       "entry-formation", "etymological-mark",
};

std::string feature_key(Trait t) {
  switch (t) {
    case Trait::kHum: return "hum";
    case Trait::kNonHum: return "nhum";
    case Trait::kConc: return "conc";
    case Trait::kPc: return "pc";
    case Trait::kPlObl: return "plobl";
    case Trait::kArgent: return "argent";
    case Trait::kTransport: return "transport";
  }
  return "?";
}

template <class T>
void push_unique(std::vector<T>& v, T x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(std::move(x));
}

struct Builder {
  const Table& table;
  const Entry& row;
  const DefiningConfig& defining;
  const Lexicons& lex;
  LGLexEntry entry;
  std::vector<std::string> prefixed;

  ArgConst& arg(int pos) {
    for (auto& a : entry.args) {
      if (a.pos == pos) return a;
    }
    entry.args.push_back({pos, {}, {}});
    return entry.args.back();
  }

  // Position of an argument-less completive: the table's own Pcomp marker,
  // else the direct object.
  int bare_completive_position() const {
    for (const auto& label : defining.defining_labels(table.name)) {
      const auto parsed = parse_label(label);
      if (const auto* d = std::get_if<Distribution>(&parsed); d && !d->arg) {
        if (const auto* c = std::get_if<CompletiveSpec>(&d->value);
            c && c->marker == CompletiveSpec::Marker::kPcomp) {
          return c->position;
        }
      }
    }
    return 1;
  }

  [[noreturn]] static void mismatch(const Directive& d, const PropertyLabel& label) {
    throw ExtractError("script line " + std::to_string(d.line) + ": " + std::string(to_string(d.effect)) +
                       " does not apply to a " + std::string(kind_name(label)) + " label");
  }

  void distribution(const Distribution& d, const std::string& origin) {
    ArgDistribution dist;
    dist.origins.push_back(origin);
    int pos = d.arg ? d.arg->position : bare_completive_position();
    if (d.arg && d.arg->trait) dist.features.push_back({feature_key(*d.arg->trait), "true"});
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, PlainNP>) {
            dist.cat = "NP";
          } else if constexpr (std::is_same_v<T, NounClass>) {
            dist.cat = "NP";
            push_unique(dist.features, Feature{feature_key(v.trait), "true"});
          } else if constexpr (std::is_same_v<T, VerbalNoun>) {
            dist.cat = "V-n";
          } else if constexpr (std::is_same_v<T, Ppv>) {
            dist.cat = "Ppv";
          } else {
            dist.cat = "S";
            if (v.marker == CompletiveSpec::Marker::kPcomp) {
              if (!d.arg) pos = v.position;
              dist.features.push_back({"comp", "Pcomp" + std::to_string(v.position)});
            } else {
              dist.features.push_back({"conj", v.conjunction});
              dist.features.push_back({"mood", std::string(to_string(lookup_mood(v.conjunction, lex)))});
            }
            if (v.controlled_by_subject) dist.features.push_back({"control", "N0"});
            if (v.nominalizer == Nominalizer::kTo) dist.features.push_back({"nominalized", "το"});
            if (v.nominalizer == Nominalizer::kToGegonos) dist.features.push_back({"nominalized", "το γεγονός"});
          }
        },
        d.value);
    if (d.arg && d.arg->case_tag) {
      dist.features.push_back({"case", std::string(to_string(case_from_tag(*d.arg->case_tag)))});
    }
    push_unique(arg(pos).dists, std::move(dist));
  }

  void apply(const Directive& d, const PropertyLabel& label, const std::string& canonical, const Cell* cell,
             bool is_base) {
    switch (d.effect) {
      case Effect::kIgnore:
        return;
      case Effect::kAddAbsoluteConstruction:
        if (!std::holds_alternative<Construction>(label)) mismatch(d, label);
        push_unique(entry.constructions.absolute, (is_base ? "true::" : "o::") + canonical);
        return;
      case Effect::kAddRelative:
        push_unique(entry.constructions.relative, canonical);
        return;
      case Effect::kAddDistribution:
        if (const auto* dist = std::get_if<Distribution>(&label)) return distribution(*dist, canonical);
        mismatch(d, label);
      case Effect::kAddLocatif: {
        const auto* lp = std::get_if<LocPrepDistribution>(&label);
        if (!lp) mismatch(d, label);
        auto& locs = entry.lexical_info.locatifs;
        auto it = std::find_if(locs.begin(), locs.end(), [&](const Locatif& l) { return l.arg == lp->arg.position; });
        if (it == locs.end()) {
          locs.push_back({lp->arg.position, {}});
          it = locs.end() - 1;
        }
        for (const auto& p : lp->preps) push_unique(it->preps, p);
        return;
      }
      case Effect::kAddPreposition: {
        const auto* ec = std::get_if<ExtraComplement>(&label);
        if (!ec) mismatch(d, label);
        push_unique(entry.lexical_info.prepositions, ec->prep);
        return;
      }
      case Effect::kAddPfxVerb: {
        const auto* ef = std::get_if<EntryFormation>(&label);
        if (!ef) mismatch(d, label);
        if (ef->prefix.empty()) throw ExtractError("prefix column '" + canonical + "' has an empty prefix");
        std::string verb = apply_prefix(entry.lexical_info.lemma, ef->prefix);
        if (std::find(prefixed.begin(), prefixed.end(), verb) == prefixed.end()) {
          prefixed.push_back(verb);
          entry.lexical_info.pfx_verbs.push_back(std::move(verb));
        }
        return;
      }
      case Effect::kAddLexicalField: {
        const auto* lf = std::get_if<LexicalField>(&label);
        if (!lf) mismatch(d, label);
        LexicalFieldValue v;
        v.name = std::string(to_string(lf->field));
        v.suffix = lf->suffix;
        if (lf->role) v.role = std::string(to_string(*lf->role));
        if (cell) {
          if (const auto* forms = std::get_if<Lexical>(&cell->value)) v.forms = forms->alternatives;
        }
        entry.lexical_info.fields.push_back(std::move(v));
        return;
      }
      case Effect::kAddRole: {
        const auto* ra = std::get_if<RoleAssignment>(&label);
        if (!ra) mismatch(d, label);
        arg(ra->arg.position).role = std::string(to_string(ra->role));
        return;
      }
    }
  }
};

bool support_field(const PropertyLabel& label) {
  const auto* lf = std::get_if<LexicalField>(&label);
  return lf && (lf->field == Field::kVsup || lf->field == Field::kNpred);
}

}  // namespace

std::string_view to_string(Effect e) {
  for (const auto& [eff, name] : kEffects) {
    if (eff == e) return name;
  }
  return "?";
}

std::string Directive::param(std::string_view key, std::string_view fallback) const {
  for (const auto& kv : text::split(params, ';')) {
    const auto eq = kv.find('=');
    if (eq != std::string::npos && text::trim(std::string_view(kv).substr(0, eq)) == key) {
      return std::string(text::trim(std::string_view(kv).substr(eq + 1)));
    }
  }
  return std::string(fallback);
}

ExtractionScript ExtractionScript::from_file(const std::filesystem::path& path) {
  try {
    return parse(text::read_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

ExtractionScript ExtractionScript::parse(std::string_view data) {
  ExtractionScript script;
  for (const auto& rec : text::parse_records(data)) {
    const auto where = "line " + std::to_string(rec.line) + ": ";
    if (rec.fields.size() < 2 || rec.fields.size() > 3) {
      throw ConfigError(where + "expected selector<TAB>effect[<TAB>params]");
    }
    Directive d;
    d.line = rec.line;
    d.selector = std::string(text::trim(rec.fields[0]));
    const auto effect = text::trim(rec.fields[1]);
    auto it = std::find_if(std::begin(kEffects), std::end(kEffects), [&](const auto& e) { return e.second == effect; });
    if (it == std::end(kEffects)) throw ConfigError(where + "unknown effect '" + std::string(effect) + "'");
    d.effect = it->first;
    if (rec.fields.size() == 3) d.params = std::string(text::trim(rec.fields[2]));
    try {
      script.add(std::move(d));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return script;
}

void ExtractionScript::add(Directive d) {
  if (d.selector.rfind("kind:", 0) == 0) {
    d.by_kind = true;
    d.selector = d.selector.substr(5);
    if (std::find(std::begin(kKinds), std::end(kKinds), d.selector) == std::end(kKinds)) {
      throw ConfigError("unknown label kind '" + d.selector + "'");
    }
  } else {
    d.by_kind = false;
    auto canonical = canonical_label(d.selector);
    if (!canonical) throw ConfigError("cannot parse selector '" + d.selector + "'");
    d.selector = std::move(*canonical);
  }
  directives_.push_back(std::move(d));
}

std::vector<const Directive*> ExtractionScript::match(const PropertyLabel& label, std::string_view canonical) const {
  std::vector<const Directive*> exact;
  std::vector<const Directive*> by_kind;
  const std::string_view kind = kind_name(label);
  for (const auto& d : directives_) {
    if (!d.by_kind && d.selector == canonical) exact.push_back(&d);
    if (d.by_kind && d.selector == kind) by_kind.push_back(&d);
  }
  return exact.empty() ? by_kind : exact;
}

std::vector<LGLexEntry> extract_entry(const Table& table, std::size_t row, const ExtractionScript& script,
                                      const DefiningConfig& defining, const Lexicons& lex, bool expand_prefixes) {
  if (row >= table.rows.size()) throw std::out_of_range("row out of range");
  const auto base = defining.base_construction(table.name);
  if (!base) throw ExtractError("table " + table.name + " has no defining construction");

  Builder b{table, table.rows[row], defining, lex, {}, {}};
  const Entry& e = table.rows[row];
  b.entry.id = table.category + "_" + table.name + "_" + std::to_string(e.row_index);
  b.entry.lexical_info.lemma = e.lemma;

  const auto run = [&](const PropertyLabel& label, const std::string& canonical, const Cell* cell, bool is_base) {
    const auto directives = script.match(label, canonical);
    if (directives.empty()) throw UnmatchedLabel("no script directive for '" + canonical + "'");
    for (const Directive* d : directives) b.apply(*d, label, canonical, cell, is_base);
  };

  for (const auto& label : defining.defining_labels(table.name)) {
    run(parse_label(label), label, nullptr, label == *base);
  }

  std::optional<bool> support_enabled;
  if (auto col = table.find_column("N0 Vsup Npred")) support_enabled = is_plus(e.cells[*col].value);

  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const ColumnSpec& spec = table.columns[c];
    if (!spec.is_property()) continue;
    const auto label = try_parse_label(spec.raw_heading);
    if (!label) throw UnmatchedLabel("cannot interpret heading '" + spec.raw_heading + "'");
    const std::string canonical = render_label(*label);
    if (defining.is_defining(table.name, canonical)) continue;
    const Cell& cell = e.cells[c];
    bool active = false;
    if (spec.kind == ColumnKind::kLexical) {
      active = std::holds_alternative<Lexical>(cell.value) || is_plus(cell.value);
      if (support_field(*label) && support_enabled == false) active = false;
    } else {
      active = is_plus(cell.value);
    }
    if (active) run(*label, canonical, &cell, false);
  }

  std::sort(b.entry.args.begin(), b.entry.args.end(),
            [](const ArgConst& x, const ArgConst& y) { return x.pos < y.pos; });
  std::sort(b.entry.lexical_info.locatifs.begin(), b.entry.lexical_info.locatifs.end(),
            [](const Locatif& x, const Locatif& y) { return x.arg < y.arg; });

  const auto& abs = b.entry.constructions.absolute;
  if (std::count_if(abs.begin(), abs.end(), [](const std::string& s) { return s.rfind("true::", 0) == 0; }) != 1) {
    throw InvariantError(b.entry.id + ": expected exactly one defining construction");
  }

  std::vector<LGLexEntry> out{b.entry};
  if (expand_prefixes) {
    for (std::size_t k = 0; k < b.prefixed.size(); ++k) {
      LGLexEntry clone = b.entry;
      clone.id += "_pfx" + std::to_string(k + 1);
      clone.lexical_info.lemma = b.prefixed[k];
      out.push_back(std::move(clone));
    }
  }
  return out;
}

ExtractionResult extract_lexicon(const std::vector<Table>& input, const ExtractionScript& script,
                                 const DefiningConfig& defining, const Lexicons& lex, const ExtractOptions& options) {
  std::vector<const Table*> tables;
  for (const auto& t : input) tables.push_back(&t);
  std::stable_sort(tables.begin(), tables.end(), [](const Table* a, const Table* b) { return a->name < b->name; });

  ExtractionResult res;
  std::vector<std::string> errors;
  for (const Table* t : tables) {
    ++res.stats.tables;
    for (std::size_t r = 0; r < t->rows.size(); ++r) {
      ++res.stats.rows;
      try {
        auto entries = extract_entry(*t, r, script, defining, lex, options.expand_prefixes);
        res.stats.prefix_clones += entries.size() - 1;
        for (auto& e : entries) res.lexicon.entries.push_back(std::move(e));
      } catch (const Error& e) {
        errors.push_back("table " + t->name + " row " + std::to_string(t->rows[r].row_index) + ": " + e.what());
      }
    }
  }
  if (!errors.empty()) throw ExtractError(text::join(errors, "\n"));
  res.stats.entries = res.lexicon.entries.size();
  return res;
}

void check_script_coverage(const Table& table, const ExtractionScript& script) {
  for (const auto& col : table.columns) {
    if (!col.is_property()) continue;
    const auto label = try_parse_label(col.raw_heading);
    if (!label) throw UnmatchedLabel("cannot interpret heading '" + col.raw_heading + "' in table " + table.name);
    const std::string canonical = render_label(*label);
    if (script.match(*label, canonical).empty()) {
      throw UnmatchedLabel("no script directive for '" + canonical + "' in table " + table.name);
    }
  }
}

}  // namespace lgc
