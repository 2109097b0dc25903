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

#include "lgc/lglex.hpp"

#include <charconv>

#include "lgc/error.hpp"

namespace lgc {

LGLexValue LGLexValue::Str(std::string s) { return {Type::kStr, std::move(s), {}}; }
LGLexValue LGLexValue::Record(std::vector<LGLexField> fields) { return {Type::kRecord, {}, std::move(fields)}; }
LGLexValue LGLexValue::List(std::vector<LGLexField> items) { return {Type::kList, {}, std::move(items)}; }
LGLexValue LGLexValue::Empty() { return {}; }

bool operator==(const LGLexValue& a, const LGLexValue& b) {
  return a.type == b.type && a.str == b.str && a.items == b.items;
}
bool operator==(const LGLexField& a, const LGLexField& b) { return a.name == b.name && a.value == b.value; }

namespace {

using V = LGLexValue;
using F = LGLexField;

constexpr std::string_view kReserved[] = {"cat", "introd-prep", "introd-loc", "origin"};

F str(std::string name, std::string value) { return {std::move(name), V::Str(std::move(value))}; }

F str_list(std::string name, std::string item, const std::vector<std::string>& values) {
  std::vector<F> items;
  for (const auto& v : values) items.push_back(str(item, v));
  return {std::move(name), V::List(std::move(items))};
}

F dist_field(const ArgDistribution& d) {
  std::vector<F> f{str("cat", d.cat)};
  for (const auto& feat : d.features) {
    for (auto r : kReserved) {
      if (feat.key == r) throw ValueError("feature key '" + feat.key + "' is reserved");
    }
    f.push_back(str(feat.key, feat.value));
  }
  f.push_back(str_list("introd-prep", "prep", d.introd_prep));
  f.push_back(str_list("introd-loc", "loc", d.introd_loc));
  f.push_back(str_list("origin", "orig", d.origins));
  return {"comp", V::Record(std::move(f))};
}

// Reading side.

[[noreturn]] void shape(const std::string& what) { throw ValueError("unexpected LGLex shape: " + what); }

const V& expect(const F& f, std::string_view name, V::Type type) {
  if (f.name != name) shape("expected '" + std::string(name) + "', found '" + f.name + "'");
  if (f.value.type != type) shape("'" + f.name + "' has the wrong value type");
  return f.value;
}

std::string expect_str(const F& f, std::string_view name) { return expect(f, name, V::Type::kStr).str; }

std::vector<std::string> expect_str_list(const F& f, std::string_view name, std::string_view item) {
  std::vector<std::string> out;
  for (const auto& i : expect(f, name, V::Type::kList).items) out.push_back(expect_str(i, item));
  return out;
}

int expect_int(const F& f, std::string_view name) {
  const std::string s = expect_str(f, name);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) shape("'" + std::string(name) + "' is not a number");
  return v;
}

class Reader {
 public:
  explicit Reader(const std::vector<F>& items) : items_(items) {}
  bool done() const { return i_ == items_.size(); }
  const F& peek() const {
    if (done()) shape("record ends early");
    return items_[i_];
  }
  bool next_is(std::string_view name) const { return !done() && items_[i_].name == name; }
  const F& next() {
    const F& f = peek();
    ++i_;
    return f;
  }
  void finish() const {
    if (!done()) shape("unexpected field '" + items_[i_].name + "'");
  }

 private:
  const std::vector<F>& items_;
  std::size_t i_ = 0;
};

LexicalFieldValue read_lexical_field(const F& f) {
  Reader r(expect(f, "field", V::Type::kRecord).items);
  LexicalFieldValue out;
  out.name = expect_str(r.next(), "name");
  if (r.next_is("sfx")) out.suffix = expect_str(r.next(), "sfx");
  if (r.next_is("role")) out.role = expect_str(r.next(), "role");
  out.forms = expect_str_list(r.next(), "list", "form");
  r.finish();
  return out;
}

ArgDistribution read_dist(const F& f) {
  Reader r(expect(f, "comp", V::Type::kRecord).items);
  ArgDistribution d;
  d.cat = expect_str(r.next(), "cat");
  while (!r.next_is("introd-prep")) {
    const F& feat = r.next();
    d.features.push_back({feat.name, expect_str(feat, feat.name)});
  }
  d.introd_prep = expect_str_list(r.next(), "introd-prep", "prep");
  d.introd_loc = expect_str_list(r.next(), "introd-loc", "loc");
  d.origins = expect_str_list(r.next(), "origin", "orig");
  r.finish();
  return d;
}

}  // namespace

std::vector<LGLexField> to_sections(const LGLexEntry& e) {
  const LexicalInfo& li = e.lexical_info;

  std::vector<F> verb{str("lemma", li.lemma)};
  for (const auto& lf : li.fields) {
    std::vector<F> f{str("name", lf.name)};
    if (!lf.suffix.empty()) f.push_back(str("sfx", lf.suffix));
    if (!lf.role.empty()) f.push_back(str("role", lf.role));
    f.push_back(str_list("list", "form", lf.forms));
    verb.push_back({"field", V::Record(std::move(f))});
  }
  std::vector<F> locatifs;
  for (const auto& l : li.locatifs) {
    locatifs.push_back({"locatif", V::Record({str("id", std::to_string(l.arg)), str_list("list", "prep", l.preps)})});
  }
  F info{"lexical-info", V::Record({str("cat", li.cat), {"verb", V::Record(std::move(verb))},
                                    str_list("pfx-V", "verb", li.pfx_verbs),
                                    str_list("prepositions", "prep", li.prepositions),
                                    {"locatifs", V::List(std::move(locatifs))}})};

  std::vector<F> consts;
  for (const auto& a : e.args) {
    std::vector<F> c{str("pos", std::to_string(a.pos))};
    if (!a.role.empty()) c.push_back(str("role", a.role));
    std::vector<F> dists;
    for (const auto& d : a.dists) dists.push_back(dist_field(d));
    c.push_back({"dist", V::List(std::move(dists))});
    consts.push_back({"const", V::Record(std::move(c))});
  }
  F args{"args", V::List(std::move(consts))};

  F all{"all-constructions", V::Record({str_list("absolute", "construction", e.constructions.absolute),
                                        str_list("relative", "construction", e.constructions.relative)})};

  F example{"example", V::Record({e.example ? str("example", *e.example) : F{"example", V::Empty()}})};

  return {std::move(info), std::move(args), std::move(all), std::move(example)};
}

LGLexEntry from_sections(std::string id, const std::vector<LGLexField>& sections) {
  if (sections.size() != 4) shape("an entry has exactly four sections");
  LGLexEntry e;
  e.id = std::move(id);

  {
    Reader r(expect(sections[0], "lexical-info", V::Type::kRecord).items);
    LexicalInfo& li = e.lexical_info;
    li.cat = expect_str(r.next(), "cat");
    Reader verb(expect(r.next(), "verb", V::Type::kRecord).items);
    li.lemma = expect_str(verb.next(), "lemma");
    while (!verb.done()) li.fields.push_back(read_lexical_field(verb.next()));
    li.pfx_verbs = expect_str_list(r.next(), "pfx-V", "verb");
    li.prepositions = expect_str_list(r.next(), "prepositions", "prep");
    for (const auto& l : expect(r.next(), "locatifs", V::Type::kList).items) {
      Reader lr(expect(l, "locatif", V::Type::kRecord).items);
      Locatif loc;
      loc.arg = expect_int(lr.next(), "id");
      loc.preps = expect_str_list(lr.next(), "list", "prep");
      lr.finish();
      li.locatifs.push_back(std::move(loc));
    }
    r.finish();
  }

  for (const auto& c : expect(sections[1], "args", V::Type::kList).items) {
    Reader r(expect(c, "const", V::Type::kRecord).items);
    ArgConst a;
    a.pos = expect_int(r.next(), "pos");
    if (r.next_is("role")) a.role = expect_str(r.next(), "role");
    for (const auto& d : expect(r.next(), "dist", V::Type::kList).items) a.dists.push_back(read_dist(d));
    r.finish();
    e.args.push_back(std::move(a));
  }

  {
    Reader r(expect(sections[2], "all-constructions", V::Type::kRecord).items);
    e.constructions.absolute = expect_str_list(r.next(), "absolute", "construction");
    e.constructions.relative = expect_str_list(r.next(), "relative", "construction");
    r.finish();
  }

  {
    Reader r(expect(sections[3], "example", V::Type::kRecord).items);
    const F& ex = r.next();
    if (ex.name != "example") shape("expected 'example'");
    if (ex.value.type == V::Type::kStr) {
      e.example = ex.value.str;
    } else if (ex.value.type != V::Type::kEmpty) {
      shape("'example' has the wrong value type");
    }
    r.finish();
  }
  return e;
}

}  // namespace lgc
