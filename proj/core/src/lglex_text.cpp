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

#include <string>

#include "lgc/error.hpp"
#include "lgc/lglex.hpp"
#include "lgc/text.hpp"

namespace lgc {
namespace {

void check_name(const std::string& name) {
  if (name.empty()) throw ValueError("empty field name");
  for (char c : name) {
    if (c == '=' || c == '[' || c == ']' || c == '(' || c == ')' || c == ',' || c == '"' || c == '\n' ||
        c == '\r') {
      throw ValueError("field name '" + name + "' contains a reserved character");
    }
  }
}

void write_value(const LGLexValue& v, std::string& out);

void write_field_to(const LGLexField& f, std::string& out) {
  check_name(f.name);
  out += f.name;
  out += '=';
  write_value(f.value, out);
}

void write_items(const std::vector<LGLexField>& items, std::string& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    write_field_to(items[i], out);
  }
}

void write_value(const LGLexValue& v, std::string& out) {
  switch (v.type) {
    case LGLexValue::Type::kStr:
      if (v.str.find('"') != std::string::npos) throw ValueContainsQuote("value contains '\"': " + v.str);
      if (v.str.find_first_of("\n\r") != std::string::npos) throw ValueError("value contains a line break");
      out += '"';
      out += v.str;
      out += '"';
      break;
    case LGLexValue::Type::kRecord:
      out += '[';
      write_items(v.items, out);
      out += ']';
      break;
    case LGLexValue::Type::kList:
      out += '(';
      write_items(v.items, out);
      out += ')';
      break;
    case LGLexValue::Type::kEmpty:
      break;
  }
}

class Parser {
 public:
  Parser(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  LGLexField field() {
    LGLexField f;
    const std::size_t start = i_;
    while (i_ < s_.size() && !special(s_[i_])) ++i_;
    if (i_ == start) fail("expected a field name");
    f.name = std::string(s_.substr(start, i_ - start));
    if (!eat('=')) fail("expected '='");
    f.value = value();
    return f;
  }

  void end() {
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
  }

 private:
  static bool special(char c) {
    return c == '=' || c == '[' || c == ']' || c == '(' || c == ')' || c == ',' || c == '"';
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, line_, i_ + 1); }

  bool eat(char c) {
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  LGLexValue value() {
    if (eat('"')) {
      const std::size_t close = s_.find('"', i_);
      if (close == std::string_view::npos) fail("unterminated string");
      auto v = LGLexValue::Str(std::string(s_.substr(i_, close - i_)));
      i_ = close + 1;
      return v;
    }
    if (eat('[')) return LGLexValue::Record(items(']'));
    if (eat('(')) return LGLexValue::List(items(')'));
    if (i_ == s_.size() || s_[i_] == ',' || s_[i_] == ']' || s_[i_] == ')') return LGLexValue::Empty();
    fail("expected a value");
  }

  std::vector<LGLexField> items(char close) {
    std::vector<LGLexField> out;
    if (eat(close)) return out;
    while (true) {
      out.push_back(field());
      if (eat(close)) return out;
      if (!eat(',')) fail(std::string("expected ',' or '") + close + "'");
    }
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

}  // namespace

std::string write_field(const LGLexField& field) {
  std::string out;
  write_field_to(field, out);
  return out;
}

std::string write_text(const LGLexLexicon& lexicon) {
  std::string out;
  for (std::size_t i = 0; i < lexicon.entries.size(); ++i) {
    const auto& e = lexicon.entries[i];
    if (e.id.empty() || e.id.find_first_of("\n\r") != std::string::npos) throw ValueError("bad entry id");
    if (i) out += '\n';
    out += "ID=" + e.id + '\n';
    for (const auto& section : to_sections(e)) {
      write_field_to(section, out);
      out += '\n';
    }
  }
  return out;
}

LGLexField read_field(std::string_view line) {
  Parser p(line, 1);
  auto f = p.field();
  p.end();
  return f;
}

LGLexLexicon read_text(std::string_view data) {
  LGLexLexicon lex;
  if (data.empty()) return lex;
  if (data.back() != '\n') {
    const auto all = text::split(data, '\n');
    throw SyntaxError("missing final newline", all.size(), all.back().size() + 1);
  }
  const auto all = text::split(data.substr(0, data.size() - 1), '\n');
  std::size_t i = 0;
  while (i < all.size()) {
    if (i && lex.entries.size()) {
      if (!all[i].empty()) throw SyntaxError("expected a blank line between entries", i + 1, 1);
      ++i;
    }
    if (i >= all.size()) throw SyntaxError("expected 'ID='", i + 1, 1);
    const std::string& head = all[i];
    if (head.rfind("ID=", 0) != 0 || head.size() == 3) throw SyntaxError("expected 'ID=<id>'", i + 1, 1);
    std::string id = head.substr(3);
    const std::size_t id_line = i + 1;
    ++i;
    std::vector<LGLexField> sections;
    for (int s = 0; s < 4; ++s, ++i) {
      if (i >= all.size()) throw SyntaxError("entry ends early", i + 1, 1);
      Parser p(all[i], i + 1);
      sections.push_back(p.field());
      p.end();
    }
    try {
      lex.entries.push_back(from_sections(std::move(id), sections));
    } catch (const ValueError& e) {
      throw SyntaxError(e.what(), id_line, 1);
    }
  }
  return lex;
}

}  // namespace lgc
