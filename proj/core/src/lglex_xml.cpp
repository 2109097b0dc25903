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

#include <cctype>
#include <string>

#include "lgc/error.hpp"
#include "lgc/lglex.hpp"
#include "lgc/utf8.hpp"

namespace lgc {
namespace {

bool xml_char(char32_t c) {
  return c == 0x9 || c == 0xA || c == 0xD || (c >= 0x20 && c <= 0xD7FF) || (c >= 0xE000 && c <= 0xFFFD) ||
         (c >= 0x10000 && c <= 0x10FFFF);
}

std::string escape(const std::string& s) {
  std::u32string cps;
  try {
    cps = utf8::decode(s);
  } catch (const LexError& e) {
    throw ValueError(std::string("cannot write XML: ") + e.what());
  }
  for (char32_t c : cps) {
    if (!xml_char(c)) throw ValueError("character " + utf8::codepoint_name(c) + " is not allowed in XML");
  }
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void check_name(const std::string& name) {
  if (name.empty()) throw ValueError("empty XML element name");
  const char first = name.front();
  if (!(std::isalpha(static_cast<unsigned char>(first)) || first == '_')) {
    throw ValueError("'" + name + "' is not a valid XML name");
  }
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) {
      throw ValueError("'" + name + "' is not a valid XML name");
    }
  }
}

void element(const LGLexField& f, int depth, std::string& out) {
  check_name(f.name);
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  out += indent + '<' + f.name;
  const auto& v = f.value;
  switch (v.type) {
    case LGLexValue::Type::kEmpty:
      out += "/>\n";
      return;
    case LGLexValue::Type::kStr:
      out += '>' + escape(v.str) + "</" + f.name + ">\n";
      return;
    case LGLexValue::Type::kRecord: {
      bool children = false;
      for (const auto& c : v.items) {
        if (c.value.type == LGLexValue::Type::kStr || c.value.type == LGLexValue::Type::kEmpty) {
          check_name(c.name);
          out += ' ' + c.name + "=\"" + escape(c.value.str) + '"';
        } else {
          children = true;
        }
      }
      if (!children) {
        out += "/>\n";
        return;
      }
      out += ">\n";
      for (const auto& c : v.items) {
        if (c.value.type == LGLexValue::Type::kRecord || c.value.type == LGLexValue::Type::kList) {
          element(c, depth + 1, out);
        }
      }
      break;
    }
    case LGLexValue::Type::kList:
      if (v.items.empty()) {
        out += "/>\n";
        return;
      }
      out += ">\n";
      for (const auto& c : v.items) element(c, depth + 1, out);
      break;
  }
  out += indent + "</" + f.name + ">\n";
}

}  // namespace

std::string write_xml(const LGLexLexicon& lexicon) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (lexicon.entries.empty()) return out + "<lglex/>\n";
  out += "<lglex>\n";
  for (const auto& e : lexicon.entries) {
    out += "  <entry id=\"" + escape(e.id) + "\">\n";
    for (const auto& s : to_sections(e)) element(s, 2, out);
    out += "  </entry>\n";
  }
  out += "</lglex>\n";
  return out;
}

}  // namespace lgc
