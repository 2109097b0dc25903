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

#include "label_lexer.hpp"

#include <algorithm>
#include <array>

#include "lgc/error.hpp"
#include "lgc/utf8.hpp"

namespace lgc::detail {
namespace {

bool is_space(char32_t cp) { return cp == U' ' || cp == U'\t' || cp == 0x00A0; }

bool is_combining(char32_t cp) { return cp >= 0x0300 && cp <= 0x036F; }

bool is_word_char(char32_t cp) {
  return utf8::is_latin_letter(cp) || utf8::is_greek_letter(cp) || is_combining(cp) ||
         (cp >= U'0' && cp <= U'9') || cp == U'-';
}

bool all_greek(std::u32string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char32_t c) { return utf8::is_greek_letter(c) || is_combining(c); });
}

bool all_latin_meta_chars(std::u32string_view s) {
  return std::all_of(s.begin(), s.end(), [](char32_t c) {
    return (c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z') || (c >= U'0' && c <= U'9') ||
           c == U'-';
  });
}

constexpr std::array<std::u32string_view, 20> kLatinMeta = {
    U"N",     U"V",     U"V0",   U"Vpp",   U"Vsup", U"VP",     U"V-n",   U"V-adj", U"Npred", U"Ppv",
    U"Prep",  U"Loc",   U"Sfx",  U"E",     U"X-V",  U"Pcomp0", U"Pcomp1", U"Npl",  U"obl",   U"N-hum"};

bool is_noun_like(std::u32string_view w) {
  // N, N0..N3 or V-adj/V-n with glued traits and case tags.
  if (w.size() >= 2 && w[0] == U'N' && w[1] >= U'0' && w[1] <= U'3') return all_latin_meta_chars(w);
  if (w.size() > 1 && w[0] == U'N') return all_latin_meta_chars(w);
  if (w.starts_with(U"V-adj") || w.starts_with(U"V-n")) return all_latin_meta_chars(w);
  return false;
}

// "P" + conjunction, or "<prefix>-V" / "<prefix>-Vpp".
bool is_mixed_shape(std::u32string_view w) {
  if (w.size() > 1 && w[0] == U'P' && all_greek(w.substr(1))) return true;
  for (std::u32string_view tail : {std::u32string_view(U"-Vpp"), std::u32string_view(U"-V")}) {
    if (w.size() > tail.size() && w.ends_with(tail) && all_greek(w.substr(0, w.size() - tail.size()))) {
      return true;
    }
  }
  return false;
}

std::string describe(std::u32string_view word) {
  std::string out;
  for (char32_t cp : word) {
    if (utf8::is_greek_letter(cp) && utf8::latin_lookalike(cp)) {
      if (!out.empty()) out += ", ";
      out += utf8::encode(cp) + " " + utf8::codepoint_name(cp) + " looks like " +
             utf8::encode(utf8::latin_lookalike(cp)) + " " + utf8::codepoint_name(utf8::latin_lookalike(cp));
    }
  }
  return out;
}

void check_homoglyphs(std::u32string_view word) {
  const bool has_greek = std::any_of(word.begin(), word.end(), utf8::is_greek_letter);
  const bool has_latin = std::any_of(word.begin(), word.end(), utf8::is_latin_letter);
  const std::string shown = utf8::encode(word);
  if (has_greek && has_latin && !is_mixed_shape(word)) {
    std::string detail = describe(word);
    if (detail.empty()) detail = "Greek and Latin letters mixed";
    throw HomoglyphError("homoglyph in token '" + shown + "': " + detail);
  }
  if (!has_greek) return;
  const std::u32string skeleton = utf8::homoglyph_skeleton(word);
  if (skeleton != word && is_meta_word(skeleton)) {
    throw HomoglyphError("homoglyph in token '" + shown + "' (reads as '" + utf8::encode(skeleton) +
                         "'): " + describe(word));
  }
}

}  // namespace

bool is_greek_word(std::u32string_view word) { return all_greek(word); }

bool is_meta_word(std::u32string_view w) {
  if (std::find(kLatinMeta.begin(), kLatinMeta.end(), w) != kLatinMeta.end()) return true;
  if (is_noun_like(w)) return true;
  if (is_mixed_shape(w)) return true;
  return false;
}

std::vector<Token> lex_label(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t cp = cps[i];
    if (is_space(cp)) {
      ++i;
      continue;
    }
    switch (cp) {
      case U'=':
        if (i + 1 < cps.size() && cps[i + 1] == U':') {
          out.push_back({TokenType::kAssign, "=:"});
          i += 2;
        } else {
          out.push_back({TokenType::kEquals, "="});
          ++i;
        }
        continue;
      case U'(':
        out.push_back({TokenType::kLParen, "("});
        ++i;
        continue;
      case U')':
        out.push_back({TokenType::kRParen, ")"});
        ++i;
        continue;
      case U'+':
        out.push_back({TokenType::kPlus, "+"});
        ++i;
        continue;
      case U',':
        out.push_back({TokenType::kComma, ","});
        ++i;
        continue;
      case U'[':
      case U']':
        throw LexError("romanization brackets are not part of a label: '" + std::string(text) + "'");
      default:
        break;
    }
    if (!is_word_char(cp)) {
      throw LexError("unexpected character " + utf8::encode(cp) + " (" + utf8::codepoint_name(cp) +
                     ") in '" + std::string(text) + "'");
    }
    std::size_t j = i;
    while (j < cps.size() && is_word_char(cps[j])) ++j;
    const std::u32string_view word(cps.data() + i, j - i);
    check_homoglyphs(word);
    out.push_back({TokenType::kWord, utf8::encode(word)});
    i = j;
  }
  return out;
}

}  // namespace lgc::detail
