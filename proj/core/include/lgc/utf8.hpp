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

#ifndef LGC_UTF8_HPP_
#define LGC_UTF8_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace lgc::utf8 {

// Decodes UTF-8 into scalar values. Throws LexError on malformed input.
std::u32string decode(std::string_view text);
std::string encode(char32_t cp);
std::string encode(std::u32string_view cps);

bool is_greek_letter(char32_t cp);
bool is_latin_letter(char32_t cp);

// Formats a code point as "U+039D".
std::string codepoint_name(char32_t cp);

// Latin look-alike of a Greek letter, or 0 when there is none.
char32_t latin_lookalike(char32_t cp);

// Folds every Greek letter that has a Latin look-alike onto it. Two strings
// with the same skeleton differ only by homoglyph substitutions.
std::u32string homoglyph_skeleton(std::u32string_view text);

// Levenshtein distance over scalar values, case-sensitive.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

}  // namespace lgc::utf8

#endif  // LGC_UTF8_HPP_
