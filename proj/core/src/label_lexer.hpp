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

#ifndef LGC_SRC_LABEL_LEXER_HPP_
#define LGC_SRC_LABEL_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace lgc::detail {

enum class TokenType { kWord, kAssign, kEquals, kLParen, kRParen, kPlus, kComma };

struct Token {
  TokenType type;
  std::string text;
};

// Splits a heading into words and the punctuation "=:", "=", "(", ")", "+"
// and ",". Spacing around punctuation is not significant. Throws LexError on
// romanization brackets or characters outside the label alphabet, and
// HomoglyphError on Greek/Latin look-alike mixtures in meta tokens.
std::vector<Token> lex_label(std::string_view text);

// Word shapes the grammar gives a meaning to, by script.
bool is_meta_word(std::u32string_view word);
bool is_greek_word(std::u32string_view word);

}  // namespace lgc::detail

#endif  // LGC_SRC_LABEL_LEXER_HPP_
