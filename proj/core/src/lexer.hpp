#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "macc/diagnostic.hpp"

namespace macc::detail {

enum class TokenKind { kIdent, kKeyword, kInt, kFloat, kString, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // decoded contents for strings
  int line = 1;
  int column = 1;
};

// Thrown by the lexer and the parsers; turned into one Diagnostic.
struct ParseFailure {
  std::string code;
  int line = 1;
  int column = 1;
  std::string message;
};

bool is_keyword(std::string_view word);

// Identifiers: a letter, then letters, digits, '_' or interior '-' (a '-' is
// part of the identifier only when a letter or digit follows, so `a->b` still
// lexes as an arrow). Comments run from `//` to end of line.
std::vector<Token> tokenize(std::string_view text);

}  // namespace macc::detail
