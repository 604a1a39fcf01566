#include "lexer.hpp"

#include <array>
#include <cctype>

namespace macc::detail {

namespace {

constexpr std::array<std::string_view, 24> kKeywords = {
    "component", "port",       "in",       "out",      "connect",        "automaton",
    "state",     "initial",    "import",   "classdiagram", "enum",       "class",
    "application", "generators", "bindings", "map",    "to",             "library",
    "rte",       "implementation", "implements", "kind", "true",         "false"};

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_word(char c) { return is_letter(c) || is_digit(c) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_trivia();
      if (at_end()) {
        tokens.push_back({TokenKind::kEnd, "", line_, column_});
        return tokens;
      }
      tokens.push_back(next());
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(int line, int column, std::string message) const {
    throw ParseFailure{"SYNTAX", line, column, std::move(message)};
  }

  Token next() {
    Token token;
    token.line = line_;
    token.column = column_;
    char c = peek();

    if (is_letter(c)) {
      std::size_t start = pos_;
      while (!at_end()) {
        if (is_word(peek()) || (peek() == '-' && is_letter_or_digit(peek(1)))) {
          advance();
        } else {
          break;
        }
      }
      token.text = std::string(text_.substr(start, pos_ - start));
      token.kind = is_keyword(token.text) ? TokenKind::kKeyword : TokenKind::kIdent;
      return token;
    }

    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) return number(token);

    if (c == '"') return string(token);

    static constexpr std::array<std::string_view, 6> kTwoChar = {"->", "==", "!=",
                                                                 "<=", ">=", "&&"};
    for (auto op : kTwoChar) {
      if (peek() == op[0] && peek(1) == op[1]) {
        advance();
        advance();
        token.kind = TokenKind::kPunct;
        token.text = std::string(op);
        return token;
      }
    }
    if (std::string_view("{};,.()[]/=*<>").find(c) != std::string_view::npos) {
      advance();
      token.kind = TokenKind::kPunct;
      token.text = std::string(1, c);
      return token;
    }
    fail(token.line, token.column, std::string("unexpected character '") + c + "'");
  }

  static bool is_letter_or_digit(char c) { return is_letter(c) || is_digit(c); }

  Token number(Token token) {
    std::size_t start = pos_;
    bool is_float = false;
    if (peek() == '-') advance();
    while (is_digit(peek())) advance();
    if (peek() == '.' && is_digit(peek(1))) {
      is_float = true;
      advance();
      while (is_digit(peek())) advance();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      is_float = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      while (is_digit(peek())) advance();
    }
    if (is_letter(peek()) || peek() == '_') {
      fail(line_, column_, "malformed number");
    }
    token.kind = is_float ? TokenKind::kFloat : TokenKind::kInt;
    token.text = std::string(text_.substr(start, pos_ - start));
    return token;
  }

  Token string(Token token) {
    advance();  // opening quote
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n') fail(token.line, token.column, "unterminated string");
      char c = peek();
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail(token.line, token.column, "unterminated string");
        char escaped = peek();
        advance();
        switch (escaped) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default: fail(line_, column_ - 1, std::string("unknown escape '\\") + escaped + "'");
        }
      } else {
        value += c;
      }
    }
    token.kind = TokenKind::kString;
    token.text = std::move(value);
    return token;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto keyword : kKeywords) {
    if (keyword == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace macc::detail
