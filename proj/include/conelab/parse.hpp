#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "conelab/polynomial.hpp"

namespace conelab {

struct Token {
  enum class Kind { Identifier, Number, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Splits text into identifiers, unsigned integers and symbols ("->" is one
/// symbol). Whitespace and comments starting with '#' or "//" are skipped.
std::vector<Token> tokenize(std::string_view text);

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool at_symbol(std::string_view s) const;
  bool at_word(std::string_view w) const;
  /// Consumes the symbol when present.
  bool accept(std::string_view symbol);
  Token expect_symbol(std::string_view symbol);
  Token expect_identifier(std::string_view what);
  Token expect_number(std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& token, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Infix polynomial: + - * ^ with integer exponents, parentheses, integer
/// literals and division by nonzero constants.
Polynomial parse_expression(TokenCursor& cursor, const RingPtr& ring);
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

/// Comma-separated polynomials.
std::vector<Polynomial> parse_polynomials(const RingPtr& ring, std::string_view text);

}  // namespace conelab
