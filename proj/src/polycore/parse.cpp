#include "conelab/parse.hpp"

#include <cctype>

#include "conelab/errors.hpp"

namespace conelab {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, col = column, start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Kind::Identifier, std::string(text.substr(start, j - start)), l, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(text.substr(start, j - start)), l, col});
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Kind::Symbol, "->", l, col});
      advance(2);
    } else if (std::string_view("+-*/^()[],;=:").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, c), l, col});
      advance(1);
    } else {
      throw ParseError(l, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", line, column});
  return out;
}

TokenCursor::TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != Token::Kind::End) tokens_.push_back({Token::Kind::End, "", 1, 1});
}

const Token& TokenCursor::peek(std::size_t ahead) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

Token TokenCursor::next() {
  Token t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenCursor::at_symbol(std::string_view s) const { return peek().kind == Token::Kind::Symbol && peek().text == s; }

bool TokenCursor::at_word(std::string_view w) const {
  return peek().kind == Token::Kind::Identifier && peek().text == w;
}

bool TokenCursor::accept(std::string_view symbol) {
  if (!at_symbol(symbol)) return false;
  next();
  return true;
}

namespace {
std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End:
      return "end of input";
    case Token::Kind::Number:
      return "number " + t.text;
    case Token::Kind::Identifier:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}
}  // namespace

Token TokenCursor::expect_symbol(std::string_view symbol) {
  if (!at_symbol(symbol)) fail("expected '" + std::string(symbol) + "', found " + describe(peek()));
  return next();
}

Token TokenCursor::expect_identifier(std::string_view what) {
  if (peek().kind != Token::Kind::Identifier) fail("expected " + std::string(what) + ", found " + describe(peek()));
  return next();
}

Token TokenCursor::expect_number(std::string_view what) {
  if (peek().kind != Token::Kind::Number) fail("expected " + std::string(what) + ", found " + describe(peek()));
  return next();
}

void TokenCursor::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenCursor::fail_at(const Token& token, const std::string& message) const {
  throw ParseError(token.line, token.column, message);
}

namespace {

Scalar number_value(const RingPtr& ring, const Token& t) { return Scalar(ring->field(), mpq_class(mpz_class(t.text))); }

Polynomial parse_factor(TokenCursor& cur, const RingPtr& ring);

Polynomial parse_atom(TokenCursor& cur, const RingPtr& ring) {
  const Token& t = cur.peek();
  if (t.kind == Token::Kind::Number) {
    cur.next();
    return Polynomial::constant(ring, number_value(ring, t));
  }
  if (t.kind == Token::Kind::Identifier) {
    const auto index = ring->index_of(t.text);
    if (!index) cur.fail("unknown variable '" + t.text + "' in " + ring->to_string());
    cur.next();
    return Polynomial::variable(ring, *index);
  }
  if (cur.accept("(")) {
    Polynomial p = parse_expression(cur, ring);
    cur.expect_symbol(")");
    return p;
  }
  cur.fail("expected a number, variable or '(', found '" +
           (t.kind == Token::Kind::End ? std::string("end of input") : t.text) + "'");
}

Polynomial parse_factor(TokenCursor& cur, const RingPtr& ring) {
  if (cur.accept("-")) return -parse_factor(cur, ring);
  if (cur.accept("+")) return parse_factor(cur, ring);
  Polynomial base = parse_atom(cur, ring);
  if (cur.accept("^")) {
    const Token e = cur.expect_number("an exponent");
    if (e.text.size() > 6) cur.fail_at(e, "exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(e.text)));
  }
  return base;
}

Polynomial parse_term(TokenCursor& cur, const RingPtr& ring) {
  Polynomial p = parse_factor(cur, ring);
  while (true) {
    if (cur.accept("*")) {
      p = p * parse_factor(cur, ring);
    } else if (cur.at_symbol("/")) {
      const Token slash = cur.next();
      const Polynomial d = parse_factor(cur, ring);
      if (!d.is_constant() || d.is_zero()) cur.fail_at(slash, "division is only allowed by nonzero constants");
      p = p.scaled(d.constant_term().inverse());
    } else {
      return p;
    }
  }
}

}  // namespace

Polynomial parse_expression(TokenCursor& cur, const RingPtr& ring) {
  Polynomial p = parse_term(cur, ring);
  while (true) {
    if (cur.accept("+"))
      p += parse_term(cur, ring);
    else if (cur.accept("-"))
      p -= parse_term(cur, ring);
    else
      return p;
  }
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  TokenCursor cur(tokenize(text));
  Polynomial p = parse_expression(cur, ring);
  if (!cur.at_end()) cur.fail("unexpected '" + cur.peek().text + "' after polynomial");
  return p;
}

std::vector<Polynomial> parse_polynomials(const RingPtr& ring, std::string_view text) {
  TokenCursor cur(tokenize(text));
  std::vector<Polynomial> out;
  if (cur.at_end()) return out;
  do {
    out.push_back(parse_expression(cur, ring));
  } while (cur.accept(","));
  if (!cur.at_end()) cur.fail("expected ',' or end of list, found '" + cur.peek().text + "'");
  return out;
}

}  // namespace conelab
