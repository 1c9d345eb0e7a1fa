#include "milnorkit/expr.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "milnorkit/error.hpp"

namespace milnorkit {

namespace {

enum class TokenKind { number, identifier, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    std::size_t line = line_;
    std::size_t column = column_;
    if (pos_ >= text_.size()) return {TokenKind::end, {}, line, column};

    char c = text_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        advance();
        std::size_t frac_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        if (pos_ == frac_start) throw ParseError("malformed number", line, column);
      }
      return {TokenKind::number, text_.substr(start, pos_ - start), line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
      return {TokenKind::identifier, text_.substr(start, pos_ - start), line, column};
    }

    advance();
    switch (c) {
      case '+': return {TokenKind::plus, text_.substr(start, 1), line, column};
      case '-': return {TokenKind::minus, text_.substr(start, 1), line, column};
      case '*': return {TokenKind::star, text_.substr(start, 1), line, column};
      case '/': return {TokenKind::slash, text_.substr(start, 1), line, column};
      case '^': return {TokenKind::caret, text_.substr(start, 1), line, column};
      case '(': return {TokenKind::lparen, text_.substr(start, 1), line, column};
      case ')': return {TokenKind::rparen, text_.substr(start, 1), line, column};
      default: break;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", line, column);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
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

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& context) : lexer_(text), context_(context) {
    current_ = lexer_.next();
  }

  Polynomial parse() {
    Polynomial result = sum();
    if (current_.kind != TokenKind::end) {
      if (current_.kind == TokenKind::identifier || current_.kind == TokenKind::number ||
          current_.kind == TokenKind::lparen) {
        fail("implicit multiplication is not allowed; write '*'");
      }
      fail("unexpected '" + std::string(current_.text) + "'");
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    if (current_.kind == TokenKind::end) {
      throw ParseError(message + " at end of input", current_.line, current_.column);
    }
    throw ParseError(message, current_.line, current_.column);
  }

  void consume() { current_ = lexer_.next(); }

  Polynomial sum() {
    Polynomial acc = product();
    while (current_.kind == TokenKind::plus || current_.kind == TokenKind::minus) {
      bool minus = current_.kind == TokenKind::minus;
      consume();
      Polynomial rhs = product();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (current_.kind == TokenKind::star || current_.kind == TokenKind::slash) {
      bool divide = current_.kind == TokenKind::slash;
      Token op = current_;
      consume();
      Polynomial rhs = unary();
      if (divide) {
        auto c = rhs.constant_value();
        if (!c) throw ParseError("division by a non-constant expression", op.line, op.column);
        if (*c == 0) throw ParseError("division by zero", op.line, op.column);
        acc *= Rational(1 / *c);
      } else {
        acc *= rhs;
      }
    }
    return acc;
  }

  Polynomial unary() {
    if (current_.kind == TokenKind::minus) {
      consume();
      return -unary();
    }
    if (current_.kind == TokenKind::plus) {
      consume();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (current_.kind != TokenKind::caret) return base;
    consume();
    Token at = current_;
    Polynomial exponent = unary();
    auto value = exponent.constant_value();
    if (!value) throw ParseError("exponent must be a constant", at.line, at.column);
    if (*value < 0) throw ParseError("negative exponent", at.line, at.column);
    if (value->get_den() != 1) throw ParseError("non-integer exponent", at.line, at.column);
    if (value->get_num() > std::numeric_limits<std::uint16_t>::max()) {
      throw ParseError("exponent too large", at.line, at.column);
    }
    return base.pow(static_cast<unsigned>(value->get_num().get_ui()));
  }

  Polynomial primary() {
    switch (current_.kind) {
      case TokenKind::number: {
        Rational value = make_rational(current_.text);
        consume();
        return Polynomial(context_, value);
      }
      case TokenKind::identifier: {
        auto index = context_->index_of(current_.text);
        if (!index) fail("unknown identifier '" + std::string(current_.text) + "'");
        consume();
        return Polynomial::variable(context_, *index);
      }
      case TokenKind::lparen: {
        consume();
        Polynomial inner = sum();
        if (current_.kind != TokenKind::rparen) fail("expected ')'");
        consume();
        return inner;
      }
      case TokenKind::end:
        fail("expected an operand");
      default:
        fail("unexpected '" + std::string(current_.text) + "'");
    }
  }

  Lexer lexer_;
  const ContextPtr& context_;
  Token current_{};
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& context) {
  return Parser(text, context).parse();
}

}  // namespace milnorkit
