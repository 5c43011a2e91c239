// Copyright 2026 The cremona-kit Authors
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

#include "cremona/text.hpp"

#include <cctype>

#include "cremona/error.hpp"

namespace cremona {

namespace {

enum class TokenKind { kNumber, kVariable, kImaginary, kSymbol, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  mpz_class number;
  std::size_t var = 0;
  char symbol = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParseError,
         what + " at offset " + std::to_string(pos_) + " in '" +
             std::string(text_) + "'");
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    current_ = Token{};
    if (pos_ == text_.size()) return;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      current_.kind = TokenKind::kNumber;
      current_.number = mpz_class(std::string(text_.substr(pos_, end - pos_)));
      pos_ = end;
      return;
    }
    if (c == 'x') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      if (end == pos_ + 1) error("variable without index");
      current_.kind = TokenKind::kVariable;
      current_.var = std::stoul(std::string(text_.substr(pos_ + 1, end - pos_ - 1)));
      pos_ = end;
      return;
    }
    if (c == 'i') {
      current_.kind = TokenKind::kImaginary;
      ++pos_;
      return;
    }
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      current_.kind = TokenKind::kSymbol;
      current_.symbol = c;
      ++pos_;
      return;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, FieldSpec field, std::size_t nvars,
                   std::size_t first_var)
      : lexer_(text), field_(field), nvars_(nvars), first_var_(first_var) {}

  Polynomial parse() {
    if (lexer_.peek().kind == TokenKind::kEnd) lexer_.error("empty expression");
    Polynomial p = expression();
    if (lexer_.peek().kind != TokenKind::kEnd) lexer_.error("trailing input");
    return p;
  }

 private:
  bool at_symbol(char c) const {
    return lexer_.peek().kind == TokenKind::kSymbol && lexer_.peek().symbol == c;
  }

  bool starts_atom() const {
    const Token& t = lexer_.peek();
    return t.kind == TokenKind::kNumber || t.kind == TokenKind::kVariable ||
           t.kind == TokenKind::kImaginary ||
           (t.kind == TokenKind::kSymbol && t.symbol == '(');
  }

  Polynomial expression() {
    Polynomial p = term();
    while (at_symbol('+') || at_symbol('-')) {
      const char op = lexer_.take().symbol;
      Polynomial rhs = term();
      if (op == '+') {
        p += rhs;
      } else {
        p -= rhs;
      }
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (true) {
      if (at_symbol('*')) {
        lexer_.take();
        p *= factor();
      } else if (at_symbol('/')) {
        lexer_.take();
        const Polynomial divisor = factor();
        if (divisor.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
        if (!divisor.is_constant()) lexer_.error("division only by a constant");
        p *= divisor.leading_coefficient().inverse();
      } else if (starts_atom()) {
        p *= power();
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    if (at_symbol('-')) {
      lexer_.take();
      return -factor();
    }
    if (at_symbol('+')) {
      lexer_.take();
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (at_symbol('^')) {
      lexer_.take();
      if (lexer_.peek().kind != TokenKind::kNumber) lexer_.error("exponent expected");
      const mpz_class e = lexer_.take().number;
      if (!e.fits_uint_p() || e > 4096) lexer_.error("exponent too large");
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial atom() {
    Token t = lexer_.take();
    switch (t.kind) {
      case TokenKind::kNumber:
        return Polynomial::constant(Scalar(field_, mpq_class(t.number)), nvars_);
      case TokenKind::kImaginary:
        return Polynomial::constant(Scalar::imaginary_unit(field_), nvars_);
      case TokenKind::kVariable:
        if (t.var < first_var_ || t.var >= first_var_ + nvars_) {
          lexer_.error("variable x" + std::to_string(t.var) + " out of range");
        }
        return Polynomial::variable(field_, nvars_, t.var - first_var_);
      case TokenKind::kSymbol:
        if (t.symbol == '(') {
          Polynomial p = expression();
          if (!at_symbol(')')) lexer_.error("')' expected");
          lexer_.take();
          return p;
        }
        lexer_.error(std::string("unexpected '") + t.symbol + "'");
      case TokenKind::kEnd:
        lexer_.error("unexpected end of input");
    }
    lexer_.error("unreachable");
  }

  Lexer lexer_;
  FieldSpec field_;
  std::size_t nvars_;
  std::size_t first_var_;
};

std::string format_monomial(const Exponents& e, std::size_t first_var) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(k + first_var);
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out;
}

}  // namespace

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

std::string_view strip_enclosing(std::string_view text, char open, char close) {
  text = trim(text);
  if (text.size() < 2 || text.front() != open || text.back() != close) {
    fail(ErrorCode::kParseError, std::string("expected '") + open + "...'" +
                                     close + "' around '" + std::string(text) + "'");
  }
  return text.substr(1, text.size() - 2);
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> pieces;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '(' || c == '[') {
      ++depth;
    } else if (c == ')' || c == ']') {
      if (--depth < 0) fail(ErrorCode::kParseError, "unbalanced brackets");
    } else if (c == sep && depth == 0) {
      pieces.emplace_back(trim(text.substr(start, k - start)));
      start = k + 1;
    }
  }
  if (depth != 0) fail(ErrorCode::kParseError, "unbalanced brackets");
  pieces.emplace_back(trim(text.substr(start)));
  return pieces;
}

FieldSpec parse_field(std::string_view text) {
  text = trim(text);
  if (text == "Q") return FieldSpec::rational();
  if (text == "Qi") return FieldSpec::gaussian();
  if (text.starts_with("Fp:")) {
    const std::string digits(text.substr(3));
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 19) {
      fail(ErrorCode::kParseError, "bad prime in field '" + std::string(text) + "'");
    }
    return FieldSpec::prime(std::stoull(digits));
  }
  fail(ErrorCode::kParseError, "unknown field '" + std::string(text) + "'");
}

Scalar parse_scalar(std::string_view text, FieldSpec field) {
  const Polynomial p = PolynomialParser(text, field, 0, 0).parse();
  return p.is_zero() ? Scalar::zero(field) : p.leading_coefficient();
}

Polynomial parse_polynomial(std::string_view text, FieldSpec field,
                            std::size_t nvars, std::size_t first_var) {
  return PolynomialParser(text, field, nvars, first_var).parse();
}

std::string format_polynomial(const Polynomial& p, std::size_t first_var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = format_monomial(e, first_var);
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else {
      const bool compound = c.field().is_gaussian() && sgn(c.real()) != 0 &&
                            sgn(c.imag()) != 0;
      term = compound ? "(" + c.to_string() + ")*" + mono
                      : c.to_string() + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Matrix parse_matrix(std::string_view text, FieldSpec field) {
  std::vector<std::vector<Scalar>> rows;
  for (const std::string& row : split_top_level(strip_enclosing(text, '[', ']'), ',')) {
    std::vector<Scalar> entries;
    for (const std::string& entry :
         split_top_level(strip_enclosing(row, '[', ']'), ',')) {
      entries.push_back(parse_scalar(entry, field));
    }
    rows.push_back(std::move(entries));
  }
  return Matrix::from_rows(rows);
}

std::vector<Scalar> parse_coordinates(std::string_view text, FieldSpec field) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') text = strip_enclosing(text, '[', ']');
  std::vector<Scalar> coords;
  for (const std::string& piece : split_top_level(text, ':')) {
    coords.push_back(parse_scalar(piece, field));
  }
  return coords;
}

}  // namespace cremona
