#include "idealkit/poly_io.hpp"

#include <cctype>

#include "idealkit/errors.hpp"

namespace idealkit {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column_offset)
      : text_(text), ring_(ring), line_(line), offset_(column_offset) {}

  Polynomial polynomial() {
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        break;
      }
      terms.push_back(term(sign));
      first = false;
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
    }
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term term(int sign) {
    Rational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      skip_ws();
    }
    std::vector<Monomial::exponent_type> exps(ring_->num_vars(), 0);
    bool have_factor = false;
    bool expect_factor = false;
    if (have_coef && peek() == '*') {
      ++pos_;
      skip_ws();
      expect_factor = true;
    }
    while (is_ident_start(peek())) {
      const std::size_t start = pos_;
      while (is_ident_char(peek())) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) fail_at(start, "unknown variable '" + std::string(name) + "'");
      skip_ws();
      Monomial::exponent_type e = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        e = static_cast<Monomial::exponent_type>(integer().get_si());
        skip_ws();
      }
      exps[*idx] += e;
      have_factor = true;
      expect_factor = false;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        expect_factor = true;
      } else {
        break;
      }
    }
    if (expect_factor) fail("expected a variable after '*'");
    if (!have_coef && !have_factor) fail("expected a term");
    if (sign < 0) coef = -coef;
    return {Monomial(std::move(exps)), coef};
  }

  Rational number() {
    mpz_class num = integer();
    mpz_class den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + pos + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line,
                            std::size_t column_offset) {
  return Parser(text, ring, line, column_offset).polynomial();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              std::size_t line, std::size_t column_offset) {
  std::vector<Polynomial> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_polynomial(text.substr(start, end - start), ring, line, column_offset + start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto ring = Ring::make({"_"}, {});
  Polynomial p = parse_polynomial(text, ring);
  if (!p.is_constant()) throw ParseError("expected a rational number", 1, 1);
  return p.is_zero() ? Rational(0) : p.terms()[0].coefficient;
}

}  // namespace idealkit
