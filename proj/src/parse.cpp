/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/parse.hpp"

#include <cctype>
#include <string>

#include "ipart/error.hpp"

namespace ipart {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), opt_(options) {}

  HahnElem parse_all() {
    HahnElem e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

  UPoly upoly_all() {
    UPoly p = upoly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  mpq_class rational_all() {
    mpq_class q = signed_rational();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw Error(kind, msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  mpq_class signed_rational() {
    const bool neg = accept('-');
    mpq_class q(integer());
    if (accept('/')) {
      mpz_class d = integer();
      if (d == 0) fail("zero denominator in rational literal", ErrorKind::ZeroDenominator);
      q = mpq_class(q.get_num(), d);
      q.canonicalize();
    }
    return neg ? mpq_class(-q) : q;
  }

  HahnElem constant(const RealAlgNum& c) {
    if (opt_.coeff_field == CoeffField::Rational && !c.is_rational())
      fail("irrational constant " + c.to_string() + " with rational coefficients", ErrorKind::CoefficientFieldRestricted);
    return HahnElem::constant(c, opt_.rank);
  }

  HahnElem expr() {
    HahnElem acc = term();
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  HahnElem term() {
    HahnElem acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        HahnElem d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero", ErrorKind::DivisionByZero);
        }
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  // '^' operand: integer, -integer, or a parenthesized signed rational.
  mpq_class exponent() {
    skip_ws();
    if (accept('(')) {
      mpq_class q = signed_rational();
      expect(')');
      return q;
    }
    if (accept('-')) {
      if (!peek_digit()) fail("exponent must be a rational literal", ErrorKind::UnsupportedExponent);
      return -mpq_class(integer());
    }
    if (!peek_digit()) fail("exponent must be a rational literal", ErrorKind::UnsupportedExponent);
    return mpq_class(integer());
  }

  HahnElem factor() {
    if (accept('-')) return -factor();
    std::optional<std::size_t> var;
    HahnElem b = base(var);
    if (!accept('^')) return b;
    const std::size_t at = pos_;
    mpq_class e = exponent();
    if (var) return HahnElem::monomial(RealAlgNum(1), ExponentVec::unit(opt_.rank, *var, e));
    if (e.get_den() != 1) {
      pos_ = at;
      fail("non-integer exponent on a non-variable base", ErrorKind::UnsupportedExponent);
    }
    if (b.is_zero() && sgn(e) < 0) fail("negative power of zero", ErrorKind::DivisionByZero);
    return pow(b, e.get_num().get_si());
  }

  HahnElem base(std::optional<std::size_t>& var) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (peek_digit()) return HahnElem::constant(RealAlgNum(integer()), opt_.rank);
    if (accept('(')) {
      HahnElem e = expr();
      expect(')');
      return e;
    }
    if (accept_word("alg")) {
      expect('(');
      UPoly p = upoly();
      expect(',');
      mpq_class lo = signed_rational();
      expect(',');
      mpq_class hi = signed_rational();
      expect(')');
      return constant(RealAlgNum::make(p, lo, hi));
    }
    if (accept_word("sqrt")) {
      expect('(');
      const std::size_t at = pos_;
      HahnElem e = expr();
      expect(')');
      auto c = e.as_constant();
      if (!c) {
        pos_ = at;
        fail("sqrt of a non-constant expression", ErrorKind::UnsupportedExponent);
      }
      return constant(nth_root(*c, 2));
    }
    if (text_[pos_] == 't') {
      ++pos_;
      std::size_t index = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const std::size_t at = pos_;
        mpz_class n = integer();
        if (n < 1 || n > opt_.rank) {
          pos_ = at;
          fail("unknown variable t" + n.get_str() + " (rank " + std::to_string(opt_.rank) + ")",
               ErrorKind::UnknownVariable);
        }
        index = n.get_ui();
      }
      var = index - 1;
      return HahnElem::variable(index - 1, opt_.rank);
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail("unknown variable " + std::string(text_.substr(pos_, end - pos_)), ErrorKind::UnknownVariable);
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  // Sum of terms [sign] [coeff] ['*'] ['x' ['^' n]], coefficients rational.
  UPoly upoly() {
    UPoly acc;
    bool first = true;
    while (true) {
      skip_ws();
      bool neg = false;
      if (accept('-')) neg = true;
      else if (!first && !accept('+')) break;
      first = false;
      mpq_class c = 1;
      bool have_coeff = false;
      if (peek_digit()) {
        c = mpq_class(integer());
        if (accept('/')) {
          c = mpq_class(c.get_num(), integer());
          c.canonicalize();
        }
        have_coeff = true;
        accept('*');
      }
      int degree = 0;
      if (accept('x')) {
        degree = 1;
        if (accept('^')) degree = static_cast<int>(integer().get_si());
      } else if (!have_coeff) {
        fail("expected polynomial term in x");
      }
      acc = acc + UPoly::monomial(neg ? mpq_class(-c) : c, degree);
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc.primitive();
  }

  std::string_view text_;
  ParseOptions opt_;
  std::size_t pos_ = 0;
};

}  // namespace

HahnElem parse_expr(std::string_view text, const ParseOptions& options) { return Parser(text, options).parse_all(); }

UPoly parse_upoly(std::string_view text) { return Parser(text, {}).upoly_all(); }

mpq_class parse_rational(std::string_view text) { return Parser(text, {}).rational_all(); }

}  // namespace ipart
