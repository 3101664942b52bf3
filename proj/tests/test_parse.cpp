/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "ipart/error.hpp"
#include "ipart/parse.hpp"
#include "ipart/sampling.hpp"

using namespace ipart;

namespace {

ErrorKind kind_of(const char* text, ParseOptions opts = {}) {
  try {
    parse_expr(text, opts);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::SyntaxError;
}

}  // namespace

TEST_CASE("parse_expr examples") {
  HahnElem g = parse_expr("1/(1-t1)");
  CHECK(g.num() == GenPoly::constant(1, 1));
  CHECK(g.den() == GenPoly(1, {{ExponentVec{0}, RealAlgNum(1)}, {ExponentVec{1}, RealAlgNum(-1)}}));

  HahnElem h = parse_expr("3*t1^(1/2)");
  CHECK(h == HahnElem::monomial(3, ExponentVec{mpq_class(1, 2)}));

  CHECK(kind_of("t1^t1") == ErrorKind::UnsupportedExponent);
}

TEST_CASE("parse_expr errors") {
  CHECK(kind_of("(1+t)^(1/2)") == ErrorKind::UnsupportedExponent);
  CHECK(kind_of("t3") == ErrorKind::UnknownVariable);
  CHECK(kind_of("t0", {3}) == ErrorKind::UnknownVariable);
  CHECK(kind_of("1 +") == ErrorKind::SyntaxError);
  CHECK(kind_of("(1") == ErrorKind::SyntaxError);
  CHECK(kind_of("1 $ 2") == ErrorKind::SyntaxError);
  CHECK(kind_of("sqrt(t)") == ErrorKind::UnsupportedExponent);
  CHECK(kind_of("1/(t - t)") == ErrorKind::DivisionByZero);
  CHECK(kind_of("sqrt(2)", {1, CoeffField::Rational}) == ErrorKind::CoefficientFieldRestricted);
  CHECK(kind_of("alg(x^2+1, 0, 1)") == ErrorKind::NoRootInInterval);
  try {
    parse_expr("1 + * 2");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("parse_expr forms") {
  CHECK(parse_expr("sqrt(2)*sqrt(2)") == HahnElem::constant(2));
  CHECK(parse_expr("sqrt(4)") == HahnElem::constant(2));
  CHECK(parse_expr("alg(x^2-2, 1, 2)") == parse_expr("sqrt(2)"));
  CHECK(parse_expr("(1+t)^2") == parse_expr("1 + 2*t + t^2"));
  CHECK(parse_expr("(1+t)^-1") == parse_expr("1/(1+t)"));
  CHECK(parse_expr("t^-1") == parse_expr("1/t"));
  CHECK(parse_expr("t1^(-3/2)") == parse_expr("1/(t*t^(1/2))"));
  CHECK(parse_expr("-t2^2*t1", {2}) == -(parse_expr("t1", {2}) * parse_expr("t2*t2", {2})));
  CHECK(parse_expr("2/3") == HahnElem::constant(mpq_class(2, 3)));
  CHECK(parse_expr("--1") == HahnElem::constant(1));
}

TEST_CASE("parse_upoly and parse_rational") {
  CHECK(parse_upoly("x^2-2") == UPoly{-2, 0, 1});
  CHECK(parse_upoly("3*x^3 - x + 7") == UPoly{7, -1, 0, 3});
  CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
  CHECK(parse_rational("5") == 5);
}

TEST_CASE("print/parse round trip") {
  Sampler s(31);
  int n = 0;
  for (std::size_t rank : {1u, 2u, 3u}) {
    for (bool algebraic : {false, true}) {
      ElementShape shape;
      shape.rank = rank;
      shape.algebraic = algebraic;
      for (int i = 0; i < 60; ++i, ++n) {
        HahnElem x = s.element(shape);
        const std::string text = x.to_string();
        HahnElem y = parse_expr(text, {rank});
        CHECK_MESSAGE((x - y).is_zero(), text);
        CHECK(y.to_string() == text);
      }
    }
  }
  CHECK(n >= 300);
}
