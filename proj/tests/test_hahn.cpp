/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "ipart/error.hpp"
#include "ipart/hahn.hpp"
#include "ipart/kpoly.hpp"
#include "ipart/parse.hpp"
#include "ipart/sampling.hpp"

using namespace ipart;

namespace {

HahnElem P(const char* s, std::size_t rank = 1) { return parse_expr(s, {rank}); }
ExponentVec E(long e) { return ExponentVec{mpq_class(e)}; }
GenPoly G(const char* s) { return P(s).num(); }

void check_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL("expected " << to_string(kind));
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace

TEST_CASE("exponent vectors are lexicographic and translation invariant") {
  ExponentVec a{1, 0}, b{0, 5}, c{mpq_class(-1, 2), 3};
  CHECK(b < a);
  CHECK(a + c > b + c);
  CHECK(ExponentVec(2).is_zero());
  CHECK(ExponentVec{0, -1}.sign() == -1);
}

TEST_CASE("he_make normalizes") {
  GenPoly num(1, {{E(1), RealAlgNum(2)}, {E(1), RealAlgNum(3)}});
  HahnElem x = HahnElem::make(num, GenPoly::constant(1, 1));
  CHECK(x.to_string() == "5*t1");
  CHECK(x.den().is_one());

  HahnElem one = HahnElem::make(G("t"), G("t"));
  CHECK(one.to_string() == "1");

  HahnElem y = HahnElem::make(G("1 + t"), G("t^2"));
  CHECK(y.num() == G("t^-2 + t^-1"));
  CHECK(y.den().is_one());

  check_kind(ErrorKind::ZeroDenominator, [] { HahnElem::make(G("1"), GenPoly(1)); });
}

TEST_CASE("he_arith") {
  HahnElem g = P("1/(1-t)");
  CHECK((g + P("-1/(1-t)")).is_zero());
  CHECK((g * P("1 - t")).to_string() == "1");
  CHECK((P("t^-1") + P("t^-1")).to_string() == "2*t1^-1");
  check_kind(ErrorKind::DivisionByZero, [&] { g / HahnElem(); });
}

TEST_CASE("he_sign") {
  CHECK(P("t").sign() == 1);
  for (long q = 1; q < 50; ++q) CHECK(P("t") < HahnElem::constant(RealAlgNum(mpq_class(1, q))));
  CHECK((P("t^-1") - P("1000000")).sign() == 1);
  CHECK((P("1/(1-t)") - P("1")).sign() == 1);
  CHECK(P("-t^(1/2) + t^-3").sign() == 1);
}

TEST_CASE("he_valuation") {
  CHECK(*valuation(P("5*t^-3 + t")) == E(-3));
  CHECK(!valuation(HahnElem()).has_value());
  CHECK(*valuation(P("(1 + t)/t^2")) == E(-2));
}

TEST_CASE("he_expand") {
  TruncatedExpansion e = expand(P("1/(1-t)"), E(3));
  CHECK(e.as_poly(1) == G("1 + t + t^2 + t^3"));
  CHECK(!e.exact);
  CHECK(e.to_string() == "1 + t1 + t1^2 + t1^3 + O(t1^3)");

  TruncatedExpansion f = expand(P("t^-1"), E(5));
  CHECK(f.as_poly(1) == G("t^-1"));
  CHECK(f.exact);

  TruncatedExpansion g = expand(P("1/(1+t)"), E(2));
  CHECK(g.as_poly(1) == G("1 - t + t^2"));
  CHECK(!g.exact);

  // rank 2 with a 1-unit whose first coordinate is 0 is refused
  check_kind(ErrorKind::TruncationNotSupported, [] { expand(P("1/(1+t2)", 2), ExponentVec{0, 0}); });
  TruncatedExpansion h = expand(P("1/(1-t1*t2^-5)", 2), ExponentVec{2, 0});
  CHECK(h.as_poly(2) == P("1 + t1*t2^-5 + t1^2*t2^-10", 2).num());
}

TEST_CASE("he_decompose") {
  Decomposition d = decompose(P("t^-1 + 1/2 + t^3"));
  CHECK(d.sigma == P("t^-1"));
  CHECK(d.constant == RealAlgNum(mpq_class(1, 2)));
  CHECK(d.tail_sign == 1);

  Decomposition c = decompose(P("3"));
  CHECK(c.sigma.is_zero());
  CHECK(c.constant == RealAlgNum(3));
  CHECK(c.tail_sign == 0);

  Decomposition g = decompose(P("1/(1-t)"));
  CHECK(g.sigma.is_zero());
  CHECK(g.constant == RealAlgNum(1));
  CHECK(g.tail_sign == 1);
}

TEST_CASE("he_nth_root_trunc") {
  TruncatedExpansion r = nth_root_trunc(P("1 + t"), 2, E(2));
  CHECK(r.as_poly(1) == G("1 + 1/2*t - 1/8*t^2"));
  CHECK(!r.exact);

  TruncatedExpansion m = nth_root_trunc(P("t^2"), 2, E(5));
  CHECK(m.as_poly(1) == G("t"));
  CHECK(m.exact);

  check_kind(ErrorKind::NotPositive, [] { nth_root_trunc(P("-t"), 2, E(2)); });

  TruncatedExpansion s = nth_root_trunc(P("1 + 2*t + t^2"), 2, E(4));
  CHECK(s.as_poly(1) == G("1 + t"));
  CHECK(s.exact);

  // cube root of 8 t^3 (1 + t): 2 t (1 + t/3 - t^2/9)
  TruncatedExpansion c = nth_root_trunc(P("8*t^3 + 8*t^4"), 3, E(3));
  CHECK(c.as_poly(1) == G("2*t + 2/3*t^2 - 2/9*t^3"));
}

TEST_CASE("poly_sturm_count") {
  const std::size_t rank = 1;
  KPoly a(rank, {P("-t"), P("0"), P("1")});
  CHECK(poly_sturm_count(a, KBound::at(P("0")), KBound::at(P("1"))) == 1);
  KPoly b(rank, {P("1"), P("0"), P("1")});
  CHECK(poly_sturm_count(b, KBound::neg_inf(), KBound::pos_inf()) == 0);
  KPoly c(rank, {P("-1 - t"), P("0"), P("1")});
  CHECK(poly_sturm_count(c, KBound::at(P("0")), KBound::at(P("2"))) == 1);
  CHECK(poly_sturm_count(c, KBound::neg_inf(), KBound::pos_inf()) == 2);
  // roots +-t^(1/2) are infinitesimal, so (t, 1] misses the positive one only if t > t^(1/2): it does not
  CHECK(poly_sturm_count(a, KBound::at(P("t")), KBound::at(P("1"))) == 1);
  CHECK(poly_sturm_count(a, KBound::at(P("t^(1/4)")), KBound::at(P("1"))) == 0);
  check_kind(ErrorKind::ZeroPolynomial, [] { poly_sturm_count(KPoly(1), KBound::neg_inf(), KBound::pos_inf()); });
}

TEST_CASE("ordered field laws on samples") {
  Sampler s(21);
  ElementShape shape;
  for (int i = 0; i < 150; ++i) {
    HahnElem x = s.element(shape), y = s.element(shape), z = s.element(shape);
    CHECK((x * y).sign() == x.sign() * y.sign());
    if (x < y) CHECK(x + z < y + z);
    if (!x.is_zero()) CHECK(x * x.inverse() == HahnElem::constant(1));
    CHECK((x + y) - y == x);
  }
}

TEST_CASE("valuation laws on samples") {
  Sampler s(22);
  for (std::size_t rank : {1u, 2u}) {
    ElementShape shape;
    shape.rank = rank;
    for (int i = 0; i < 100; ++i) {
      HahnElem x = s.nonzero_element(shape), y = s.nonzero_element(shape);
      CHECK(*valuation(x * y) == *valuation(x) + *valuation(y));
      HahnElem sum = x + y;
      if (sum.is_zero()) continue;
      ExponentVec m = std::min(*valuation(x), *valuation(y));
      CHECK(*valuation(sum) >= m);
      if (!(*valuation(x) == *valuation(y))) CHECK(*valuation(sum) == m);
    }
  }
}

TEST_CASE("expansion re-multiplication identity") {
  Sampler s(23);
  for (std::size_t rank : {1u, 2u}) {
    ElementShape shape;
    shape.rank = rank;
    for (int i = 0; i < 80; ++i) {
      HahnElem x = s.element(shape);
      ExponentVec bound = s.exponent(shape);
      TruncatedExpansion e = expand(x, bound);
      GenPoly residual = e.as_poly(rank) * x.den() - x.num();
      for (const auto& t : residual.terms()) CHECK(t.expo > bound);
      for (const auto& t : e.terms) CHECK(t.expo <= bound);
      if (e.exact) CHECK(HahnElem(e.as_poly(rank)) == x);
    }
  }
}

TEST_CASE("decomposition identity") {
  Sampler s(24);
  ElementShape shape;
  shape.algebraic = true;
  for (int i = 0; i < 120; ++i) {
    HahnElem x = s.element(shape);
    Decomposition d = decompose(x);
    HahnElem c = HahnElem::constant(d.constant);
    HahnElem tail = x - d.sigma - c;
    CHECK(d.sigma + c + tail == x);
    for (const auto& t : d.sigma.num().terms()) CHECK(t.expo.sign() < 0);
    CHECK(d.sigma.den().is_one());
    CHECK(tail.sign() == d.tail_sign);
    if (!tail.is_zero()) CHECK(valuation(tail)->sign() > 0);
  }
}

TEST_CASE("Sturm counts match constructed roots") {
  Sampler s(25);
  ElementShape shape;
  shape.fractions = false;
  shape.max_terms = 2;
  for (int i = 0; i < 40; ++i) {
    std::vector<HahnElem> lin_roots;
    KPoly p(1, {P("1")});
    int expected = 0;
    const long n_lin = s.integer(0, 2);
    for (long k = 0; k < n_lin; ++k) {
      HahnElem a = s.element(shape);
      bool fresh = true;
      for (const auto& r : lin_roots) fresh = fresh && !(r == a);
      if (!fresh) continue;
      lin_roots.push_back(a);
      p = p * KPoly(1, {-a, P("1")});
      ++expected;
    }
    if (s.coin()) {
      // X^2 - b with b = c t^(odd), never a square of a sampled linear root's exponent pattern
      HahnElem b = HahnElem::monomial(RealAlgNum(s.integer(1, 5)), ExponentVec{mpq_class(2 * s.integer(-1, 1) + 1, 3)});
      bool clash = false;
      for (const auto& r : lin_roots) clash = clash || (r * r == b);
      if (!clash) {
        p = p * KPoly(1, {-b, P("0"), P("1")});
        expected += 2;
      }
    } else {
      HahnElem b = s.positive_element(shape);
      p = p * KPoly(1, {b, P("0"), P("1")});
    }
    CHECK(poly_sturm_count(p, KBound::neg_inf(), KBound::pos_inf()) == expected);
  }
}
