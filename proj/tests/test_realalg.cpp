/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "ipart/error.hpp"
#include "ipart/realalg.hpp"

using namespace ipart;

namespace {
RealAlgNum sqrt2() { return RealAlgNum::make(UPoly{-2, 0, 1}, 1, 2); }
}

TEST_CASE("ra_make") {
  RealAlgNum r = sqrt2();
  CHECK(!r.is_rational());
  CHECK(r.sign() == 1);
  CHECK(r.defpoly() == UPoly{-2, 0, 1});

  RealAlgNum three = RealAlgNum::make(UPoly{-3, 1}, 3, 3);
  CHECK(three.is_rational());
  CHECK(three.rational() == 3);

  CHECK_THROWS_AS(RealAlgNum::make(UPoly{1, 0, 1}, 0, 1), Error);
  try {
    RealAlgNum::make(UPoly{1, 0, 1}, 0, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoRootInInterval);
  }
  try {
    RealAlgNum::make(UPoly{-2, 0, 1}, -2, 2);
    FAIL("expected NotIsolating");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIsolating);
  }
  // Endpoint roots collapse to the rational.
  CHECK(RealAlgNum::make(UPoly{-4, 0, 1}, 2, 5) == RealAlgNum(2));
  // Non-square-free input is reduced first.
  UPoly sq = UPoly{-2, 0, 1} * UPoly{-2, 0, 1};
  CHECK(RealAlgNum::make(sq, 1, 2) == sqrt2());
}

TEST_CASE("ra_arith") {
  RealAlgNum r = sqrt2();
  CHECK((r + (-r)).sign() == 0);
  RealAlgNum two = r * r;
  CHECK(two.is_rational());
  CHECK(two.rational() == 2);
  CHECK((RealAlgNum(1) / RealAlgNum(3)).rational() == mpq_class(1, 3));
  CHECK_THROWS_AS(RealAlgNum(1) / (r - r), Error);
}

TEST_CASE("ra_sign") {
  CHECK(sqrt2().sign() == 1);
  CHECK(RealAlgNum(0).sign() == 0);
  CHECK((sqrt2() - RealAlgNum(2)).sign() == -1);
  // sqrt(2) * sqrt(3) - sqrt(6) is zero; exercised through the zero-test path
  RealAlgNum s3 = RealAlgNum::make(UPoly{-3, 0, 1}, 1, 2);
  RealAlgNum s6 = RealAlgNum::make(UPoly{-6, 0, 1}, 2, 3);
  CHECK((sqrt2() * s3 - s6).sign() == 0);
  CHECK(compare(sqrt2() * s3, s6) == 0);
}

TEST_CASE("ra_floor") {
  CHECK(floor(sqrt2()) == 1);
  CHECK(floor(RealAlgNum(3)) == 3);
  CHECK(floor(-sqrt2()) == -2);
  CHECK(floor(RealAlgNum(mpq_class(-7, 2))) == -4);
  RealAlgNum s = RealAlgNum::make(UPoly{-1000001, 0, 1}, 1000, 1001);  // just above 1000
  CHECK(floor(s) == 1000);
}

TEST_CASE("ra_nth_root") {
  RealAlgNum r = nth_root(RealAlgNum(2), 2);
  CHECK(r == sqrt2());
  CHECK(r.defpoly() == UPoly{-2, 0, 1});
  CHECK(nth_root(RealAlgNum(4), 2).rational() == 2);
  CHECK(nth_root(RealAlgNum(-8), 3).rational() == -2);
  try {
    nth_root(RealAlgNum(-1), 2);
    FAIL("expected NegativeEvenRoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeEvenRoot);
  }
  // 4th root of 2 squared is sqrt 2
  RealAlgNum q = nth_root(RealAlgNum(2), 4);
  CHECK(q * q == sqrt2());
  CHECK(nth_root(sqrt2(), 2) == q);
}

TEST_CASE("textual form") {
  CHECK(sqrt2().to_string() == "alg(x^2-2, 1, 2)");
  CHECK(RealAlgNum(mpq_class(-3, 4)).to_string() == "-3/4");
}

TEST_CASE("real roots") {
  auto roots = real_roots(UPoly{-2, 0, 1} * UPoly{-1, 1});
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -sqrt2());
  CHECK(roots[1] == RealAlgNum(1));
  CHECK(roots[2] == sqrt2());
}

TEST_CASE("arithmetic inside one quadratic field stays quadratic") {
  RealAlgNum r2 = nth_root(RealAlgNum(2), 2);
  RealAlgNum a = RealAlgNum(1) + r2, b = RealAlgNum(3) - RealAlgNum(2) * r2;
  RealAlgNum p = a * b;
  CHECK(p == r2 - RealAlgNum(1));
  CHECK(p.defpoly().degree() == 2);
  CHECK((a * (r2 - RealAlgNum(1))) == RealAlgNum(1));
  RealAlgNum s = RealAlgNum(0);
  for (int k = 1; k <= 12; ++k) s = s + RealAlgNum(mpq_class(k, 7)) * r2 + RealAlgNum(k);
  CHECK(s.defpoly().degree() == 2);
  CHECK(s == RealAlgNum(78) + RealAlgNum(mpq_class(78, 7)) * r2);
  CHECK((a * a).defpoly().degree() == 2);
}
