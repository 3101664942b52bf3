/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "ipart/error.hpp"
#include "ipart/integer_part.hpp"
#include "ipart/parse.hpp"
#include "ipart/sampling.hpp"

using namespace ipart;

namespace {

HahnElem P(const char* s, std::size_t rank = 1) { return parse_expr(s, {rank}); }
HahnElem C(long v, std::size_t rank = 1) { return HahnElem::constant(v, rank); }

// Purely infinite polynomial with random coefficients.
HahnElem purely_infinite(Sampler& s, std::size_t rank) {
  ElementShape shape;
  shape.rank = rank;
  std::vector<Term> terms;
  for (int k = 0; k < 2; ++k) {
    ExponentVec e = s.positive_exponent(shape);
    terms.push_back({-e, RealAlgNum(s.nonzero_rational(9, 4))});
  }
  return HahnElem(GenPoly(rank, terms));
}

}  // namespace

TEST_CASE("ip_member examples") {
  CHECK(ip_member(P("t^-1")));
  CHECK(ip_member(P("1/2*t^-1")));
  CHECK(!ip_member(P("t^-1 + 1/2")));
  CHECK(ip_member(P("-7")));
  CHECK(!ip_member(P("1 + t")));
  CHECK(!ip_member(P("1/(1-t)")));
  CHECK(ip_member(P("sqrt(2)*t^(-1/2) + 4")));
}

TEST_CASE("ip_floor examples") {
  FloorResult a = ip_floor(P("t^-1 + 1/2"));
  CHECK(a.floor == P("t^-1"));
  CHECK(a.remainder == P("1/2"));
  FloorResult b = ip_floor(P("3 - t"));
  CHECK(b.floor == P("2"));
  CHECK(b.remainder == P("1 - t"));
  FloorResult c = ip_floor(P("t^-1"));
  CHECK(c.floor == P("t^-1"));
  CHECK(c.remainder.is_zero());
  CHECK(ip_floor(P("-sqrt(2)")).floor == P("-2"));
  CHECK(ip_floor(P("1/(1-t)")).floor == P("1"));
  CHECK(ip_floor(P("-1/(1-t)")).floor == P("-2"));
  CHECK(ip_floor(P("1/(1-t1*t2^-1)", 2)).floor == P("1", 2));
}

TEST_CASE("ip_verify examples") {
  std::vector<HahnElem> samples{P("t^-1 + 1/2"), P("3 - t"), P("1/(1-t)")};
  std::vector<std::pair<HahnElem, HahnElem>> ring{{P("t^-1"), P("2")}, {P("1/2*t^-2 + 1"), P("-t^(-1/2)")}};
  CHECK(ip_verify(samples, ring).passed());

  LawReport z = ip_verify({P("t^-1")}, {{P("2"), P("3")}}, integers_only());
  CHECK(!z.passed());
  CHECK(!z.find("rounding")->passed);
  CHECK(z.find("closure")->passed);

  LawReport empty = ip_verify({}, {});
  CHECK(empty.passed());

  // a non-ring candidate: I shifted by 1/2 off the integers
  IntegerPartCandidate half{"half", [](const HahnElem& x) { return ip_member(x - P("1/2")); },
                            [](const HahnElem& x) -> std::optional<HahnElem> {
                              return ip_floor(x - P("1/2")).floor + P("1/2");
                            }};
  LawReport h = ip_verify({P("t^-1")}, {{P("1/2"), P("3/2")}}, half);
  CHECK(!h.find("closure")->passed);
  CHECK(h.find("rounding")->passed);
}

TEST_CASE("ip_floor_via_dense examples") {
  DenseFloorTrace a = ip_floor_via_dense_trace(P("t^-1 + t^(1/2) + 1/2"), 2);
  CHECK(a.x_prime == P("t^-1 + 1/2"));
  CHECK(a.i == P("t^-1 - 1"));
  CHECK(a.interval == 2);
  CHECK(a.result.floor == P("t^-1"));

  CHECK(ip_floor_via_dense(P("t^-1 + 1/2"), 1).floor == P("t^-1"));
  CHECK(ip_floor_via_dense(P("3 - t"), 1).floor == P("2"));

  try {
    ip_floor_via_dense(P("t^(-1/2)"), 1);
    FAIL("expected RamificationTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RamificationTooSmall);
  }
  CHECK(required_ramification(P("t^(-1/2) + t^(-2/3) + t^(1/5)")) == 6);
}

TEST_CASE("floor contract on samples") {
  Sampler s(51);
  for (std::size_t rank : {1u, 2u}) {
    ElementShape shape;
    shape.rank = rank;
    shape.algebraic = rank == 1;
    for (int n = 0; n < 150; ++n) {
      HahnElem x = s.element(shape);
      FloorResult f = ip_floor(x);
      CHECK(ip_member(f.floor));
      CHECK(f.floor <= x);
      CHECK(x < f.floor + C(1, rank));
      CHECK(f.floor + f.remainder == x);
      // translation laws
      const long k = s.integer(-20, 20);
      CHECK(ip_floor(x + C(k, rank)).floor == f.floor + C(k, rank));
      HahnElem p = purely_infinite(s, rank);
      CHECK(ip_floor(x + p).floor == f.floor + p);
      // transfer through D agrees
      const long m = required_ramification(x);
      DenseFloorTrace tr = ip_floor_via_dense_trace(x, m);
      CHECK(tr.result.floor == f.floor);
      CHECK(tr.interval >= 1);
      CHECK(tr.interval <= 3);
    }
  }
}

TEST_CASE("I is discrete and unbounded on samples") {
  Sampler s(52);
  ElementShape shape;
  std::vector<HahnElem> members;
  for (int n = 0; n < 60; ++n) {
    HahnElem x = s.element(shape);
    HahnElem f = ip_floor(x).floor;
    CHECK(f + C(1) > x);
    members.push_back(f);
  }
  const HahnElem half = P("1/2");
  for (const auto& i : members)
    for (const auto& j : members)
      if (!(i == j)) CHECK(!(i - half < j && j < i + half));
}
