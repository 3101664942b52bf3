/* SPDX-License-Identifier: Apache-2.0 */
#include <algorithm>

#include "doctest.h"
#include "ipart/error.hpp"
#include "ipart/linalg.hpp"
#include "ipart/parse.hpp"
#include "ipart/sampling.hpp"
#include "ipart/sections.hpp"

using namespace ipart;

namespace {

HahnElem P(const char* s, std::size_t rank = 1) { return parse_expr(s, {rank}); }

std::vector<HahnElem> Ps(std::initializer_list<const char*> xs, std::size_t rank = 1) {
  std::vector<HahnElem> out;
  for (const char* x : xs) out.push_back(P(x, rank));
  return out;
}

FormalProduct F(std::initializer_list<long> e) {
  FormalProduct p;
  for (long v : e) p.exponents.emplace_back(v);
  return p;
}

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::SyntaxError;
}

// Brute force: least n in 1..cap with both sign conditions, n tested one by one.
std::optional<long> linear_scan(const HahnElem& x, const HahnElem& y, long cap) {
  for (long n = 1; n <= cap; ++n) {
    HahnElem N = HahnElem::constant(n, x.rank());
    if (x < N * y && y < N * x) return n;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("solve_combination") {
  std::vector<ExponentVec> vs{ExponentVec{1, 0}, ExponentVec{1, 1}};
  auto c = solve_combination(vs, ExponentVec{3, 5});
  REQUIRE(c);
  CHECK((*c)[0] == -2);
  CHECK((*c)[1] == 5);
  CHECK(!solve_combination({ExponentVec{1, 2}}, ExponentVec{1, 3}));
  CHECK(solve_combination({}, ExponentVec{0, 0}));
  CHECK(rank_of({ExponentVec{1, 2}, ExponentVec{2, 4}}) == 1);
}

TEST_CASE("arch_equiv examples") {
  ArchResult a = arch_equiv(P("t^-1"), P("5*t^-1 + 3"));
  CHECK(a.equivalent);
  CHECK(*a.witness == 6);
  ArchResult b = arch_equiv(P("t^-1"), P("t^-2"));
  CHECK(!b.equivalent);
  CHECK(!b.witness);
  HahnElem x = P("1/(1-t) + sqrt(3)");
  ArchResult c = arch_equiv(x, x);
  CHECK(*c.witness == 2);
  CHECK(kind_of([] { arch_equiv(P("-t"), P("t")); }) == ErrorKind::NotPositive);
  // integer leading ratio: the infinitesimal tail decides
  CHECK(*arch_equiv(P("2 + t"), P("1")).witness == 3);
  CHECK(*arch_equiv(P("2 - t"), P("1")).witness == 2);
}

TEST_CASE("arch_equiv agrees with the definition") {
  Sampler s(41);
  ElementShape shape;
  shape.max_terms = 2;
  shape.algebraic = true;
  for (int i = 0; i < 150; ++i) {
    HahnElem x = s.positive_element(shape);
    // half the pairs share a class by construction
    HahnElem y = s.coin() ? x * HahnElem::constant(RealAlgNum(mpq_class(s.integer(1, 40), s.integer(1, 7)))) +
                                HahnElem::monomial(1, *valuation(x) + ExponentVec{mpq_class(1, 2)})
                          : s.positive_element(shape);
    if (y.sign() <= 0) continue;
    ArchResult r = arch_equiv(x, y);
    auto scan = linear_scan(x, y, 300);
    CHECK(r.equivalent == (*valuation(x) == *valuation(y)));
    if (r.equivalent && *r.witness <= 300) CHECK(scan == r.witness->get_si());
    if (!r.equivalent) CHECK(!scan);
    auto search = arch_search(x, y, mpz_class(1) << 64);
    CHECK(search.has_value() == r.equivalent);
    if (search && r.witness) CHECK(*search == *r.witness);
  }
}

TEST_CASE("vgs_build examples") {
  ValueGroupSection s = vgs_build(Ps({"1", "5", "t", "t^(1/2)", "7*t^-3 + 1"}), 1);
  REQUIRE(s.size() == 1);
  CHECK(s.generators()[0] == P("t"));
  CHECK(s.values()[0] == ExponentVec{1});

  CHECK(vgs_build({}, 1).size() == 0);

  ValueGroupSection s2 = vgs_build(Ps({"1", "t1", "t2", "t1*t2^2"}, 2), 2);
  REQUIRE(s2.size() == 2);
  CHECK(s2.values()[0] == ExponentVec{1, 0});
  CHECK(s2.values()[1] == ExponentVec{0, 1});

  // negatives enter as |x|
  ValueGroupSection s3 = vgs_build(Ps({"0", "-t^2"}), 1);
  CHECK(s3.generators()[0] == P("t^2"));
}

TEST_CASE("vgs_representative examples") {
  ValueGroupSection s = vgs_build(Ps({"t"}), 1);
  FormalProduct a = vgs_representative(s, P("7*t^-3 + 1"));
  CHECK(a.exponents == std::vector<mpq_class>{-3});
  CHECK(*s.materialize(a) == P("t^-3"));
  FormalProduct b = vgs_representative(s, P("5"));
  CHECK(b.exponents == std::vector<mpq_class>{0});
  CHECK(*s.materialize(b) == P("1"));
  FormalProduct c = vgs_representative(s, P("t^(1/2)"));
  CHECK(c.exponents == std::vector<mpq_class>{mpq_class(1, 2)});
  CHECK(!s.materialize(c));
  ValueGroupSection e(2);
  CHECK(kind_of([&] { vgs_representative(e, P("t2", 2)); }) == ErrorKind::NotInSpan);
}

TEST_CASE("vgs_verify examples") {
  ValueGroupSection s = vgs_build(Ps({"t^-1", "t^3"}), 1);
  std::vector<std::pair<FormalProduct, FormalProduct>> pairs;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) pairs.emplace_back(F({a}), F({b}));
  CHECK(vgs_verify(s, pairs).passed());

  ValueGroupSection doctored = ValueGroupSection::unchecked(1, Ps({"t", "2*t"}));
  LawReport bad = vgs_verify(doctored, {{F({1, 0}), F({0, 1})}});
  CHECK(!bad.passed());
  CHECK(!bad.find("uniqueness")->passed);
  CHECK(!bad.find("injectivity")->passed);
  CHECK(!bad.find("independence")->passed);
  CHECK(bad.find("homomorphism")->passed);

  LawReport empty = vgs_verify(ValueGroupSection(1), {});
  CHECK(empty.passed());
  CHECK(empty.laws().size() == 5);
}

TEST_CASE("vgs_build properties on random enumerations") {
  Sampler s(42);
  for (std::size_t rank : {1u, 2u, 3u}) {
    ElementShape shape;
    shape.rank = rank;
    shape.max_terms = 2;
    for (int round = 0; round < 6; ++round) {
      std::vector<HahnElem> e;
      for (int i = 0; i < 15; ++i) e.push_back(s.element(shape));
      ValueGroupSection sec = vgs_build(e, rank);
      CHECK(linearly_independent(sec.values()));
      std::vector<HahnElem> shuffled = e;
      std::shuffle(shuffled.begin(), shuffled.end(), s.rng());
      ValueGroupSection other = vgs_build(shuffled, rank);
      CHECK(same_span(sec.values(), other.values()));
      for (const auto& x : e) {
        if (x.is_zero()) continue;
        FormalProduct rep = vgs_representative(sec, x);
        CHECK(sec.value_of(rep) == *valuation(x));
        if (auto m = sec.materialize(rep)) CHECK(arch_equiv(*m, abs(x)).equivalent);
      }
      std::vector<std::pair<FormalProduct, FormalProduct>> pairs;
      auto box = integral_products(sec, sec.size() > 2 ? 1 : 2);
      for (std::size_t i = 0; i < box.size(); ++i) pairs.emplace_back(box[i], box[(i * 7 + 3) % box.size()]);
      CHECK(vgs_verify(sec, pairs).passed());
    }
  }
}

TEST_CASE("section witnesses: an element above, an isolating radius") {
  ValueGroupSection s = vgs_build(Ps({"t"}), 1);
  AboveWitness w = section_above(s, P("t^-1"));
  CHECK(w.above_value == P("t^-2"));
  CHECK(section_above(s, P("5")).above_value == P("t^-1"));
  CHECK(section_above(s, P("3*t^(-1/2) + 4")).above_value == P("t^-2"));

  HahnElem eps = isolation_radius(s, F({-1}));
  CHECK(eps == P("1/2*t^-1"));
  auto samples = integral_products(s, 3);
  CHECK(isolation_check(s, F({-1}), eps, samples).passed());
  // a radius of t^-3 swallows t^-2 and everything finite
  CHECK(!isolation_check(s, F({-1}), P("t^-3"), samples).passed());

  CHECK(kind_of([&] { isolation_radius(s, FormalProduct{{mpq_class(1, 2)}}); }) == ErrorKind::NonIntegralExponent);
  CHECK(kind_of([&] { section_above(ValueGroupSection(1), P("2")); }) == ErrorKind::NotInSpan);
}

TEST_CASE("residue section") {
  CHECK(rfs_residue(P("1/(1-t)")) == RealAlgNum(1));
  CHECK(rfs_residue(P("3")) == RealAlgNum(3));
  CHECK(rfs_residue(P("t")) == RealAlgNum(0));
  CHECK(kind_of([] { rfs_residue(P("t^-1")); }) == ErrorKind::NotFinite);

  LawReport ok = rfs_verify(Ps({"1/2 + t", "sqrt(2) + t^2", "3"}));
  CHECK(ok.passed());
  LawReport bad = rfs_verify(Ps({"1/2 + t"}), ResidueCandidate{true, Ps({"1 + t"})});
  CHECK(!bad.passed());
  CHECK(!bad.find("candidate_uniqueness")->passed);
  CHECK(rfs_verify({}).passed());
  CHECK(!rfs_verify(Ps({"t^-1"})).passed());
}

TEST_CASE("residue map is a ring homomorphism") {
  Sampler s(43);
  ElementShape shape;
  shape.algebraic = true;
  for (int i = 0; i < 150; ++i) {
    HahnElem x = s.finite_element(shape), y = s.finite_element(shape);
    // oracle: the decomposition's constant term
    CHECK(rfs_residue(x) == decompose(x).constant);
    CHECK(rfs_residue(x + y) == rfs_residue(x) + rfs_residue(y));
    CHECK(rfs_residue(x * y) == rfs_residue(x) * rfs_residue(y));
  }
}
