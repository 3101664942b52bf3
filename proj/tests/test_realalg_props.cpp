/* SPDX-License-Identifier: Apache-2.0 */
#include <random>

#include "doctest.h"
#include "ipart/realalg.hpp"

using namespace ipart;

namespace {

// Test-side bisection on the defining polynomial; independent of RealAlgNum::refined.
struct Enclosure {
  mpq_class lo, hi;
};

Enclosure enclose(const RealAlgNum& a, const mpq_class& width) {
  if (a.is_rational()) return {a.rational(), a.rational()};
  UPoly p = a.defpoly();
  mpq_class lo = a.lo(), hi = a.hi();
  const int s_lo = p.sign_at(lo);
  while (hi - lo > width) {
    mpq_class mid = (lo + hi) / 2;
    const int s = p.sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == s_lo) lo = mid; else hi = mid;
  }
  return {lo, hi};
}

RealAlgNum sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4), small(-9, 9), pos(1, 9);
  mpq_class q(small(rng), pos(rng));
  q.canonicalize();
  switch (kind(rng)) {
    case 0: return RealAlgNum(q);
    case 1: return nth_root(RealAlgNum(pos(rng)), 2) * RealAlgNum(q);
    case 2: return nth_root(RealAlgNum(mpq_class(small(rng), pos(rng))), 3);
    case 3: return nth_root(RealAlgNum(pos(rng)), 2) + RealAlgNum(q);
    default: return -nth_root(RealAlgNum(mpq_class(pos(rng), pos(rng))), 2);
  }
}

}  // namespace

TEST_CASE("sign of differences agrees with high-precision enclosures") {
  std::mt19937_64 rng(11);
  const mpq_class width(1, mpz_class(1) << 64);
  for (int i = 0; i < 300; ++i) {
    RealAlgNum a = sample(rng), b = sample(rng);
    const int s = (a - b).sign();
    Enclosure ea = enclose(a, width), eb = enclose(b, width);
    if (ea.hi < eb.lo) CHECK(s == -1);
    else if (eb.hi < ea.lo) CHECK(s == 1);
    else CHECK(s == 0);
    CHECK(compare(a, b) == s);
  }
}

TEST_CASE("field laws on samples") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    RealAlgNum a = sample(rng), b = sample(rng), c = sample(rng);
    CHECK(compare(a + (b + c), (a + b) + c) == 0);
    CHECK(compare(a * (b + c), a * b + a * c) == 0);
    if (a.sign() != 0) CHECK(compare(a * a.inverse(), RealAlgNum(1)) == 0);
  }
}

TEST_CASE("floor brackets the number") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    RealAlgNum a = sample(rng);
    mpz_class z = floor(a);
    CHECK(compare(RealAlgNum(z), a) <= 0);
    CHECK(compare(a, RealAlgNum(mpz_class(z + 1))) < 0);
  }
}

TEST_CASE("nth root inverts powers") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    RealAlgNum a = abs(sample(rng));
    for (unsigned n : {2u, 3u}) CHECK(compare(nth_root(pow(a, n), n), a) == 0);
  }
}
