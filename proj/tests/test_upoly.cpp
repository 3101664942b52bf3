/* SPDX-License-Identifier: Apache-2.0 */
#include "doctest.h"
#include "ipart/upoly.hpp"

using namespace ipart;

TEST_CASE("division and gcd") {
  UPoly a{-1, 0, 1};  // x^2 - 1
  UPoly b{-1, 1};     // x - 1
  auto [q, r] = divrem(a, b);
  CHECK(q == UPoly{1, 1});
  CHECK(r.is_zero());
  CHECK(gcd(a, UPoly{1, 2, 1}) == UPoly{1, 1});
  CHECK(gcd(UPoly{-2, 0, 1}, UPoly{-3, 0, 1}).degree() == 0);
}

TEST_CASE("square-free part and primitive normalization") {
  // (x-1)^2 (x+2)
  UPoly p = UPoly{-1, 1} * UPoly{-1, 1} * UPoly{2, 1};
  CHECK(p.squarefree() == UPoly{-2, 1, 1});
  UPoly half(std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-3, 4)});
  CHECK(half.primitive() == UPoly{-2, 3});
}

TEST_CASE("resultant matches the Sylvester determinant on small cases") {
  // Res(x^2 - 2, x - 1) = (1)^2 - 2 = -1 ; Res(a, b) = prod b(roots of a) for monic a.
  CHECK(resultant(UPoly{-2, 0, 1}, UPoly{-1, 1}) == -1);
  // Res(x^2+1, x^2-1): roots of a are +-i, b(+-i) = -2 each -> 4
  CHECK(resultant(UPoly{1, 0, 1}, UPoly{-1, 0, 1}) == 4);
  CHECK(resultant(UPoly{-1, 1}, UPoly{-1, 0, 1}) == 0);
}

TEST_CASE("composed resultants") {
  UPoly p{-2, 0, 1};
  // Res_y(y^2-2, x^2 - 2 y^2) = (x^2 - 4)^2
  UPoly x2m4{-4, 0, 1};
  CHECK(resultant_product(p, p) == x2m4 * x2m4);
  // sums of +-sqrt2 +-sqrt2: x^2 (x^2 - 8)
  CHECK(resultant_sum(p, p) == UPoly{0, 0, -8, 0, 1});
  CHECK(resultant_sum(p, p).squarefree() == UPoly{0, -8, 0, 1});
}

TEST_CASE("Sturm counts") {
  UPoly p = UPoly{-1, 1} * UPoly{-2, 1} * UPoly{-3, 1};
  CHECK(count_roots(p, mpq_class(0), mpq_class(10)) == 3);
  CHECK(count_roots(p, mpq_class(1), mpq_class(3)) == 2);  // (1, 3]
  CHECK(count_roots(p, mpq_class(3, 2), mpq_class(5, 2)) == 1);
  CHECK(count_real_roots(UPoly{1, 0, 1}) == 0);
  CHECK(count_real_roots(UPoly{-2, 0, 1}) == 2);
}

TEST_CASE("simplest rational") {
  CHECK(simplest_between(mpq_class(3, 5), mpq_class(7, 10)) == mpq_class(2, 3));
  CHECK(simplest_between(mpq_class(-7, 10), mpq_class(-3, 5)) == mpq_class(-2, 3));
  CHECK(simplest_between(mpq_class(1, 2), mpq_class(3, 2)) == 1);
  CHECK(simplest_between(mpq_class(-1), mpq_class(1)) == 0);
}
