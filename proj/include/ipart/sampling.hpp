/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <random>

#include "ipart/hahn.hpp"

namespace ipart {

/* Shape of randomly generated elements of K. */
struct ElementShape {
  std::size_t rank = 1;
  int max_terms = 3;
  long exp_range = 3;         // |exponent coordinate| <= exp_range
  long exp_den = 2;           // exponent denominators in 1..exp_den
  long coeff_range = 9;       // |numerator| of rational coefficients
  long coeff_den = 4;
  bool fractions = true;      // allow non-trivial denominators
  bool algebraic = false;     // occasionally draw irrational coefficients
  long radicand = 2;          // ... from Q(sqrt(radicand)), keeping degrees bounded
};

/* Deterministic random source for property suites; equal seeds give equal streams. */
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  long integer(long lo, long hi);
  bool coin(int one_in = 2) { return integer(1, one_in) == 1; }
  mpq_class rational(long max_num, long max_den);
  mpq_class nonzero_rational(long max_num, long max_den);
  RealAlgNum coefficient(const ElementShape& shape);
  ExponentVec exponent(const ElementShape& shape);
  /* Exponent with positive first coordinate (a valid 1-unit exponent). */
  ExponentVec positive_exponent(const ElementShape& shape);
  GenPoly poly(const ElementShape& shape);
  /* 1 + sum of terms with positive first exponent coordinate. */
  GenPoly unit_denominator(const ElementShape& shape);
  /* Mix of polynomials, quotients by 1-units and inverses; always expansion-supported. */
  HahnElem element(const ElementShape& shape);
  HahnElem nonzero_element(const ElementShape& shape);
  HahnElem positive_element(const ElementShape& shape);
  /* element() shifted so that v >= 0. */
  HahnElem finite_element(const ElementShape& shape);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ipart
