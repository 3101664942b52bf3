/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/sampling.hpp"

namespace ipart {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

mpq_class Sampler::rational(long max_num, long max_den) {
  mpq_class q(integer(-max_num, max_num), integer(1, max_den));
  q.canonicalize();
  return q;
}

mpq_class Sampler::nonzero_rational(long max_num, long max_den) {
  mpq_class q(0);
  while (sgn(q) == 0) q = rational(max_num, max_den);
  return q;
}

RealAlgNum Sampler::coefficient(const ElementShape& shape) {
  mpq_class q = nonzero_rational(shape.coeff_range, shape.coeff_den);
  if (shape.algebraic && coin(4)) return nth_root(RealAlgNum(shape.radicand), 2) * RealAlgNum(q) + RealAlgNum(rational(3, 2));
  return RealAlgNum(q);
}

ExponentVec Sampler::exponent(const ElementShape& shape) {
  std::vector<mpq_class> c;
  for (std::size_t i = 0; i < shape.rank; ++i) {
    const long den = integer(1, shape.exp_den);
    c.emplace_back(integer(-shape.exp_range * den, shape.exp_range * den), den);
  }
  return ExponentVec(std::move(c));
}

ExponentVec Sampler::positive_exponent(const ElementShape& shape) {
  ExponentVec e = exponent(shape);
  std::vector<mpq_class> c = e.coords();
  const long den = integer(1, shape.exp_den);
  c[0] = mpq_class(integer(1, shape.exp_range * den), den);
  return ExponentVec(std::move(c));
}

GenPoly Sampler::poly(const ElementShape& shape) {
  std::vector<Term> terms;
  const long n = integer(1, shape.max_terms);
  for (long i = 0; i < n; ++i) terms.push_back({exponent(shape), coefficient(shape)});
  return GenPoly(shape.rank, std::move(terms));
}

GenPoly Sampler::unit_denominator(const ElementShape& shape) {
  std::vector<Term> terms{{ExponentVec(shape.rank), RealAlgNum(1)}};
  const long n = integer(1, 2);
  for (long i = 0; i < n; ++i) terms.push_back({positive_exponent(shape), RealAlgNum(nonzero_rational(4, 3))});
  return GenPoly(shape.rank, std::move(terms));
}

HahnElem Sampler::element(const ElementShape& shape) {
  if (!shape.fractions) return HahnElem(poly(shape));
  while (true) {
    HahnElem x;
    switch (integer(0, 3)) {
      case 0: x = HahnElem(poly(shape)); break;
      case 1: x = HahnElem::make(poly(shape), unit_denominator(shape)); break;
      case 2: {
        GenPoly p = poly(shape);
        if (p.is_zero()) continue;
        x = HahnElem(poly(shape)) + HahnElem(p).inverse();
        break;
      }
      default: x = HahnElem(poly(shape)) * HahnElem::make(poly(shape), unit_denominator(shape)); break;
    }
    if (expansion_supported(x)) return x;
  }
}

HahnElem Sampler::nonzero_element(const ElementShape& shape) {
  while (true) {
    HahnElem x = element(shape);
    if (!x.is_zero()) return x;
  }
}

HahnElem Sampler::finite_element(const ElementShape& shape) {
  HahnElem x = element(shape);
  if (x.is_zero()) return x;
  const ExponentVec v = *valuation(x);
  if (v.sign() < 0) x = x * HahnElem::monomial(1, -v);
  return x;
}

HahnElem Sampler::positive_element(const ElementShape& shape) { return abs(nonzero_element(shape)); }

}  // namespace ipart
