/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ipart {

/* Rational helpers shared across modules. */
mpz_class floor_q(const mpq_class& q);
mpz_class ceil_q(const mpq_class& q);
int sgn(const mpq_class& q);
/* Smallest-denominator rational in the closed interval [lo, hi]. */
mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi);
/* "p" for integers, "p/q" otherwise. */
std::string to_string(const mpq_class& q);
mpq_class pow_q(const mpq_class& base, unsigned long exp);

/*
 * Dense univariate polynomial over Q; index k holds the coefficient of x^k.
 * Zero is the empty coefficient vector, so degree() == -1.
 */
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<mpq_class> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly constant(const mpq_class& c);
  static UPoly monomial(const mpq_class& c, int degree);
  /* (x - root) */
  static UPoly linear_root(const mpq_class& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(int k) const;
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;

  UPoly derivative() const;
  /* Integer coefficients, content 1, positive leading coefficient. */
  UPoly primitive() const;
  UPoly monic() const;
  /* Primitive square-free part p / gcd(p, p'). */
  UPoly squarefree() const;

  /* p(x + r) */
  UPoly shifted(const mpq_class& r) const;
  /* p(r * x) */
  UPoly scaled_arg(const mpq_class& r) const;
  /* x^deg * p(1/x) */
  UPoly reversed() const;
  /* p(x^n) */
  UPoly substitute_power(unsigned n) const;
  /* p(-x) */
  UPoly negated_arg() const { return scaled_arg(mpq_class(-1)); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const mpq_class& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/* Euclidean division over Q; b must be nonzero. */
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
/* Monic gcd (zero only when both inputs are zero). */
UPoly gcd(const UPoly& a, const UPoly& b);
mpq_class resultant(const UPoly& a, const UPoly& b);

/* Res_y(p(y), q(x - y)): roots are all sums alpha + beta. */
UPoly resultant_sum(const UPoly& p, const UPoly& q);
/* Res_y(p(y), y^deg q * q(x / y)): roots are all products alpha * beta; needs q(0) != 0. */
UPoly resultant_product(const UPoly& p, const UPoly& q);

/* Canonical Sturm sequence p, p', -rem(...), ... with positive rescaling. */
std::vector<UPoly> sturm_sequence(const UPoly& p);
int sign_variations(const std::vector<UPoly>& seq, const mpq_class& x);
int sign_variations_at_infinity(const std::vector<UPoly>& seq, int direction);
/* Number of distinct real roots in the half-open interval (lo, hi]. */
int count_roots(const std::vector<UPoly>& seq, const mpq_class& lo, const mpq_class& hi);
int count_roots(const UPoly& p, const mpq_class& lo, const mpq_class& hi);
int count_real_roots(const UPoly& p);

/* Cauchy bound: every real root has absolute value < bound. */
mpq_class root_bound(const UPoly& p);

}  // namespace ipart
