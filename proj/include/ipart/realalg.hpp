/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>

#include "ipart/upoly.hpp"

namespace ipart {

/*
 * A real algebraic number: the unique root of a square-free primitive integer
 * polynomial inside an open rational interval (lo, hi) whose endpoints are not
 * roots. Rationals are stored directly and report a linear defining polynomial
 * with lo == hi.
 *
 * Values are immutable; refinement produces a new value.
 */
class RealAlgNum {
 public:
  RealAlgNum() : value_(0) {}
  RealAlgNum(long v) : value_(v) {}  // NOLINT: implicit on purpose, integers are numbers
  RealAlgNum(const mpz_class& v) : value_(v) {}
  RealAlgNum(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /* ra_make: the unique root of defpoly in [lo, hi]. */
  static RealAlgNum make(const UPoly& defpoly, const mpq_class& lo, const mpq_class& hi);

  bool is_rational() const { return rep_ == nullptr; }
  /* Only meaningful when is_rational(). */
  const mpq_class& rational() const { return value_; }
  bool is_integer() const { return is_rational() && value_.get_den() == 1; }

  UPoly defpoly() const;
  mpq_class lo() const;
  mpq_class hi() const;

  int sign() const;
  /* One bisection step of the isolating interval. */
  RealAlgNum refined() const;
  /* Refines until hi - lo <= width. */
  RealAlgNum refined_to(const mpq_class& width) const;

  /* Exact comparison of the value against a rational. */
  int compare(const mpq_class& q) const;

  RealAlgNum operator-() const;
  RealAlgNum inverse() const;

  std::string to_string() const;

 private:
  struct Rep {
    UPoly poly;
    mpq_class lo, hi;
    int sign_lo;  // sign of poly at lo; poly changes sign exactly once on (lo, hi)
  };

  // Builds from an isolating interval, applying zero and rational detection.
  static RealAlgNum from_isolated(UPoly poly, mpq_class lo, mpq_class hi);

  friend RealAlgNum operator+(const RealAlgNum&, const RealAlgNum&);
  friend RealAlgNum operator*(const RealAlgNum&, const RealAlgNum&);
  friend RealAlgNum nth_root(const RealAlgNum&, unsigned);
  friend int compare(const RealAlgNum&, const RealAlgNum&);

  mpq_class value_;
  std::shared_ptr<const Rep> rep_;
};

RealAlgNum operator+(const RealAlgNum& a, const RealAlgNum& b);
RealAlgNum operator-(const RealAlgNum& a, const RealAlgNum& b);
RealAlgNum operator*(const RealAlgNum& a, const RealAlgNum& b);
/* Throws DivisionByZero. */
RealAlgNum operator/(const RealAlgNum& a, const RealAlgNum& b);

enum class ArithOp { Add, Sub, Mul, Div };
/* ra_arith */
RealAlgNum arith(ArithOp op, const RealAlgNum& a, const RealAlgNum& b);

/* Sign of a - b, decided exactly. */
int compare(const RealAlgNum& a, const RealAlgNum& b);
inline bool operator==(const RealAlgNum& a, const RealAlgNum& b) { return compare(a, b) == 0; }
inline bool operator<(const RealAlgNum& a, const RealAlgNum& b) { return compare(a, b) < 0; }
inline bool operator>(const RealAlgNum& a, const RealAlgNum& b) { return compare(a, b) > 0; }
inline bool operator<=(const RealAlgNum& a, const RealAlgNum& b) { return compare(a, b) <= 0; }
inline bool operator>=(const RealAlgNum& a, const RealAlgNum& b) { return compare(a, b) >= 0; }

/* The unique integer z with z <= a < z + 1. */
mpz_class floor(const RealAlgNum& a);
/* Real n-th root; NegativeEvenRoot for a < 0 with even n. */
RealAlgNum nth_root(const RealAlgNum& a, unsigned n);
RealAlgNum pow(const RealAlgNum& a, long n);
RealAlgNum abs(const RealAlgNum& a);

/* All real roots of p in increasing order. */
std::vector<RealAlgNum> real_roots(const UPoly& p);

/* Which numbers a coefficient may be. Rational skips every resultant path. */
enum class CoeffField { Rational, Algebraic };

}  // namespace ipart
