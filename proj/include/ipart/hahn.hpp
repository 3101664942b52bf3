/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ipart/realalg.hpp"

namespace ipart {

/*
 * A point of the value group Q^n, ordered lexicographically from the first
 * coordinate. t^g with g > 0 is a positive infinitesimal, and t1 is
 * infinitesimal relative to t2.
 */
class ExponentVec {
 public:
  ExponentVec() : coords_(1) {}
  explicit ExponentVec(std::size_t rank) : coords_(rank) {}
  explicit ExponentVec(std::vector<mpq_class> coords);
  ExponentVec(std::initializer_list<mpq_class> coords) : ExponentVec(std::vector<mpq_class>(coords)) {}

  /* value * e_index */
  static ExponentVec unit(std::size_t rank, std::size_t index, const mpq_class& value = 1);

  std::size_t rank() const { return coords_.size(); }
  const mpq_class& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<mpq_class>& coords() const { return coords_; }

  bool is_zero() const;
  /* Sign in the lexicographic order. */
  int sign() const;
  bool is_integral() const;

  ExponentVec operator-() const;
  ExponentVec scaled(const mpq_class& q) const;
  friend ExponentVec operator+(const ExponentVec& a, const ExponentVec& b);
  friend ExponentVec operator-(const ExponentVec& a, const ExponentVec& b);
  friend std::strong_ordering operator<=>(const ExponentVec& a, const ExponentVec& b);
  friend bool operator==(const ExponentVec& a, const ExponentVec& b) { return a.coords_ == b.coords_; }

  /* "1/2" for rank 1, "(1, 0)" otherwise. */
  std::string to_string() const;

 private:
  std::vector<mpq_class> coords_;
};

struct Term {
  ExponentVec expo;
  RealAlgNum coeff;
};

/* Finite-support generalized polynomial: terms strictly increasing in exponent, no zero coefficients. */
class GenPoly {
 public:
  explicit GenPoly(std::size_t rank = 1) : rank_(rank) {}
  /* Sorts, merges equal exponents and drops zero coefficients. */
  GenPoly(std::size_t rank, std::vector<Term> terms);

  static GenPoly constant(const RealAlgNum& c, std::size_t rank);
  static GenPoly monomial(const RealAlgNum& c, const ExponentVec& e);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  /* Minimum-exponent term; requires nonzero. */
  const Term& leading() const { return terms_.front(); }
  ExponentVec valuation() const { return terms_.front().expo; }
  RealAlgNum coeff_at(const ExponentVec& e) const;
  bool all_rational() const;

  GenPoly operator-() const;
  GenPoly scaled(const RealAlgNum& c) const;
  GenPoly shifted(const ExponentVec& e) const;
  /* Keeps terms with exponent <= bound. */
  GenPoly truncated(const ExponentVec& bound) const;

  friend GenPoly operator+(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator-(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  /* Structural equality (equal exponents, numerically equal coefficients). */
  friend bool operator==(const GenPoly& a, const GenPoly& b);

  std::string to_string() const;

 private:
  std::size_t rank_;
  std::vector<Term> terms_;
};

/* Prints the monomial part t1^a*t2^b ("" for the zero vector). */
std::string monomial_string(const ExponentVec& e);

/*
 * Element of the working field K: num / den with v(den) = 0 and den's
 * leading coefficient 1, so den > 0 and the sign of num decides the order.
 * Zero is 0 / 1. Fractions are never expanded implicitly.
 */
class HahnElem {
 public:
  explicit HahnElem(std::size_t rank = 1) : num_(rank), den_(GenPoly::constant(1, rank)) {}
  HahnElem(GenPoly poly);  // NOLINT: a generalized polynomial is an element

  /* he_make: normalized fraction; throws ZeroDenominator. */
  static HahnElem make(GenPoly num, GenPoly den);
  static HahnElem constant(const RealAlgNum& c, std::size_t rank = 1);
  static HahnElem monomial(const RealAlgNum& c, const ExponentVec& e);
  /* t_{index + 1} */
  static HahnElem variable(std::size_t index, std::size_t rank = 1);

  std::size_t rank() const { return num_.rank(); }
  const GenPoly& num() const { return num_; }
  const GenPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return is_zero() ? 0 : num_.leading().coeff.sign(); }
  bool is_polynomial() const { return den_.is_one(); }
  /* The value as a constant, if it is one. */
  std::optional<RealAlgNum> as_constant() const;

  HahnElem inverse() const;
  HahnElem operator-() const;

  std::string to_string() const;

 private:
  HahnElem(GenPoly num, GenPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  GenPoly num_;
  GenPoly den_;
};

HahnElem operator+(const HahnElem& x, const HahnElem& y);
HahnElem operator-(const HahnElem& x, const HahnElem& y);
HahnElem operator*(const HahnElem& x, const HahnElem& y);
/* Throws DivisionByZero. */
HahnElem operator/(const HahnElem& x, const HahnElem& y);
/* he_arith */
HahnElem arith(ArithOp op, const HahnElem& x, const HahnElem& y);
HahnElem pow(const HahnElem& x, long n);
HahnElem abs(const HahnElem& x);

/* Sign of x - y. */
int compare(const HahnElem& x, const HahnElem& y);
inline bool operator==(const HahnElem& x, const HahnElem& y) { return compare(x, y) == 0; }
inline bool operator<(const HahnElem& x, const HahnElem& y) { return compare(x, y) < 0; }
inline bool operator>(const HahnElem& x, const HahnElem& y) { return compare(x, y) > 0; }
inline bool operator<=(const HahnElem& x, const HahnElem& y) { return compare(x, y) <= 0; }
inline bool operator>=(const HahnElem& x, const HahnElem& y) { return compare(x, y) >= 0; }

/* he_sign */
inline int sign(const HahnElem& x) { return x.sign(); }
/* he_valuation; std::nullopt stands for the valuation of 0 (infinity). */
std::optional<ExponentVec> valuation(const HahnElem& x);

struct TruncatedExpansion {
  std::vector<Term> terms;
  ExponentVec order_bound;
  bool exact = false;

  GenPoly as_poly(std::size_t rank) const { return GenPoly(rank, terms); }
  /* Sum of terms, followed by "+ O(t^bound)" unless exact. */
  std::string to_string() const;
};

/*
 * Whether the series view of x is finite below every bound: the 1-unit part m
 * of den = 1 - m must have positive first valuation coordinate.
 */
bool expansion_supported(const HahnElem& x);

/* he_expand: all series terms of x with exponent <= bound. Throws TruncationNotSupported. */
TruncatedExpansion expand(const HahnElem& x, const ExponentVec& order_bound);

struct Decomposition {
  HahnElem sigma;        // purely infinite part
  RealAlgNum constant;   // exponent-0 coefficient
  int tail_sign = 0;     // sign of x - sigma - constant
};

/* he_decompose */
Decomposition decompose(const HahnElem& x);

/* he_nth_root_trunc: truncation of the positive n-th root (binomial series). */
TruncatedExpansion nth_root_trunc(const HahnElem& x, unsigned n, const ExponentVec& order_bound);

/* Purely infinite: every exponent of num is negative and den = 1. */
bool is_purely_infinite(const HahnElem& x);

}  // namespace ipart
