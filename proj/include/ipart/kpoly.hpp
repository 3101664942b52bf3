/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ipart/hahn.hpp"

namespace ipart {

/* Univariate polynomial in X over K; index k holds the coefficient of X^k. */
class KPoly {
 public:
  explicit KPoly(std::size_t rank = 1) : rank_(rank) {}
  KPoly(std::size_t rank, std::vector<HahnElem> coeffs);

  std::size_t rank() const { return rank_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<HahnElem>& coeffs() const { return coeffs_; }
  const HahnElem& leading() const { return coeffs_.back(); }

  HahnElem operator()(const HahnElem& x) const;
  /* Sign at -infinity (direction < 0) or +infinity (direction > 0). */
  int sign_at_infinity(int direction) const;

  KPoly derivative() const;
  KPoly operator-() const;
  /* Divides every coefficient by |leading|; keeps all signs. */
  KPoly sign_normalized() const;
  KPoly squarefree() const;

  friend KPoly operator*(const KPoly& a, const KPoly& b);

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::size_t rank_;
  std::vector<HahnElem> coeffs_;
};

std::pair<KPoly, KPoly> divrem(const KPoly& a, const KPoly& b);
KPoly gcd(const KPoly& a, const KPoly& b);

/* An endpoint in K or one of the two infinities. */
struct KBound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  HahnElem value;

  static KBound neg_inf() { return {Kind::NegInf, HahnElem()}; }
  static KBound pos_inf() { return {Kind::PosInf, HahnElem()}; }
  static KBound at(HahnElem v) { return {Kind::Finite, std::move(v)}; }
};

std::vector<KPoly> sturm_sequence(const KPoly& p);
int sign_variations(const std::vector<KPoly>& seq, const KBound& at);

/*
 * poly_sturm_count: number of distinct roots of p in the real closure of K
 * lying in (lo, hi]. Throws ZeroPolynomial.
 */
int poly_sturm_count(const KPoly& p, const KBound& lo, const KBound& hi);

}  // namespace ipart
