/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "ipart/hahn.hpp"
#include "ipart/report.hpp"

namespace ipart {

/* ---- archimedean equivalence ---- */

struct ArchResult {
  bool equivalent = false;
  std::optional<mpz_class> witness;  // least n with x < n*y and y < n*x
};

/* Valuation criterion, witness from the leading coefficients; throws NotPositive. */
ArchResult arch_equiv(const HahnElem& x, const HahnElem& y);

/* Does n witness x ~ y (x < n*y and y < n*x)? */
bool arch_witnesses(const HahnElem& x, const HahnElem& y, const mpz_class& n);

/*
 * The definition read literally: least n <= limit with x < n*y and y < n*x,
 * by doubling then bisection on sign tests alone. nullopt if none up to limit.
 */
std::optional<mpz_class> arch_search(const HahnElem& x, const HahnElem& y, const mpz_class& limit);

/* ---- value group sections ---- */

/* Rational exponents over a section's generators; kept formal. */
struct FormalProduct {
  std::vector<mpq_class> exponents;

  bool integral() const;
  friend bool operator==(const FormalProduct&, const FormalProduct&) = default;
  friend FormalProduct operator+(const FormalProduct& a, const FormalProduct& b);
  std::string to_string() const;
};

class ValueGroupSection {
 public:
  explicit ValueGroupSection(std::size_t rank = 1) : rank_(rank) {}

  /*
   * Takes the generators as given, without checking independence or
   * positivity. Lets the verifiers be fed doctored sections.
   */
  static ValueGroupSection unchecked(std::size_t rank, std::vector<HahnElem> generators);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<HahnElem>& generators() const { return generators_; }
  const std::vector<ExponentVec>& values() const { return values_; }

  /* sum q_i v(g_i) */
  ExponentVec value_of(const FormalProduct& p) const;
  /* prod g_i^q_i when every q_i is an integer. */
  std::optional<HahnElem> materialize(const FormalProduct& p) const;
  std::string to_string() const;

 private:
  friend ValueGroupSection vgs_build(const std::vector<HahnElem>&, std::size_t);
  void push(HahnElem g);

  std::size_t rank_;
  std::vector<HahnElem> generators_;
  std::vector<ExponentVec> values_;
};

/* Greedy recursion over a finite enumeration: keep |x| whenever v(|x|) leaves the current span. */
ValueGroupSection vgs_build(const std::vector<HahnElem>& enumeration, std::size_t rank);

/* The unique q with sum q_i v(g_i) = v(|x|); throws NotInSpan (and DivisionByZero for x = 0). */
FormalProduct vgs_representative(const ValueGroupSection& s, const HahnElem& x);

/* Laws: independence, homomorphism, injectivity, uniqueness. */
LawReport vgs_verify(const ValueGroupSection& s, const std::vector<std::pair<FormalProduct, FormalProduct>>& samples);

/* Every formal product with integer exponents in [-radius, radius], in odometer order. */
std::vector<FormalProduct> integral_products(const ValueGroupSection& s, long radius);

struct AboveWitness {
  FormalProduct above;
  HahnElem above_value;  // materialized, verified > x
};

/* A section element exceeding x > 0; throws NotPositive, NotInSpan. */
AboveWitness section_above(const ValueGroupSection& s, const HahnElem& x);

/* eps = y/2 for a materializable y; throws NonIntegralExponent. */
HahnElem isolation_radius(const ValueGroupSection& s, const FormalProduct& y);

/* Checks that (y - eps, y + eps) holds no other sample. */
LawReport isolation_check(const ValueGroupSection& s, const FormalProduct& y, const HahnElem& eps,
                          const std::vector<FormalProduct>& samples);

/* ---- residue field sections ---- */

/* Exponent-0 coefficient; throws NotFinite when v(x) < 0. */
RealAlgNum rfs_residue(const HahnElem& x);

/* x ~mu y: x - y infinitesimal (or zero). */
bool mu_equivalent(const HahnElem& x, const HahnElem& y);

/* A candidate residue section: optionally all constants, plus listed elements. */
struct ResidueCandidate {
  bool all_constants = true;
  std::vector<HahnElem> extra;
};

/*
 * Laws: representative (x ~mu res(x)), homomorphism on consecutive pairs,
 * constants_distinct, and with a candidate also candidate_finite and
 * candidate_uniqueness.
 */
LawReport rfs_verify(const std::vector<HahnElem>& samples, const std::optional<ResidueCandidate>& candidate = {});

}  // namespace ipart
