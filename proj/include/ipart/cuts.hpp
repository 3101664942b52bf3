/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipart/integer_part.hpp"
#include "ipart/kpoly.hpp"
#include "ipart/report.hpp"
#include "ipart/sections.hpp"

namespace ipart {

/*
 * Polynomials of degree <= degree_bound whose coefficients are integer
 * combinations, weights in [-height_bound, height_bound], of the square-free
 * products of the generators (the empty product 1 included).
 */
struct PolyFamilySpec {
  unsigned degree_bound = 1;
  std::vector<HahnElem> coeff_generators;
  long height_bound = 1;
  std::size_t rank = 1;
};

/* One member: weights[k * basis_size + b] multiplies basis[b] * X^k. */
struct FamilyMember {
  std::vector<long> weights;
  KPoly poly;
};

/*
 * The finite family, enumerated by total weight |w|_1 and then
 * lexicographically; of p and -p only the one whose last nonzero weight is
 * positive appears (they have the same roots and mirrored signs).
 */
class PolyFamily {
 public:
  explicit PolyFamily(PolyFamilySpec spec);

  const PolyFamilySpec& spec() const { return spec_; }
  const std::vector<HahnElem>& basis() const { return basis_; }
  std::size_t weight_count() const { return (spec_.degree_bound + 1) * basis_.size(); }
  /* Number of members; ((2h+1)^N - 1) / 2 with N = weight_count(). */
  mpz_class size() const;

  /* Visits members in order until fn returns false. */
  void for_each(const std::function<bool(const std::vector<long>&)>& fn) const;
  KPoly polynomial(const std::vector<long>& weights) const;

 private:
  PolyFamilySpec spec_;
  std::vector<HahnElem> basis_;
};

/*
 * Signs of every family member at one point x, by a precomputed matrix: with
 * v_j = basis_b * x^k over a common positive denominator, sign p(x) is the sign
 * of the first nonzero row of sum_j w_j num(v_j).
 */
class FamilySigns {
 public:
  FamilySigns(const PolyFamily& family, const HahnElem& x);
  int sign(const std::vector<long>& weights) const;

 private:
  std::vector<std::vector<mpz_class>> int_rows_;   // all-rational fast path
  std::vector<std::vector<RealAlgNum>> alg_rows_;
};

struct TypeComparison {
  bool equal = true;
  std::optional<FamilyMember> distinguisher;
  int sign_x = 0, sign_y = 0;
};

/* bounded_type_eq */
TypeComparison bounded_type_eq(const PolyFamilySpec& spec, const HahnElem& x, const HahnElem& y);
TypeComparison bounded_type_eq(const PolyFamily& family, const FamilySigns& at_x, const HahnElem& y);

/*
 * eps_witness: a radius from 1, 1/2, ..., 2^-64, t1, t1^2, t1^4, ... such that
 * no family member has a root in (x - eps, x + eps). Throws DegenerateAtRoot.
 */
HahnElem eps_witness(const PolyFamilySpec& spec, const HahnElem& x);

/* ---- automorphisms ---- */

struct AutoDescriptor {
  enum class Kind { Scaling, Moebius };
  Kind kind = Kind::Scaling;
  std::vector<mpq_class> scaling;                      // t_i^g -> t_i^(g q_i)
  std::vector<std::array<RealAlgNum, 3>> moebius;      // t_i -> a t_i / (c t_i + d)

  static AutoDescriptor scale(std::vector<mpq_class> q);
  static AutoDescriptor mobius(std::vector<std::array<RealAlgNum, 3>> acd);
  /* The Moebius inverse (d, -c, a) per variable; scaling by 1/q. */
  AutoDescriptor inverse() const;
  std::string to_string() const;
};

/* "scale:q1,...,qn" or "moebius:a,c,d[;a,c,d...]"; throws InvalidDescriptor. */
AutoDescriptor parse_descriptor(std::string_view text);

/* auto_apply; throws NonIntegralExponent for Moebius on fractional exponents. */
HahnElem auto_apply(const AutoDescriptor& phi, const HahnElem& x);

struct EscapeWitness {
  HahnElem x, image, remainder;
};

struct EscapeResult {
  std::optional<EscapeWitness> witness;  // nullopt: every probe stayed in I
  std::size_t probes_tried = 0;
  bool escalated = false;
};

/*
 * ip_escape_demo: the first probe x in I with phi(x) outside I. With escalate,
 * probes that stay are retried with their leading coefficient halved.
 * Throws NotInIntegerPart for a probe outside I.
 */
EscapeResult ip_escape_demo(const AutoDescriptor& phi, const std::vector<HahnElem>& probes, bool escalate = false);

struct DiscreteUnboundedResult {
  LawReport laws;  // "unbounded", "discrete"
  std::vector<std::pair<HahnElem, std::optional<HahnElem>>> above;  // sample, member exceeding it
  std::vector<std::pair<HahnElem, HahnElem>> radius;                // member, isolating radius
};

/*
 * Membership predicates: canonical_I, constants, section_powers (needs a
 * section). Throws UnknownPredicate.
 */
DiscreteUnboundedResult discrete_unbounded_check(const std::string& predicate, const std::vector<HahnElem>& samples,
                                                 const std::optional<ValueGroupSection>& section = {});

}  // namespace ipart
