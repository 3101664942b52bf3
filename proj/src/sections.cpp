/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/sections.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ipart/error.hpp"
#include "ipart/linalg.hpp"

namespace ipart {

namespace {

void require_positive(const HahnElem& x, const char* what) {
  if (x.sign() <= 0) throw Error(ErrorKind::NotPositive, std::string(what) + " = " + x.to_string());
}

HahnElem times(const mpz_class& n, const HahnElem& y) {
  return HahnElem::constant(RealAlgNum(n), y.rank()) * y;
}

// Least n >= 1 with x < n*y, given v(x) = v(y).
mpz_class least_multiple(const HahnElem& x, const HahnElem& y) {
  const RealAlgNum ratio = x.num().leading().coeff / y.num().leading().coeff;
  const mpz_class f = floor(ratio);
  // below f the leading coefficient of n*y - x is negative; at f it may cancel
  if (f >= 1 && (times(f, y) - x).sign() > 0) return f;
  return f + 1;
}

}  // namespace

bool arch_witnesses(const HahnElem& x, const HahnElem& y, const mpz_class& n) {
  return (times(n, y) - x).sign() > 0 && (times(n, x) - y).sign() > 0;
}

ArchResult arch_equiv(const HahnElem& x, const HahnElem& y) {
  require_positive(x, "x");
  require_positive(y, "y");
  if (!(*valuation(x) == *valuation(y))) return {};
  mpz_class n = std::max(least_multiple(x, y), least_multiple(y, x));
  if (!arch_witnesses(x, y, n) || (n > 1 && arch_witnesses(x, y, n - 1)))
    throw std::logic_error("archimedean witness is not minimal for " + x.to_string() + ", " + y.to_string());
  return {true, n};
}

std::optional<mpz_class> arch_search(const HahnElem& x, const HahnElem& y, const mpz_class& limit) {
  require_positive(x, "x");
  require_positive(y, "y");
  mpz_class lo = 0, hi = 1;  // witness(lo) false (or lo = 0), hi is the probe
  while (!arch_witnesses(x, y, hi)) {
    if (hi >= limit) return std::nullopt;
    lo = hi;
    hi = std::min(mpz_class(hi * 2), limit);
  }
  // the property is monotone in n, bisect (lo, hi]
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    if (arch_witnesses(x, y, mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

bool FormalProduct::integral() const {
  return std::all_of(exponents.begin(), exponents.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

FormalProduct operator+(const FormalProduct& a, const FormalProduct& b) {
  if (a.exponents.size() != b.exponents.size()) throw std::invalid_argument("formal products of different length");
  FormalProduct r{a.exponents};
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

std::string FormalProduct::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? ", " : "") + ipart::to_string(exponents[i]);
  return s + "]";
}

ValueGroupSection ValueGroupSection::unchecked(std::size_t rank, std::vector<HahnElem> generators) {
  ValueGroupSection s(rank);
  for (auto& g : generators) s.push(std::move(g));
  return s;
}

void ValueGroupSection::push(HahnElem g) {
  if (g.rank() != rank_) throw Error(ErrorKind::RankMismatch, g.to_string());
  if (g.is_zero()) throw std::invalid_argument("zero generator");
  values_.push_back(*valuation(g));
  generators_.push_back(std::move(g));
}

ExponentVec ValueGroupSection::value_of(const FormalProduct& p) const {
  if (p.exponents.size() != size()) throw std::invalid_argument("formal product length " + std::to_string(p.exponents.size()));
  ExponentVec v(rank_);
  for (std::size_t i = 0; i < size(); ++i) v = v + values_[i].scaled(p.exponents[i]);
  return v;
}

std::optional<HahnElem> ValueGroupSection::materialize(const FormalProduct& p) const {
  if (p.exponents.size() != size()) throw std::invalid_argument("formal product length " + std::to_string(p.exponents.size()));
  if (!p.integral()) return std::nullopt;
  HahnElem r = HahnElem::constant(1, rank_);
  for (std::size_t i = 0; i < size(); ++i) r = r * pow(generators_[i], p.exponents[i].get_num().get_si());
  return r;
}

std::string ValueGroupSection::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) s += (i ? ", " : "") + generators_[i].to_string();
  return s + "]";
}

ValueGroupSection vgs_build(const std::vector<HahnElem>& enumeration, std::size_t rank) {
  ValueGroupSection s(rank);
  for (const HahnElem& x : enumeration) {
    if (x.rank() != rank) throw Error(ErrorKind::RankMismatch, x.to_string());
    if (x.is_zero()) continue;
    // a member of the divisible hull is already equivalent to x iff v(x) is in the span
    if (solve_combination(s.values(), *valuation(x))) continue;
    s.push(abs(x));
  }
  return s;
}

FormalProduct vgs_representative(const ValueGroupSection& s, const HahnElem& x) {
  if (x.is_zero()) throw Error(ErrorKind::NotInSpan, "0 has no archimedean class");
  const ExponentVec v = *valuation(x);
  auto c = solve_combination(s.values(), v);
  if (!c) throw Error(ErrorKind::NotInSpan, "v(" + x.to_string() + ") = " + v.to_string());
  return FormalProduct{std::move(*c)};
}

LawReport vgs_verify(const ValueGroupSection& s, const std::vector<std::pair<FormalProduct, FormalProduct>>& samples) {
  LawReport r;
  for (const char* law : {"independence", "positivity", "homomorphism", "injectivity", "uniqueness"}) r.declare(law);
  r.check("independence", linearly_independent(s.values()), "values are Q-linearly dependent");
  for (const auto& g : s.generators()) r.check_lazy("positivity", g.sign() > 0, [&] { return g.to_string(); });

  // sample pairs reuse the same few products; materialize each once
  std::map<std::vector<mpq_class>, std::optional<HahnElem>> cache;
  auto materialized = [&](const FormalProduct& f) -> const std::optional<HahnElem>& {
    auto it = cache.find(f.exponents);
    if (it == cache.end()) it = cache.emplace(f.exponents, s.materialize(f)).first;
    return it->second;
  };
  std::set<std::pair<std::vector<mpq_class>, std::vector<mpq_class>>> compared;

  for (const auto& [p, q] : samples) {
    auto pair_text = [&] { return p.to_string() + ", " + q.to_string(); };
    const ExponentVec vp = s.value_of(p), vq = s.value_of(q);
    const FormalProduct pq = p + q;
    bool hom = s.value_of(pq) == vp + vq;
    const auto& mp = materialized(p);
    const auto& mq = materialized(q);
    if (hom && mp && mq) {
      const HahnElem prod = *mp * *mq;
      hom = *valuation(prod) == vp + vq && prod == *materialized(pq);
    }
    r.check_lazy("homomorphism", hom, pair_text);
    if (p == q) continue;
    r.check_lazy("injectivity", !(vp == vq), pair_text);
    // the class of a formal product is its value; materialized ones are compared directly
    bool equivalent = vp == vq;
    if (mp && mq && compared.insert(std::minmax(p.exponents, q.exponents)).second)
      equivalent = arch_equiv(*mp, *mq).equivalent;
    r.check_lazy("uniqueness", !equivalent, [&] {
      if (mp && mq) return mp->to_string() + " ~ " + mq->to_string();
      return pair_text() + " share value " + vp.to_string();
    });
  }
  return r;
}

std::vector<FormalProduct> integral_products(const ValueGroupSection& s, long radius) {
  std::vector<FormalProduct> out;
  std::vector<long> e(s.size(), -radius);
  while (true) {
    FormalProduct p;
    for (long v : e) p.exponents.emplace_back(v);
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < e.size() && e[i] == radius) e[i++] = -radius;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

AboveWitness section_above(const ValueGroupSection& s, const HahnElem& x) {
  require_positive(x, "x");
  FormalProduct above;
  if (valuation(x)->sign() < 0) {
    // x^2 dominates N*x; scale further so the exponents become integers
    FormalProduct rep = vgs_representative(s, x);
    mpz_class l = 1;
    for (const auto& q : rep.exponents) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (auto& q : rep.exponents) q *= 2 * l;
    above = std::move(rep);
  } else {
    // finite x: any infinite section element will do
    auto it = std::find_if(s.values().begin(), s.values().end(), [](const ExponentVec& v) { return !v.is_zero(); });
    if (it == s.values().end()) throw Error(ErrorKind::NotInSpan, "section has no infinite element");
    above.exponents.assign(s.size(), 0);
    above.exponents[it - s.values().begin()] = it->sign() < 0 ? 1 : -1;
  }
  HahnElem value = *s.materialize(above);
  if (value <= x) throw std::logic_error("section element " + value.to_string() + " does not exceed " + x.to_string());
  return {std::move(above), std::move(value)};
}

HahnElem isolation_radius(const ValueGroupSection& s, const FormalProduct& y) {
  auto v = s.materialize(y);
  if (!v) throw Error(ErrorKind::NonIntegralExponent, "y = " + y.to_string());
  return *v / HahnElem::constant(2, s.rank());
}

LawReport isolation_check(const ValueGroupSection& s, const FormalProduct& y, const HahnElem& eps,
                          const std::vector<FormalProduct>& samples) {
  LawReport r;
  r.declare("isolation");
  auto yv = s.materialize(y);
  if (!yv) throw Error(ErrorKind::NonIntegralExponent, "y = " + y.to_string());
  r.check("eps_positive", eps.sign() > 0, eps.to_string());
  const HahnElem lo = *yv - eps, hi = *yv + eps;
  for (const auto& z : samples) {
    if (z == y) continue;
    auto zv = s.materialize(z);
    if (!zv) continue;
    r.check_lazy("isolation", !(lo < *zv && *zv < hi),
                 [&] { return zv->to_string() + " in (" + lo.to_string() + ", " + hi.to_string() + ")"; });
  }
  return r;
}

RealAlgNum rfs_residue(const HahnElem& x) {
  if (x.is_zero()) return 0;
  const ExponentVec v = *valuation(x);
  if (v.sign() < 0) throw Error(ErrorKind::NotFinite, x.to_string());
  // den has residue 1 by normalization
  return x.num().coeff_at(ExponentVec(x.rank()));
}

bool mu_equivalent(const HahnElem& x, const HahnElem& y) {
  const HahnElem d = x - y;
  return d.is_zero() || valuation(d)->sign() > 0;
}

LawReport rfs_verify(const std::vector<HahnElem>& samples, const std::optional<ResidueCandidate>& candidate) {
  LawReport r;
  for (const char* law : {"finite", "representative", "homomorphism", "constants_distinct"}) r.declare(law);
  std::vector<std::pair<HahnElem, RealAlgNum>> finite;
  for (const auto& x : samples) {
    const bool ok = x.is_zero() || valuation(x)->sign() >= 0;
    r.check_lazy("finite", ok, [&] { return x.to_string(); });
    if (!ok) continue;
    RealAlgNum c = rfs_residue(x);
    r.check_lazy("representative", mu_equivalent(x, HahnElem::constant(c, x.rank())),
                 [&] { return x.to_string() + " vs " + c.to_string(); });
    finite.emplace_back(x, std::move(c));
  }
  for (std::size_t i = 0; i + 1 < finite.size(); ++i) {
    const auto& [x, cx] = finite[i];
    const auto& [y, cy] = finite[i + 1];
    if (x.rank() != y.rank()) continue;
    const bool ok = rfs_residue(x + y) == cx + cy && rfs_residue(x * y) == cx * cy;
    r.check_lazy("homomorphism", ok, [&] { return x.to_string() + ", " + y.to_string(); });
  }
  // closest pairs of distinct residues are the hardest case
  std::vector<RealAlgNum> res;
  for (const auto& f : finite) res.push_back(f.second);
  std::sort(res.begin(), res.end(), [](const RealAlgNum& a, const RealAlgNum& b) { return a < b; });
  for (std::size_t i = 0; i + 1 < res.size(); ++i) {
    if (res[i] == res[i + 1]) continue;
    r.check_lazy("constants_distinct", !mu_equivalent(HahnElem::constant(res[i]), HahnElem::constant(res[i + 1])),
                 [&] { return res[i].to_string() + " ~ " + res[i + 1].to_string(); });
  }
  if (!candidate) return r;

  for (const char* law : {"candidate_finite", "candidate_uniqueness", "candidate_cover"}) r.declare(law);
  const auto& extra = candidate->extra;
  for (const auto& e : extra)
    r.check_lazy("candidate_finite", e.is_zero() || valuation(e)->sign() >= 0, [&] { return e.to_string(); });
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (std::size_t j = i + 1; j < extra.size(); ++j) {
      if (extra[i].rank() != extra[j].rank() || extra[i] == extra[j]) continue;
      r.check_lazy("candidate_uniqueness", !mu_equivalent(extra[i], extra[j]),
                   [&] { return extra[i].to_string() + " ~ " + extra[j].to_string(); });
    }
    if (candidate->all_constants && (extra[i].is_zero() || valuation(extra[i])->sign() >= 0)) {
      // its residue is itself a member of the candidate
      const HahnElem c = HahnElem::constant(rfs_residue(extra[i]), extra[i].rank());
      r.check_lazy("candidate_uniqueness", c == extra[i], [&] { return c.to_string() + " ~ " + extra[i].to_string(); });
    }
  }
  if (!candidate->all_constants) {
    for (const auto& [x, c] : finite) {
      const bool met = std::any_of(extra.begin(), extra.end(), [&](const HahnElem& e) {
        return e.rank() == x.rank() && mu_equivalent(e, x);
      });
      r.check_lazy("candidate_cover", met, [&] { return x.to_string(); });
    }
  }
  return r;
}

}  // namespace ipart
