/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/cuts.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "ipart/error.hpp"
#include "ipart/parse.hpp"

namespace ipart {

PolyFamily::PolyFamily(PolyFamilySpec spec) : spec_(std::move(spec)) {
  if (spec_.height_bound < 1) throw std::invalid_argument("height bound must be positive");
  const std::size_t g = spec_.coeff_generators.size();
  if (g > 16) throw std::invalid_argument("too many generators");
  for (const auto& x : spec_.coeff_generators)
    if (x.rank() != spec_.rank) throw Error(ErrorKind::RankMismatch, x.to_string());
  for (std::size_t mask = 0; mask < (std::size_t(1) << g); ++mask) {
    HahnElem b = HahnElem::constant(1, spec_.rank);
    for (std::size_t i = 0; i < g; ++i)
      if (mask >> i & 1) b = b * spec_.coeff_generators[i];
    basis_.push_back(std::move(b));
  }
}

mpz_class PolyFamily::size() const {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), 2 * spec_.height_bound + 1, weight_count());
  return (n - 1) / 2;
}

void PolyFamily::for_each(const std::function<bool(const std::vector<long>&)>& fn) const {
  const std::size_t n = weight_count();
  const long h = spec_.height_bound;
  std::vector<long> w(n, 0);
  // all vectors with |w|_1 == rem on positions pos.., returns false to stop
  std::function<bool(std::size_t, long)> rec = [&](std::size_t pos, long rem) -> bool {
    if (pos == n) {
      if (rem != 0) return true;
      for (std::size_t j = n; j-- > 0;)
        if (w[j] != 0) return w[j] < 0 || fn(w);
      return true;
    }
    if (rem > h * static_cast<long>(n - pos)) return true;
    const long m = std::min(h, rem);
    for (long v = -m; v <= m; ++v) {
      w[pos] = v;
      if (!rec(pos + 1, rem - (v < 0 ? -v : v))) return false;
    }
    w[pos] = 0;
    return true;
  };
  for (long level = 1; level <= h * static_cast<long>(n); ++level)
    if (!rec(0, level)) return;
}

KPoly PolyFamily::polynomial(const std::vector<long>& weights) const {
  const std::size_t nb = basis_.size();
  std::vector<HahnElem> coeffs;
  for (unsigned k = 0; k <= spec_.degree_bound; ++k) {
    HahnElem c(spec_.rank);
    for (std::size_t b = 0; b < nb; ++b) {
      const long w = weights[k * nb + b];
      if (w != 0) c = c + HahnElem::constant(w, spec_.rank) * basis_[b];
    }
    coeffs.push_back(std::move(c));
  }
  return KPoly(spec_.rank, std::move(coeffs));
}

namespace {

/*
 * Numerators of basis_b * C(k, i) * x^(k - i) over the common positive
 * denominator prod(distinct basis dens) * den(x)^degree. Indexed [i][k * nb + b].
 */
std::vector<std::vector<GenPoly>> taylor_numerators(const PolyFamily& family, const HahnElem& x, unsigned max_order) {
  const auto& basis = family.basis();
  const std::size_t nb = basis.size(), rank = family.spec().rank;
  const unsigned d = family.spec().degree_bound;
  if (x.rank() != rank) throw Error(ErrorKind::RankMismatch, x.to_string());

  std::vector<GenPoly> dens;
  for (const auto& b : basis) {
    bool seen = false;
    for (const auto& e : dens) seen = seen || e == b.den();
    if (!seen) dens.push_back(b.den());
  }
  std::vector<GenPoly> other(nb, GenPoly::constant(1, rank));
  for (std::size_t b = 0; b < nb; ++b)
    for (const auto& e : dens)
      if (!(e == basis[b].den())) other[b] = other[b] * e;

  std::vector<GenPoly> apow{GenPoly::constant(1, rank)}, cpow{GenPoly::constant(1, rank)};
  for (unsigned k = 1; k <= d; ++k) {
    apow.push_back(apow.back() * x.num());
    cpow.push_back(cpow.back() * x.den());
  }
  std::vector<std::vector<GenPoly>> out(max_order + 1, std::vector<GenPoly>(family.weight_count(), GenPoly(rank)));
  for (unsigned i = 0; i <= max_order; ++i) {
    for (unsigned k = i; k <= d; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, i);
      const GenPoly xk = (apow[k - i] * cpow[d - (k - i)]).scaled(RealAlgNum(binom));
      for (std::size_t b = 0; b < nb; ++b) out[i][k * nb + b] = basis[b].num() * xk * other[b];
    }
  }
  return out;
}

GenPoly combine(const std::vector<GenPoly>& polys, const std::vector<long>& w, std::size_t rank) {
  GenPoly r(rank);
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) r = r + polys[j].scaled(RealAlgNum(w[j]));
  return r;
}

int poly_sign(const GenPoly& p) { return p.is_zero() ? 0 : p.leading().coeff.sign(); }

}  // namespace

FamilySigns::FamilySigns(const PolyFamily& family, const HahnElem& x) {
  const auto nums = taylor_numerators(family, x, 0)[0];
  const std::size_t n = nums.size();
  std::map<ExponentVec, std::vector<RealAlgNum>> rows;
  bool rational = true;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : nums[j].terms()) {
      auto& row = rows.try_emplace(t.expo, n, RealAlgNum(0)).first->second;
      row[j] = t.coeff;
      rational = rational && t.coeff.is_rational();
    }
  }
  for (auto& [e, row] : rows) {
    if (!rational) {
      alg_rows_.push_back(std::move(row));
      continue;
    }
    // clear denominators; a positive factor keeps every sign
    mpz_class l = 1;
    for (const auto& c : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : row) z.push_back(mpz_class(c.rational() * l));
    int_rows_.push_back(std::move(z));
  }
}

int FamilySigns::sign(const std::vector<long>& w) const {
  mpz_class acc;
  for (const auto& row : int_rows_) {
    acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) acc += row[j] * w[j];
    if (const int s = sgn(acc)) return s;
  }
  for (const auto& row : alg_rows_) {
    RealAlgNum a(0);
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) a = a + row[j] * RealAlgNum(w[j]);
    if (const int s = a.sign()) return s;
  }
  return 0;
}

TypeComparison bounded_type_eq(const PolyFamily& family, const FamilySigns& at_x, const HahnElem& y) {
  FamilySigns at_y(family, y);
  TypeComparison r;
  family.for_each([&](const std::vector<long>& w) {
    const int sx = at_x.sign(w), sy = at_y.sign(w);
    if (sx == sy) return true;
    r = {false, FamilyMember{w, family.polynomial(w)}, sx, sy};
    return false;
  });
  return r;
}

TypeComparison bounded_type_eq(const PolyFamilySpec& spec, const HahnElem& x, const HahnElem& y) {
  PolyFamily family(spec);
  return bounded_type_eq(family, FamilySigns(family, x), y);
}

namespace {

// c * t1^e
struct Radius {
  mpq_class c;
  ExponentVec e;
  HahnElem value() const { return HahnElem::monomial(RealAlgNum(c), e); }
  GenPoly times(const GenPoly& p, unsigned power) const {
    mpq_class cp = 1;
    for (unsigned i = 0; i < power; ++i) cp *= c;
    return p.shifted(e.scaled(power)).scaled(RealAlgNum(cp));
  }
};

Radius radius_candidate(std::size_t index, std::size_t rank) {
  if (index <= 64) return {mpq_class(1, mpz_class(1) << index), ExponentVec(rank)};
  const std::size_t m = index - 65;
  if (m > 40) throw std::logic_error("no root-free radius found");
  return {1, ExponentVec::unit(rank, 0, mpq_class(mpz_class(1) << m))};
}

}  // namespace

HahnElem eps_witness(const PolyFamilySpec& spec, const HahnElem& x) {
  PolyFamily family(spec);
  const std::size_t rank = spec.rank;
  const unsigned d = spec.degree_bound;
  const auto taylor = taylor_numerators(family, x, d);
  std::size_t index = 0;
  Radius eps = radius_candidate(0, rank);

  family.for_each([&](const std::vector<long>& w) {
    std::vector<GenPoly> a;
    bool nonzero = false;
    for (unsigned i = 0; i <= d; ++i) {
      a.push_back(combine(taylor[i], w, rank));
      nonzero = nonzero || !a.back().is_zero();
    }
    if (!nonzero) return true;  // the zero polynomial has no sign to keep
    if (a[0].is_zero())
      throw Error(ErrorKind::DegenerateAtRoot, family.polynomial(w).to_string() + " vanishes at " + x.to_string());
    KPoly p(rank);
    while (true) {
      // |a0| > sum |a_i| eps^i leaves no root of p(x + e) with |e| <= eps
      GenPoly slack = poly_sign(a[0]) > 0 ? a[0] : -a[0];
      for (unsigned i = 1; i <= d; ++i)
        if (!a[i].is_zero()) slack = slack - eps.times(poly_sign(a[i]) > 0 ? a[i] : -a[i], i);
      if (poly_sign(slack) > 0) return true;
      // the bound is only sufficient; count exactly
      if (p.is_zero()) p = family.polynomial(w);
      const HahnElem e = eps.value(), hi = x + e;
      int roots = poly_sturm_count(p, KBound::at(x - e), KBound::at(hi));
      if (p(hi).is_zero()) --roots;
      if (roots == 0) return true;
      eps = radius_candidate(++index, rank);
    }
  });
  return eps.value();
}

/* ---- automorphisms ---- */

AutoDescriptor AutoDescriptor::scale(std::vector<mpq_class> q) {
  for (const auto& v : q)
    if (sgn(v) <= 0) throw Error(ErrorKind::InvalidDescriptor, "scaling factors must be positive");
  AutoDescriptor d;
  d.kind = Kind::Scaling;
  d.scaling = std::move(q);
  return d;
}

AutoDescriptor AutoDescriptor::mobius(std::vector<std::array<RealAlgNum, 3>> acd) {
  for (const auto& m : acd)
    if (m[0].sign() <= 0 || m[2].sign() <= 0) throw Error(ErrorKind::InvalidDescriptor, "moebius needs a > 0 and d > 0");
  AutoDescriptor d;
  d.kind = Kind::Moebius;
  d.moebius = std::move(acd);
  return d;
}

AutoDescriptor AutoDescriptor::inverse() const {
  if (kind == Kind::Scaling) {
    std::vector<mpq_class> q;
    for (const auto& v : scaling) q.push_back(1 / v);
    return scale(std::move(q));
  }
  // y = a t / (c t + d)  <=>  t = d y / (-c y + a)
  std::vector<std::array<RealAlgNum, 3>> inv;
  for (const auto& m : moebius) inv.push_back({m[2], -m[1], m[0]});
  return mobius(std::move(inv));
}

std::string AutoDescriptor::to_string() const {
  std::string s = kind == Kind::Scaling ? "scale:" : "moebius:";
  if (kind == Kind::Scaling) {
    for (std::size_t i = 0; i < scaling.size(); ++i) s += (i ? "," : "") + ipart::to_string(scaling[i]);
  } else {
    for (std::size_t i = 0; i < moebius.size(); ++i) {
      s += i ? ";" : "";
      for (int k = 0; k < 3; ++k) s += (k ? "," : "") + moebius[i][k].to_string();
    }
  }
  return s;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

RealAlgNum descriptor_constant(const std::string& text) {
  try {
    if (auto c = parse_expr(text).as_constant()) return *c;
  } catch (const Error&) {
  }
  throw Error(ErrorKind::InvalidDescriptor, "not a constant: '" + text + "'");
}

}  // namespace

AutoDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidDescriptor, std::string(text));
  const std::string_view kind = text.substr(0, colon), body = text.substr(colon + 1);
  if (kind == "scale") {
    std::vector<mpq_class> q;
    for (const auto& part : split(body, ',')) {
      try {
        q.push_back(parse_rational(part));
      } catch (const Error&) {
        throw Error(ErrorKind::InvalidDescriptor, "bad scaling factor '" + part + "'");
      }
    }
    return AutoDescriptor::scale(std::move(q));
  }
  if (kind == "moebius") {
    std::vector<std::array<RealAlgNum, 3>> acd;
    for (const auto& triple : split(body, ';')) {
      auto parts = split(triple, ',');
      if (parts.size() != 3) throw Error(ErrorKind::InvalidDescriptor, "expected a,c,d in '" + triple + "'");
      acd.push_back({descriptor_constant(parts[0]), descriptor_constant(parts[1]), descriptor_constant(parts[2])});
    }
    return AutoDescriptor::mobius(std::move(acd));
  }
  throw Error(ErrorKind::InvalidDescriptor, "unknown kind '" + std::string(kind) + "'");
}

namespace {

HahnElem scale_exponents(const std::vector<mpq_class>& q, const HahnElem& x) {
  auto map_poly = [&](const GenPoly& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      std::vector<mpq_class> c = t.expo.coords();
      for (std::size_t i = 0; i < c.size() && i < q.size(); ++i) c[i] *= q[i];
      terms.push_back({ExponentVec(std::move(c)), t.coeff});
    }
    return GenPoly(p.rank(), std::move(terms));
  };
  return HahnElem::make(map_poly(x.num()), map_poly(x.den()));
}

/*
 * t_i -> a t_i / (c t_i + d) over one common denominator: with h_i the largest
 * exponent of t_i in p, phi(p) = N / prod (c t_i + d)^h_i where
 * N = sum coeff * prod (a t_i)^g_i (c t_i + d)^(h_i - g_i).
 */
struct Substituted {
  GenPoly num;
  std::vector<long> den_power;
};

class Substitution {
 public:
  Substitution(const std::vector<std::array<RealAlgNum, 3>>& acd, std::size_t rank) : rank_(rank), active_(rank, false) {
    for (std::size_t i = 0; i < rank && i < acd.size(); ++i) {
      const auto& [a, c, d] = acd[i];
      if (a == RealAlgNum(1) && c.sign() == 0 && d == RealAlgNum(1)) continue;  // identity
      active_[i] = true;
      a_.resize(rank, RealAlgNum(1));
      const ExponentVec e = ExponentVec::unit(rank, i);
      a_[i] = a;
      lin_.resize(rank, GenPoly(rank));
      lin_[i] = GenPoly(rank, {{ExponentVec(rank), d}, {e, c}});
    }
    lin_pows_.resize(rank);
  }

  Substituted apply(const GenPoly& p, const HahnElem& whole) {
    std::vector<long> hi(rank_, 0);
    bool first = true;
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < rank_; ++i) {
        if (!active_[i]) continue;
        if (t.expo[i].get_den() != 1)
          throw Error(ErrorKind::NonIntegralExponent, "t" + std::to_string(i + 1) + "^" + ipart::to_string(t.expo[i]) + " in " + whole.to_string());
        const long g = t.expo[i].get_num().get_si();
        hi[i] = first ? g : std::max(hi[i], g);
      }
      first = false;
    }
    GenPoly sum(rank_);
    for (const auto& t : p.terms()) {
      GenPoly term = GenPoly::monomial(t.coeff, t.expo);  // t_i^g_i stays; a^g_i scales it
      for (std::size_t i = 0; i < rank_; ++i) {
        if (!active_[i]) continue;
        const long g = t.expo[i].get_num().get_si();
        term = term.scaled(pow(a_[i], g)) * lin_pow(i, hi[i] - g);
      }
      sum = sum + term;
    }
    for (std::size_t i = 0; i < rank_; ++i)
      if (!active_[i]) hi[i] = 0;
    return {std::move(sum), std::move(hi)};
  }

  const GenPoly& lin_pow(std::size_t i, long k) {
    auto& cache = lin_pows_[i];
    if (cache.empty()) cache.push_back(GenPoly::constant(1, rank_));
    while (static_cast<long>(cache.size()) <= k) cache.push_back(cache.back() * lin_[i]);
    return cache[k];
  }

 private:
  std::size_t rank_;
  std::vector<bool> active_;
  std::vector<RealAlgNum> a_;
  std::vector<GenPoly> lin_;
  std::vector<std::vector<GenPoly>> lin_pows_;
};

HahnElem substitute(const std::vector<std::array<RealAlgNum, 3>>& acd, const HahnElem& x) {
  const std::size_t rank = x.rank();
  Substitution sub(acd, rank);
  Substituted n = sub.apply(x.num(), x), d = sub.apply(x.den(), x);
  // phi(x) = (n.num / L^hn) / (d.num / L^hd); move the surplus power to one side
  GenPoly top = n.num, bottom = d.num;
  for (std::size_t i = 0; i < rank; ++i) {
    const long diff = d.den_power[i] - n.den_power[i];
    if (diff > 0) top = top * sub.lin_pow(i, diff);
    if (diff < 0) bottom = bottom * sub.lin_pow(i, -diff);
  }
  return HahnElem::make(std::move(top), std::move(bottom));
}

}  // namespace

HahnElem auto_apply(const AutoDescriptor& phi, const HahnElem& x) {
  if (phi.kind == AutoDescriptor::Kind::Scaling) return scale_exponents(phi.scaling, x);
  return substitute(phi.moebius, x);
}

EscapeResult ip_escape_demo(const AutoDescriptor& phi, const std::vector<HahnElem>& probes, bool escalate) {
  EscapeResult r;
  auto attempt = [&](const HahnElem& x) -> bool {
    ++r.probes_tried;
    HahnElem y = auto_apply(phi, x);
    if (ip_member(y)) return false;
    r.witness = EscapeWitness{x, y, ip_floor(y).remainder};
    return true;
  };
  for (const auto& x : probes) {
    if (!ip_member(x)) throw Error(ErrorKind::NotInIntegerPart, x.to_string());
    if (attempt(x)) return r;
  }
  if (!escalate) return r;
  r.escalated = true;
  for (const auto& x : probes) {
    if (x.is_zero() || valuation(x)->sign() >= 0) continue;  // an integer has no infinite part to halve
    const Term& lead = x.num().leading();
    HahnElem halved = x - HahnElem::monomial(lead.coeff * RealAlgNum(mpq_class(1, 2)), lead.expo);
    if (attempt(halved)) return r;
  }
  return r;
}

namespace {

struct Membership {
  std::function<bool(const HahnElem&)> member;
  std::function<std::optional<HahnElem>(const HahnElem&)> above;
  std::function<HahnElem(const HahnElem&)> radius;
};

Membership membership(const std::string& name, const std::optional<ValueGroupSection>& section) {
  if (name == "canonical_I") {
    return {ip_member,
            [](const HahnElem& x) -> std::optional<HahnElem> {
              return ip_floor(x).floor + HahnElem::constant(1, x.rank());
            },
            [](const HahnElem& m) { return HahnElem::constant(mpq_class(1, 2), m.rank()); }};
  }
  if (name == "constants") {
    return {[](const HahnElem& x) { return x.as_constant().has_value(); },
            [](const HahnElem& x) -> std::optional<HahnElem> {
              if (x.is_zero() || valuation(x)->sign() >= 0)
                return HahnElem::constant(RealAlgNum(mpz_class(floor(rfs_residue(x)) + 1)), x.rank());
              if (x.sign() < 0) return HahnElem::constant(0, x.rank());
              return std::nullopt;  // positive infinite: above every constant
            },
            // an infinitesimal radius separates distinct constants
            [](const HahnElem& m) { return HahnElem::variable(0, m.rank()); }};
  }
  if (name == "section_powers") {
    if (!section) throw std::invalid_argument("section_powers needs a section");
    const ValueGroupSection s = *section;
    auto member = [s](const HahnElem& x) {
      if (x.sign() <= 0) return false;
      try {
        auto m = s.materialize(vgs_representative(s, x));
        return m && *m == x;
      } catch (const Error&) {
        return false;
      }
    };
    auto above = [s](const HahnElem& x) -> std::optional<HahnElem> {
      if (x.sign() <= 0) return HahnElem::constant(1, x.rank());
      try {
        return section_above(s, x).above_value;
      } catch (const Error&) {
        return std::nullopt;
      }
    };
    return {member, above, [](const HahnElem& m) { return m / HahnElem::constant(2, m.rank()); }};
  }
  throw Error(ErrorKind::UnknownPredicate, name);
}

}  // namespace

DiscreteUnboundedResult discrete_unbounded_check(const std::string& predicate, const std::vector<HahnElem>& samples,
                                                 const std::optional<ValueGroupSection>& section) {
  const Membership m = membership(predicate, section);
  DiscreteUnboundedResult r;
  r.laws.declare("unbounded");
  r.laws.declare("discrete");
  std::vector<HahnElem> members;
  for (const auto& x : samples) {
    if (m.member(x)) members.push_back(x);
    std::optional<HahnElem> y = m.above(x);
    const bool ok = y && m.member(*y) && *y > x;
    r.laws.check_lazy("unbounded", ok, [&] {
      return y ? y->to_string() + " does not witness " + x.to_string() : "no member exceeds " + x.to_string();
    });
    r.above.emplace_back(x, y);
    if (ok) members.push_back(*y);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const HahnElem rad = m.radius(members[i]);
    r.radius.emplace_back(members[i], rad);
    const HahnElem lo = members[i] - rad, hi = members[i] + rad;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const HahnElem& z = members[j];
      if (z.rank() != lo.rank() || z == members[i]) continue;
      r.laws.check_lazy("discrete", !(lo < z && z < hi),
                        [&] { return z.to_string() + " within " + rad.to_string() + " of " + members[i].to_string(); });
    }
  }
  return r;
}

}  // namespace ipart
