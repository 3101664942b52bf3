/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ipart/cuts.hpp"
#include "ipart/error.hpp"
#include "ipart/integer_part.hpp"
#include "ipart/kpoly.hpp"
#include "ipart/sampling.hpp"
#include "ipart/sections.hpp"
#include "json.hpp"

namespace ipart {

void SuiteReport::add(std::string input, std::optional<std::string> expected, std::string got, bool ok) {
  cases.push_back({std::move(input), std::move(expected), std::move(got), ok});
}

std::size_t SuiteReport::passed() const {
  return std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

std::string SuiteReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json o;
    o["input"] = c.input;
    if (c.expected) o["expected"] = *c.expected;
    o["got"] = c.got;
    o["status"] = c.passed ? "pass" : "fail";
    j["cases"].push_back(std::move(o));
  }
  j["summary"] = {{"pass", passed()}, {"fail", failed()}};
  j["seed"] = seed;
  return j.dump();
}

namespace {

using Suite = std::function<void(SuiteReport&, Sampler&)>;

HahnElem one(std::size_t rank) { return HahnElem::constant(1, rank); }

std::string join_failed(const LawReport& laws) {
  std::string s;
  for (const auto& l : laws.laws())
    if (!l.passed) s += (s.empty() ? "failed: " : ", ") + l.law + " (" + l.counterexample.value_or("") + ")";
  return s.empty() ? "all laws pass" : s;
}

// Runs one case; a library error counts as a failure of that case only.
void guarded(SuiteReport& r, const std::string& input, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.add(input, std::nullopt, std::string("error: ") + e.what(), false);
  }
}

/* ---- floor ---- */

void floor_suite(SuiteReport& r, Sampler& s) {
  ElementShape shape;
  shape.algebraic = true;
  for (int i = 0; i < 500; ++i) {
    const HahnElem x = s.element(shape);
    guarded(r, x.to_string(), [&] {
      const FloorResult f = ip_floor(x);
      const bool ok = ip_member(f.floor) && f.remainder.sign() >= 0 && f.remainder < one(1) && f.floor + f.remainder == x &&
                      f.floor <= x && x < f.floor + one(1);
      r.add(x.to_string(), std::nullopt, "floor " + f.floor.to_string() + ", remainder " + f.remainder.to_string(), ok);
    });
  }
}

void transfer_suite(SuiteReport& r, Sampler& s) {
  for (int i = 0; i < 200; ++i) {
    ElementShape shape;
    shape.rank = 1 + i % 2;
    shape.algebraic = shape.rank == 1;
    const HahnElem x = s.element(shape);
    guarded(r, x.to_string(), [&] {
      const long m = required_ramification(x);
      const HahnElem direct = ip_floor(x).floor;
      const DenseFloorTrace t = ip_floor_via_dense_trace(x, m);
      r.add(x.to_string() + " (m=" + std::to_string(m) + ")", direct.to_string(),
            t.result.floor.to_string() + " via interval " + std::to_string(t.interval), t.result.floor == direct);
    });
  }
}

/* ---- sections ---- */

FormalProduct times(const FormalProduct& p, const mpz_class& k) {
  FormalProduct q = p;
  for (auto& e : q.exponents) e *= k;
  return q;
}

mpz_class exponent_lcm(const FormalProduct& p) {
  mpz_class l = 1;
  for (const auto& e : p.exponents) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
  return l;
}

void vgs_suite(SuiteReport& r, Sampler& s) {
  for (int i = 0; i < 50; ++i) {
    ElementShape shape;
    shape.rank = 1 + i % 3;
    shape.max_terms = 2;
    const long n = s.integer(1, 50);
    std::vector<HahnElem> e;
    for (long k = 0; k < n; ++k) e.push_back(s.element(shape));
    const std::string input = "enumeration " + std::to_string(i) + " (rank " + std::to_string(shape.rank) + ", " +
                              std::to_string(n) + " elements)";
    guarded(r, input, [&] {
      const ValueGroupSection sec = vgs_build(e, shape.rank);
      const auto box = integral_products(sec, 1);
      std::vector<std::pair<FormalProduct, FormalProduct>> pairs;
      for (const auto& a : box)
        for (const auto& b : box) pairs.emplace_back(a, b);
      LawReport laws = vgs_verify(sec, pairs);
      // A fractional representative lives in the divisible hull, where its class is its value.
      // Small powers are also compared inside K: x^L against the materialized L-th power.
      for (const auto& x : e) {
        if (x.is_zero()) continue;
        const FormalProduct rep = vgs_representative(sec, x);
        const mpz_class l = exponent_lcm(rep);
        bool ok = sec.value_of(rep) == *valuation(x);
        if (ok && l <= 2) {
          const auto m = sec.materialize(times(rep, l));
          ok = m && arch_equiv(*m, pow(abs(x), l.get_si())).equivalent;
        }
        laws.check_lazy("representative", ok, [&] { return x.to_string() + " -> " + rep.to_string(); });
      }
      r.add(input, std::nullopt, sec.to_string() + "; " + join_failed(laws), laws.passed());
    });
  }
}

void isolation_suite(SuiteReport& r, Sampler& s) {
  std::vector<ValueGroupSection> sections;
  std::vector<ElementShape> shapes;
  for (int j = 0; j < 10; ++j) {
    ElementShape shape;
    shape.rank = 1 + j % 2;
    shape.max_terms = 2;
    std::vector<HahnElem> e;
    for (int k = 0; k < 6; ++k) e.push_back(s.element(shape));
    // the variables make the span everything
    for (std::size_t v = 0; v < shape.rank; ++v) e.push_back(HahnElem::variable(v, shape.rank));
    sections.push_back(vgs_build(e, shape.rank));
    shapes.push_back(shape);
  }
  for (std::size_t j = 0; j < sections.size(); ++j) {
    const auto& sec = sections[j];
    const auto samples = integral_products(sec, sec.size() <= 2 ? 2 : 1);
    for (const auto& y : samples) {
      const std::string input = "section " + std::to_string(j) + ", y = " + y.to_string();
      guarded(r, input, [&] {
        const HahnElem eps = isolation_radius(sec, y);
        const LawReport laws = isolation_check(sec, y, eps, samples);
        r.add(input, std::nullopt, "eps " + eps.to_string() + "; " + join_failed(laws), laws.passed());
      });
    }
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t j = i % sections.size();
    const HahnElem x = s.positive_element(shapes[j]);
    const std::string input = "section " + std::to_string(j) + ", x = " + x.to_string();
    guarded(r, input, [&] {
      const AboveWitness w = section_above(sections[j], x);
      const auto m = sections[j].materialize(w.above);
      r.add(input, std::nullopt, w.above.to_string() + " = " + w.above_value.to_string(),
            m && *m == w.above_value && w.above_value > x);
    });
  }
}

void arch_suite(SuiteReport& r, Sampler& s) {
  ElementShape shape;
  shape.max_terms = 2;
  shape.algebraic = true;
  int made = 0;
  while (made < 500) {
    shape.rank = 1 + made % 2;
    const HahnElem x = s.positive_element(shape);
    // half the pairs share a class by construction
    const HahnElem y = s.coin() ? x * HahnElem::constant(RealAlgNum(mpq_class(s.integer(1, 40), s.integer(1, 7))), shape.rank) +
                                      HahnElem::monomial(1, *valuation(x) + ExponentVec::unit(shape.rank, 0, mpq_class(1, 2)))
                                : s.positive_element(shape);
    if (y.sign() <= 0) continue;
    ++made;
    const std::string input = x.to_string() + " ~ " + y.to_string();
    guarded(r, input, [&] {
      const ArchResult a = arch_equiv(x, y);
      const auto found = arch_search(x, y, mpz_class(1) << 64);
      bool ok = found.has_value() == a.equivalent;
      if (found && a.witness) {
        const mpz_class& n = *a.witness;
        ok = ok && *found == n && arch_witnesses(x, y, n) && (n == 1 || !arch_witnesses(x, y, n - 1));
      }
      auto show = [](const std::optional<mpz_class>& n) { return n ? "n = " + n->get_str() : std::string("inequivalent"); };
      r.add(input, show(found), show(a.witness), ok);
    });
  }
}

void residue_suite(SuiteReport& r, Sampler& s) {
  ElementShape shape;
  shape.algebraic = true;
  std::vector<HahnElem> xs;
  for (int i = 0; i < 300; ++i) xs.push_back(s.finite_element(shape));
  for (const auto& x : xs) {
    guarded(r, x.to_string(), [&] {
      const RealAlgNum c = rfs_residue(x);
      // oracle: the constant of the decomposition, and x - c infinitesimal
      const HahnElem d = x - HahnElem::constant(c, x.rank());
      const bool ok = c == decompose(x).constant && (d.is_zero() || valuation(d)->sign() > 0) && mu_equivalent(x, HahnElem::constant(c));
      r.add(x.to_string(), std::nullopt, c.to_string(), ok);
    });
  }
  guarded(r, "rfs_verify on all samples", [&] {
    const LawReport laws = rfs_verify(xs);
    r.add("rfs_verify on all samples", "all laws pass", join_failed(laws), laws.passed());
  });
  guarded(r, "constants plus 1 + t", [&] {
    const LawReport laws = rfs_verify(xs, ResidueCandidate{true, {HahnElem::constant(1) + HahnElem::variable(0)}});
    const LawResult* u = laws.find("candidate_uniqueness");
    r.add("constants plus 1 + t", "candidate_uniqueness fails", join_failed(laws), u && !u->passed);
  });
}

/* ---- automorphisms ---- */

std::string escape_summary(const EscapeResult& e) {
  if (!e.witness) return "invariant on " + std::to_string(e.probes_tried) + " probes";
  return e.witness->x.to_string() + " -> " + e.witness->image.to_string() + ", remainder " + e.witness->remainder.to_string();
}

void escape_suite(SuiteReport& r, Sampler& s) {
  const AutoDescriptor mob = parse_descriptor("moebius:1,1,1");
  const HahnElem t = HahnElem::variable(0);
  const std::vector<HahnElem> probes{t.inverse(), HahnElem::constant(mpq_class(1, 2)) * t.inverse()};
  guarded(r, "moebius:1,1,1 on {t^-1, 1/2*t^-1}", [&] {
    const EscapeResult e = ip_escape_demo(mob, probes);
    const bool ok = e.witness && ip_member(e.witness->x) && !ip_member(e.witness->image) &&
                    auto_apply(mob, e.witness->x) == e.witness->image && e.witness->x == probes[1];
    r.add("moebius:1,1,1 on {t^-1, 1/2*t^-1}", "1/2*t^-1 escapes", escape_summary(e), ok);
  });
  guarded(r, "moebius:1,1,1 on {t^-1}, escalating", [&] {
    const EscapeResult plain = ip_escape_demo(mob, {t.inverse()});
    const EscapeResult e = ip_escape_demo(mob, {t.inverse()}, true);
    const bool ok = !plain.witness && e.escalated && e.witness && ip_member(e.witness->x) && !ip_member(e.witness->image);
    r.add("moebius:1,1,1 on {t^-1}, escalating", "escape only after escalation", escape_summary(e), ok);
  });
  // probes drawn from the canonical I
  ElementShape shape;
  std::vector<HahnElem> canon = probes;
  for (int i = 0; i < 30; ++i) canon.push_back(ip_floor(s.element(shape)).floor);
  guarded(r, "scale:2 on canonical I probes", [&] {
    const AutoDescriptor sc = parse_descriptor("scale:2");
    const EscapeResult e = ip_escape_demo(sc, canon, true);
    bool ok = !e.witness;
    for (const auto& x : canon) ok = ok && ip_member(auto_apply(sc, x));
    r.add("scale:2 on " + std::to_string(canon.size()) + " canonical I probes", "invariant", escape_summary(e), ok);
  });
}

AutoDescriptor random_descriptor(Sampler& s, AutoDescriptor::Kind kind, std::size_t rank) {
  if (kind == AutoDescriptor::Kind::Scaling) {
    std::vector<mpq_class> q;
    for (std::size_t i = 0; i < rank; ++i) q.push_back(mpq_class(s.integer(1, 5), s.integer(1, 3)));
    for (auto& v : q) v.canonicalize();
    return AutoDescriptor::scale(q);
  }
  std::vector<std::array<RealAlgNum, 3>> acd;
  for (std::size_t i = 0; i < rank; ++i)
    acd.push_back({RealAlgNum(mpq_class(s.integer(1, 4), s.integer(1, 3))), RealAlgNum(s.rational(3, 2)),
                   RealAlgNum(mpq_class(s.integer(1, 4), s.integer(1, 3)))});
  return AutoDescriptor::mobius(acd);
}

void automorphism_suite(SuiteReport& r, Sampler& s) {
  for (auto kind : {AutoDescriptor::Kind::Scaling, AutoDescriptor::Kind::Moebius}) {
    for (int i = 0; i < 200; ++i) {
      ElementShape shape;
      shape.rank = 1 + i % 2;
      shape.max_terms = 2;
      shape.exp_range = 2;
      if (kind == AutoDescriptor::Kind::Moebius) shape.exp_den = 1;  // fractional powers of ct + d leave K
      const AutoDescriptor phi = random_descriptor(s, kind, shape.rank);
      const HahnElem x = s.element(shape), y = s.element(shape);
      const HahnElem c = HahnElem::constant(RealAlgNum(s.rational(9, 4)), shape.rank);
      const std::string input = phi.to_string() + " on " + x.to_string() + ", " + y.to_string();
      guarded(r, input, [&] {
        const HahnElem px = auto_apply(phi, x), py = auto_apply(phi, y);
        std::string got;
        if (!(auto_apply(phi, x + y) == px + py)) got += " additivity";
        if (!(auto_apply(phi, x * y) == px * py)) got += " multiplicativity";
        if (compare(px, py) != compare(x, y)) got += " order";
        if (!(auto_apply(phi, c) == c)) got += " constants";
        r.add(input, std::nullopt, got.empty() ? "all laws hold" : "broken:" + got, got.empty());
      });
    }
  }
  for (int i = 0; i < 100; ++i) {
    ElementShape shape;
    shape.rank = 1 + i % 2;
    shape.exp_den = 1;
    const AutoDescriptor phi = random_descriptor(s, AutoDescriptor::Kind::Moebius, shape.rank);
    const HahnElem x = s.element(shape);
    const std::string input = phi.inverse().to_string() + " after " + phi.to_string() + " on " + x.to_string();
    guarded(r, input, [&] {
      const HahnElem back = auto_apply(phi.inverse(), auto_apply(phi, x));
      r.add(input, x.to_string(), back.to_string(), back == x);
    });
  }
}

/* ---- epsilon stability ---- */

PolyFamilySpec random_family(Sampler& s, int index) {
  PolyFamilySpec spec;
  if (index == 0) {
    spec.degree_bound = 3;
    spec.height_bound = 5;
    return spec;
  }
  spec.degree_bound = s.integer(1, 3);
  spec.height_bound = s.integer(1, 5);
  // one generator doubles the weight count; keep the family small enough to enumerate fully
  mpz_class members;
  mpz_ui_pow_ui(members.get_mpz_t(), 2 * spec.height_bound + 1, 2 * (spec.degree_bound + 1));
  if (members <= 20000 && s.coin()) {
    const HahnElem t = HahnElem::variable(0);
    const HahnElem pool[] = {t, t.inverse(), one(1) + t, HahnElem::constant(mpq_class(1, 2)) * t};
    spec.coeff_generators.push_back(pool[s.integer(0, 3)]);
  }
  return spec;
}

std::string family_string(const PolyFamilySpec& spec) {
  std::string g;
  for (const auto& x : spec.coeff_generators) g += (g.empty() ? "" : ", ") + x.to_string();
  return "(d=" + std::to_string(spec.degree_bound) + ", h=" + std::to_string(spec.height_bound) + ", gens {" + g + "})";
}

void epsilon_suite(SuiteReport& r, Sampler& s) {
  ElementShape shape;
  shape.max_terms = 2;
  shape.exp_range = 2;
  for (int i = 0; i < 50; ++i) {
    const PolyFamilySpec spec = random_family(s, i);
    const PolyFamily family(spec);
    HahnElem x = s.element(shape);
    std::optional<HahnElem> eps;
    // x must avoid every family root; resample the rare degenerate draw
    for (int tries = 0; tries < 20 && !eps; ++tries) {
      try {
        eps = eps_witness(spec, x);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateAtRoot) throw;
        x = s.element(shape);
      }
    }
    const std::string input = family_string(spec) + ", x = " + x.to_string();
    if (!eps) {
      r.add(input, std::nullopt, "no non-degenerate point drawn", false);
      continue;
    }
    guarded(r, input, [&] {
      const FamilySigns at_x(family, x);
      std::string bad;
      for (int k = 0; k < 50 && bad.empty(); ++k) {
        const HahnElem y = x + *eps * HahnElem::constant(mpq_class(2 * k - 49, 64));
        const TypeComparison c = bounded_type_eq(family, at_x, y);
        if (!c.equal) bad = "y = " + y.to_string() + " split by " + c.distinguisher->poly.to_string();
      }
      r.add(input, std::nullopt, "eps " + eps->to_string() + (bad.empty() ? "; 50 samples agree" : "; " + bad), bad.empty() && eps->sign() > 0);
    });
  }
}

/* ---- oracles ---- */

// Bisection on the defining polynomial; never touches RealAlgNum's own refinement.
struct Enclosure {
  mpq_class lo, hi;
};

Enclosure enclose(const RealAlgNum& a, const mpq_class& width) {
  if (a.is_rational()) return {a.rational(), a.rational()};
  const UPoly p = a.defpoly();
  mpq_class lo = a.lo(), hi = a.hi();
  const int s_lo = p.sign_at(lo);
  while (hi - lo > width) {
    mpq_class mid = (lo + hi) / 2;
    const int sm = p.sign_at(mid);
    if (sm == 0) return {mid, mid};
    (sm == s_lo ? lo : hi) = mid;
  }
  return {lo, hi};
}

RealAlgNum oracle_sample(Sampler& s) {
  const mpq_class q = s.rational(9, 9);
  switch (s.integer(0, 4)) {
    case 0: return RealAlgNum(q);
    case 1: return nth_root(RealAlgNum(s.integer(1, 9)), 2) * RealAlgNum(q);
    case 2: return nth_root(RealAlgNum(s.rational(9, 9)), 3);
    case 3: return nth_root(RealAlgNum(s.integer(1, 9)), 2) + RealAlgNum(q);
    default: return -nth_root(RealAlgNum(mpq_class(s.integer(1, 9), s.integer(1, 9))), 2);
  }
}

void realalg_oracle(SuiteReport& r, Sampler& s) {
  const mpq_class width(1, mpz_class(1) << 64);
  const char* names[] = {"+", "-", "*", "/"};
  for (int i = 0; i < 1000; ++i) {
    const RealAlgNum a = oracle_sample(s), b = oracle_sample(s);
    int op = s.integer(0, 3);
    const Enclosure ea = enclose(a, width), eb = enclose(b, width);
    if (op == 3 && eb.lo <= 0 && eb.hi >= 0) op = 2;
    const std::string input = a.to_string() + " " + names[op] + " " + b.to_string();
    guarded(r, input, [&] {
      mpq_class lo, hi;
      RealAlgNum c;
      switch (op) {
        case 0: c = a + b; lo = ea.lo + eb.lo; hi = ea.hi + eb.hi; break;
        case 1: c = a - b; lo = ea.lo - eb.hi; hi = ea.hi - eb.lo; break;
        default: {
          mpq_class ends[4];
          if (op == 2) {
            c = a * b;
            ends[0] = ea.lo * eb.lo; ends[1] = ea.lo * eb.hi; ends[2] = ea.hi * eb.lo; ends[3] = ea.hi * eb.hi;
          } else {
            c = a / b;
            ends[0] = ea.lo / eb.lo; ends[1] = ea.lo / eb.hi; ends[2] = ea.hi / eb.lo; ends[3] = ea.hi / eb.hi;
          }
          lo = *std::min_element(ends, ends + 4);
          hi = *std::max_element(ends, ends + 4);
        }
      }
      const Enclosure ec = enclose(c, width);
      bool ok = ec.lo <= hi && ec.hi >= lo;
      if (lo > 0) ok = ok && c.sign() > 0;
      if (hi < 0) ok = ok && c.sign() < 0;
      r.add(input, "within [" + std::to_string(lo.get_d()) + ", " + std::to_string(hi.get_d()) + "]", c.to_string(), ok);
    });
  }
}

void sturm_oracle(SuiteReport& r, Sampler& s) {
  ElementShape shape;
  shape.fractions = false;
  shape.max_terms = 2;
  for (int i = 0; i < 100; ++i) {
    std::vector<HahnElem> roots;
    KPoly p(1, {one(1)});
    int expected = 0;
    const long n_lin = s.integer(0, 2);
    for (long k = 0; k < n_lin; ++k) {
      const HahnElem a = s.element(shape);
      if (std::any_of(roots.begin(), roots.end(), [&](const HahnElem& r0) { return r0 == a; })) continue;
      roots.push_back(a);
      p = p * KPoly(1, {-a, one(1)});
      ++expected;
    }
    if (s.coin()) {
      // X^2 - b with b = c t^(odd/3): two roots +-sqrt(b), never rational in t
      const HahnElem b = HahnElem::monomial(RealAlgNum(s.integer(1, 5)), ExponentVec{mpq_class(2 * s.integer(-1, 1) + 1, 3)});
      if (std::none_of(roots.begin(), roots.end(), [&](const HahnElem& r0) { return r0 * r0 == b; })) {
        p = p * KPoly(1, {-b, HahnElem(1), one(1)});
        expected += 2;
      }
    } else {
      p = p * KPoly(1, {s.positive_element(shape), HahnElem(1), one(1)});  // X^2 + b > 0
    }
    const std::string input = p.to_string();
    guarded(r, input, [&] {
      const int got = poly_sturm_count(p, KBound::neg_inf(), KBound::pos_inf());
      r.add(input, std::to_string(expected), std::to_string(got), got == expected);
    });
  }
}

void expand_oracle(SuiteReport& r, Sampler& s) {
  for (int i = 0; i < 200; ++i) {
    ElementShape shape;
    shape.rank = 1 + i % 2;
    const HahnElem x = s.element(shape);
    const ExponentVec bound = s.exponent(shape);
    const std::string input = x.to_string() + " to " + bound.to_string();
    guarded(r, input, [&] {
      const TruncatedExpansion e = expand(x, bound);
      // (sum of terms) * den - num has nothing at or below the bound
      const GenPoly residual = e.as_poly(shape.rank) * x.den() - x.num();
      bool ok = std::all_of(residual.terms().begin(), residual.terms().end(), [&](const Term& t) { return t.expo > bound; }) &&
                std::all_of(e.terms.begin(), e.terms.end(), [&](const Term& t) { return t.expo <= bound; });
      if (e.exact) ok = ok && HahnElem(e.as_poly(shape.rank)) == x;
      r.add(input, std::nullopt, e.to_string(), ok);
    });
  }
}

void oracle_suite(SuiteReport& r, Sampler& s) {
  realalg_oracle(r, s);
  sturm_oracle(r, s);
  expand_oracle(r, s);
}

struct Entry {
  const char* name;
  const char* description;
  Suite run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"floor", "floor lands in I with remainder in [0,1) on 500 elements", floor_suite},
      {"transfer", "floor through the dense subfield agrees with ip_floor on 200 elements", transfer_suite},
      {"vgs", "greedy value group sections on 50 enumerations", vgs_suite},
      {"isolation", "section elements are isolated by y/2 and unbounded on 100 points", isolation_suite},
      {"arch", "archimedean witness search agrees with valuations on 500 pairs", arch_suite},
      {"residue", "residue section on 300 finite elements, doctored candidate rejected", residue_suite},
      {"escape", "a Moebius map moves 1/2*t^-1 out of I, scaling keeps I", escape_suite},
      {"automorphism", "automorphism laws on 200 pairs per kind, Moebius inverses", automorphism_suite},
      {"epsilon", "eps_witness intervals keep bounded types on 50 families", epsilon_suite},
      {"oracles", "realalg, Sturm and expansion against independent oracles", oracle_suite},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.push_back(e.name);
    return n;
  }();
  return names;
}

std::string suite_description(const std::string& name) {
  for (const auto& e : registry())
    if (name == e.name) return e.description;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  const auto& entries = registry();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (name != entries[i].name) continue;
    SuiteReport r;
    r.suite = name;
    r.seed = seed;
    // one independent stream per suite, so suites can run alone or in any order
    Sampler s(seed * 0x9e3779b97f4a7c15ULL + i + 1);
    entries[i].run(r, s);
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace ipart
