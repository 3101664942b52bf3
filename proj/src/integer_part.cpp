/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/integer_part.hpp"

#include <stdexcept>

#include "ipart/error.hpp"

namespace ipart {

namespace {

HahnElem one(std::size_t rank) { return HahnElem::constant(1, rank); }

void check_floor(const HahnElem& x, const FloorResult& f) {
  const HahnElem r = x - f.floor;
  if (!(r == f.remainder) || r.sign() < 0 || !(r < one(x.rank())) || !ip_member(f.floor))
    throw std::logic_error("floor postcondition failed for " + x.to_string());
}

}  // namespace

bool ip_member(const HahnElem& x) {
  const Decomposition d = decompose(x);
  return d.tail_sign == 0 && d.constant.is_integer();
}

FloorResult ip_floor(const HahnElem& x) {
  const Decomposition d = decompose(x);
  mpz_class z = floor(d.constant);
  // an integer constant with a negative tail sits just below z
  if (d.constant.is_integer() && d.tail_sign < 0) z -= 1;
  HahnElem f = d.sigma + HahnElem::constant(RealAlgNum(z), x.rank());
  FloorResult result{f, x - f};
  check_floor(x, result);
  return result;
}

IntegerPartCandidate canonical_integer_part() {
  return {"canonical_I", ip_member, [](const HahnElem& x) -> std::optional<HahnElem> { return ip_floor(x).floor; }};
}

IntegerPartCandidate integers_only() {
  auto member = [](const HahnElem& x) {
    auto c = x.as_constant();
    return c && c->is_integer();
  };
  auto round = [](const HahnElem& x) -> std::optional<HahnElem> {
    // only finite elements lie between consecutive integers
    if (!x.is_zero() && valuation(x)->sign() < 0) return std::nullopt;
    return ip_floor(x).floor;
  };
  return {"integers", member, round};
}

LawReport ip_verify(const std::vector<HahnElem>& samples, const std::vector<std::pair<HahnElem, HahnElem>>& ring_samples,
                    const IntegerPartCandidate& candidate) {
  LawReport r;
  for (const char* law : {"closure", "minimality", "discreteness", "rounding"}) r.declare(law);
  std::vector<HahnElem> members;

  for (const auto& [a, b] : ring_samples) {
    auto pair_text = [&] { return a.to_string() + ", " + b.to_string(); };
    bool in = candidate.member(a) && candidate.member(b);
    r.check_lazy("closure", in, [&] { return "not members: " + pair_text(); });
    if (!in) continue;
    bool closed = candidate.member(a + b) && candidate.member(a - b) && candidate.member(a * b);
    r.check_lazy("closure", closed, pair_text);
    members.push_back(a);
    members.push_back(b);
  }
  for (const auto& x : samples) {
    std::optional<HahnElem> i;
    try {
      i = candidate.round_down(x);
    } catch (const Error& e) {
      r.check("rounding", false, x.to_string() + ": " + e.what());
      continue;
    }
    if (!i) {
      r.check("rounding", false, "no member i with i <= " + x.to_string() + " < i + 1");
      continue;
    }
    const bool ok = candidate.member(*i) && *i <= x && x < *i + one(x.rank());
    r.check_lazy("rounding", ok, [&] { return x.to_string() + " rounded to " + i->to_string(); });
    if (ok) members.push_back(*i);
  }
  for (std::size_t k = 0; k < members.size(); ++k) {
    const HahnElem& i = members[k];
    if (i.sign() > 0) r.check_lazy("minimality", i >= one(i.rank()), [&] { return i.to_string(); });
    for (std::size_t l = k + 1; l < members.size(); ++l) {
      const HahnElem& j = members[l];
      if (i.rank() != j.rank() || i == j) continue;
      r.check_lazy("discreteness", abs(i - j) >= one(i.rank()), [&] { return i.to_string() + ", " + j.to_string(); });
    }
  }
  return r;
}

long required_ramification(const HahnElem& x) {
  const TruncatedExpansion e = expand(x, ExponentVec(x.rank()));
  mpz_class l = 1;
  for (const auto& t : e.terms)
    for (const auto& q : t.expo.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l.get_si();
}

DenseFloorTrace ip_floor_via_dense_trace(const HahnElem& x, long m) {
  if (m < 1) throw std::invalid_argument("ramification must be positive");
  const std::size_t rank = x.rank();
  const TruncatedExpansion e = expand(x, ExponentVec(rank));
  for (const auto& t : e.terms)
    for (const auto& q : t.expo.coords())
      if (m % q.get_den().get_si() != 0)
        throw Error(ErrorKind::RamificationTooSmall, "exponent " + t.expo.to_string() + " not in (1/" + std::to_string(m) + ")Z");

  DenseFloorTrace tr;
  tr.x_prime = HahnElem(e.as_poly(rank));
  const HahnElem o = one(rank);
  if (!(abs(x - tr.x_prime) < o)) throw std::logic_error("truncation is not within 1 of " + x.to_string());
  // x' is a finite sum in D, so its floor in D is read off directly
  tr.i = ip_floor(tr.x_prime).floor - o;
  const HahnElem& i = tr.i;
  const HahnElem i1 = i + o, i2 = i1 + o, i3 = i2 + o;
  HahnElem j;
  if (i < x && x <= i1) {
    tr.interval = 1;
    j = x < i1 ? i : i1;
  } else if (i1 < x && x <= i2) {
    tr.interval = 2;
    j = x < i2 ? i1 : i2;
  } else if (i2 < x && x < i3) {
    tr.interval = 3;
    j = i2;
  } else {
    throw std::logic_error("x outside (i, i+3) for " + x.to_string());
  }
  tr.result = {j, x - j};
  check_floor(x, tr.result);
  return tr;
}

}  // namespace ipart
