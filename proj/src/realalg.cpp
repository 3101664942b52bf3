/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/realalg.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "ipart/error.hpp"

namespace ipart {

namespace {

struct Interval {
  mpq_class lo, hi;
};

Interval enclosure(const RealAlgNum& a) {
  if (a.is_rational()) return {a.rational(), a.rational()};
  return {a.lo(), a.hi()};
}

Interval product(const Interval& a, const Interval& b) {
  mpq_class p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

// Exactly one root of poly in the open interval, endpoints not roots.
bool isolates(const UPoly& poly, const std::vector<UPoly>& seq, const Interval& iv) {
  if (iv.lo >= iv.hi) return false;
  if (poly.sign_at(iv.lo) == 0 || poly.sign_at(iv.hi) == 0) return false;
  return count_roots(seq, iv.lo, iv.hi) == 1;
}

// Lower bound for x^(1/n) with 2^-bits resolution; x >= 0.
mpq_class root_floor(const mpq_class& x, unsigned n, unsigned long bits) {
  mpz_class scale = mpz_class(1) << (bits * n);
  mpz_class v = floor_q(x * scale);
  mpz_class r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
  mpq_class q(r, mpz_class(1) << bits);
  q.canonicalize();
  return q;
}

mpq_class root_ceil(const mpq_class& x, unsigned n, unsigned long bits) {
  mpz_class scale = mpz_class(1) << (bits * n);
  mpz_class v = ceil_q(x * scale);
  mpz_class r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), n);
  mpq_class q(r + 1, mpz_class(1) << bits);
  q.canonicalize();
  return q;
}

}  // namespace

RealAlgNum RealAlgNum::make(const UPoly& defpoly, const mpq_class& lo, const mpq_class& hi) {
  if (defpoly.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "defining polynomial is zero");
  if (lo > hi) throw Error(ErrorKind::NoRootInInterval, "empty interval [" + ipart::to_string(lo) + ", " + ipart::to_string(hi) + "]");
  UPoly sf = defpoly.squarefree();
  const std::string where = defpoly.to_string() + " on [" + ipart::to_string(lo) + ", " + ipart::to_string(hi) + "]";
  if (sf.degree() < 1) throw Error(ErrorKind::NoRootInInterval, where);
  if (lo == hi) {
    if (sf.sign_at(lo) != 0) throw Error(ErrorKind::NoRootInInterval, where);
    return RealAlgNum(lo);
  }
  auto seq = sturm_sequence(sf);
  const bool lo_root = sf.sign_at(lo) == 0;
  const int count = count_roots(seq, lo, hi) + (lo_root ? 1 : 0);
  if (count == 0) throw Error(ErrorKind::NoRootInInterval, where);
  if (count > 1) throw Error(ErrorKind::NotIsolating, where + " contains " + std::to_string(count) + " roots");
  if (lo_root) return RealAlgNum(lo);
  if (sf.sign_at(hi) == 0) return RealAlgNum(hi);
  return from_isolated(std::move(sf), lo, hi);
}

RealAlgNum RealAlgNum::from_isolated(UPoly poly, mpq_class lo, mpq_class hi) {
  if (poly.degree() == 1) return RealAlgNum(mpq_class(-poly.coeff(0) / poly.coeff(1)));
  if (sgn(poly.coeff(0)) == 0) {
    if (sgn(lo) < 0 && sgn(hi) > 0) return RealAlgNum(0);
    std::vector<mpq_class> c(poly.coeffs().begin() + 1, poly.coeffs().end());
    poly = UPoly(std::move(c));
    if (poly.degree() == 1) return RealAlgNum(mpq_class(-poly.coeff(0) / poly.coeff(1)));
  }
  // A rational root p/q of a primitive integer polynomial has q | lc, so lc * root
  // is an integer. Once the interval is narrower than 1/lc at most one candidate remains.
  const int s = poly.sign_at(lo);
  const mpz_class lc = abs(poly.leading().get_num());
  while ((hi - lo) * lc > 1) {
    mpq_class mid = (lo + hi) / 2;
    const int sm = poly.sign_at(mid);
    if (sm == 0) return RealAlgNum(mid);
    if (sm == s) lo = mid; else hi = mid;
  }
  mpq_class candidate(floor_q(lo * lc) + 1, lc);
  candidate.canonicalize();
  if (candidate < hi && poly.sign_at(candidate) == 0) return RealAlgNum(candidate);
  RealAlgNum r;
  r.rep_ = std::make_shared<const Rep>(Rep{std::move(poly), std::move(lo), std::move(hi), s});
  return r;
}

UPoly RealAlgNum::defpoly() const {
  if (rep_) return rep_->poly;
  return UPoly(std::vector<mpq_class>{mpq_class(-value_.get_num()), mpq_class(value_.get_den())});
}

mpq_class RealAlgNum::lo() const { return rep_ ? rep_->lo : value_; }
mpq_class RealAlgNum::hi() const { return rep_ ? rep_->hi : value_; }

RealAlgNum RealAlgNum::refined() const {
  if (!rep_) return *this;
  mpq_class mid = (rep_->lo + rep_->hi) / 2;
  const int s = rep_->poly.sign_at(mid);
  if (s == 0) return RealAlgNum(mid);
  RealAlgNum r;
  if (s == rep_->sign_lo)
    r.rep_ = std::make_shared<const Rep>(Rep{rep_->poly, mid, rep_->hi, rep_->sign_lo});
  else
    r.rep_ = std::make_shared<const Rep>(Rep{rep_->poly, rep_->lo, mid, rep_->sign_lo});
  return r;
}

RealAlgNum RealAlgNum::refined_to(const mpq_class& width) const {
  RealAlgNum r = *this;
  while (!r.is_rational() && r.hi() - r.lo() > width) r = r.refined();
  return r;
}

int RealAlgNum::compare(const mpq_class& q) const {
  if (!rep_) return ::cmp(value_, q) < 0 ? -1 : (::cmp(value_, q) > 0 ? 1 : 0);
  if (q <= rep_->lo) return 1;
  if (q >= rep_->hi) return -1;
  const int s = rep_->poly.sign_at(q);
  if (s == 0) return 0;
  return s == rep_->sign_lo ? 1 : -1;
}

int RealAlgNum::sign() const { return compare(mpq_class(0)); }

RealAlgNum RealAlgNum::operator-() const {
  if (!rep_) return RealAlgNum(mpq_class(-value_));
  return from_isolated(rep_->poly.negated_arg().primitive(), -rep_->hi, -rep_->lo);
}

RealAlgNum RealAlgNum::inverse() const {
  if (!rep_) {
    if (sgn(value_) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    return RealAlgNum(mpq_class(1 / value_));
  }
  mpq_class lo = rep_->lo, hi = rep_->hi;
  const UPoly& p = rep_->poly;
  if (sgn(lo) < 0 && sgn(hi) > 0) {
    // p(0) != 0 for irrational representations.
    if (p.sign_at(0) == rep_->sign_lo) lo = 0; else hi = 0;
  }
  while (sgn(lo) == 0 || sgn(hi) == 0) {
    mpq_class mid = (lo + hi) / 2;
    const int s = p.sign_at(mid);
    if (s == 0) return RealAlgNum(mpq_class(1 / mid));
    if (s == p.sign_at(lo)) lo = mid; else hi = mid;
  }
  return from_isolated(p.reversed().primitive(), 1 / hi, 1 / lo);
}

std::string RealAlgNum::to_string() const {
  if (!rep_) return ipart::to_string(value_);
  return "alg(" + rep_->poly.to_string('x') + ", " + ipart::to_string(rep_->lo) + ", " +
         ipart::to_string(rep_->hi) + ")";
}

namespace {

template <class Combine>
RealAlgNum isolate_combination(const UPoly& resultant_poly, RealAlgNum a, RealAlgNum b, Combine combine,
                               RealAlgNum (*make)(UPoly, mpq_class, mpq_class)) {
  UPoly sf = resultant_poly.squarefree();
  auto seq = sturm_sequence(sf);
  while (true) {
    Interval iv = combine(enclosure(a), enclosure(b));
    if (isolates(sf, seq, iv)) return make(sf, iv.lo, iv.hi);
    a = a.refined();
    b = b.refined();
  }
}

// Exact rational n-th root, if there is one (x > 0).
std::optional<mpq_class> exact_root(const mpq_class& x, unsigned n) {
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), x.get_num_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), x.get_den_mpz_t(), n)) return std::nullopt;
  return mpq_class(rn, rd);
}

/*
 * b = r * a + s with rationals r != 0, s? Always true inside one quadratic
 * field; catching it keeps sums of same-generator coefficients at the
 * generator's degree instead of squaring it on every addition.
 */
std::optional<std::pair<mpq_class, mpq_class>> affine_relation(const RealAlgNum& a, const RealAlgNum& b) {
  if (a.is_rational() || b.is_rational()) return std::nullopt;
  const UPoly ma = a.defpoly().monic(), mb = b.defpoly().monic();
  const int d = ma.degree();
  if (d != mb.degree()) return std::nullopt;
  // centre both root sets at 0
  const mpq_class mu_a = -ma.coeff(d - 1) / d, mu_b = -mb.coeff(d - 1) / d;
  const UPoly qa = ma.shifted(mu_a), qb = mb.shifted(mu_b);
  int k = 2;
  while (k <= d && sgn(qa.coeff(d - k)) == 0) ++k;
  if (k > d) return std::nullopt;
  mpq_class ratio = qb.coeff(d - k) / qa.coeff(d - k);
  if (sgn(ratio) == 0) return std::nullopt;
  std::vector<mpq_class> candidates;
  if (k % 2 == 1) {
    auto root = exact_root(abs(ratio), static_cast<unsigned>(k));
    if (root) candidates.push_back(sgn(ratio) > 0 ? *root : mpq_class(-*root));
  } else if (sgn(ratio) > 0) {
    if (auto root = exact_root(ratio, static_cast<unsigned>(k))) candidates = {*root, -*root};
  }
  for (const mpq_class& r : candidates) {
    if (qa.scaled_arg(1 / r).monic() != qb) continue;
    mpq_class shift = mu_b - r * mu_a;
    if (compare(b, a * RealAlgNum(r) + RealAlgNum(shift)) == 0) return std::make_pair(r, shift);
  }
  return std::nullopt;
}

}  // namespace

RealAlgNum operator+(const RealAlgNum& a, const RealAlgNum& b) {
  if (a.is_rational() && b.is_rational()) return RealAlgNum(mpq_class(a.value_ + b.value_));
  if (b.is_rational() || a.is_rational()) {
    const RealAlgNum& alg = a.is_rational() ? b : a;
    const mpq_class& r = a.is_rational() ? a.value_ : b.value_;
    if (sgn(r) == 0) return alg;
    return RealAlgNum::from_isolated(alg.rep_->poly.shifted(-r).primitive(), alg.rep_->lo + r, alg.rep_->hi + r);
  }
  if (auto rel = affine_relation(a, b)) return a * RealAlgNum(mpq_class(1 + rel->first)) + RealAlgNum(rel->second);
  UPoly res = resultant_sum(a.rep_->poly, b.rep_->poly);
  return isolate_combination(
      res, a, b, [](const Interval& x, const Interval& y) { return Interval{x.lo + y.lo, x.hi + y.hi}; },
      &RealAlgNum::from_isolated);
}

RealAlgNum operator-(const RealAlgNum& a, const RealAlgNum& b) { return a + (-b); }

RealAlgNum operator*(const RealAlgNum& a, const RealAlgNum& b) {
  if (a.is_rational() && b.is_rational()) return RealAlgNum(mpq_class(a.value_ * b.value_));
  if (a.is_rational() || b.is_rational()) {
    const RealAlgNum& alg = a.is_rational() ? b : a;
    const mpq_class& r = a.is_rational() ? a.value_ : b.value_;
    if (sgn(r) == 0) return RealAlgNum(0);
    if (r == 1) return alg;
    mpq_class lo = alg.rep_->lo * r, hi = alg.rep_->hi * r;
    if (sgn(r) < 0) std::swap(lo, hi);
    return RealAlgNum::from_isolated(alg.rep_->poly.scaled_arg(1 / r).primitive(), lo, hi);
  }
  // same quadratic field: a^2 = -p a - q keeps the product affine in a
  if (a.rep_->poly.degree() == 2) {
    if (auto rel = affine_relation(a, b)) {
      const UPoly m = a.rep_->poly.monic();
      const mpq_class& r = rel->first;
      const mpq_class& s = rel->second;
      return a * RealAlgNum(mpq_class(s - r * m.coeff(1))) + RealAlgNum(mpq_class(-r * m.coeff(0)));
    }
  }
  UPoly res = resultant_product(a.rep_->poly, b.rep_->poly);
  return isolate_combination(res, a, b, product, &RealAlgNum::from_isolated);
}

RealAlgNum operator/(const RealAlgNum& a, const RealAlgNum& b) {
  if (b.sign() == 0) throw Error(ErrorKind::DivisionByZero, a.to_string() + " / 0");
  return a * b.inverse();
}

RealAlgNum arith(ArithOp op, const RealAlgNum& a, const RealAlgNum& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

int compare(const RealAlgNum& a, const RealAlgNum& b) {
  if (a.is_rational()) return -b.compare(a.value_);
  if (b.is_rational()) return a.compare(b.value_);
  if (a.rep_->hi <= b.rep_->lo) return -1;
  if (b.rep_->hi <= a.rep_->lo) return 1;
  UPoly g = gcd(a.rep_->poly, b.rep_->poly);
  if (g.degree() >= 1) {
    mpq_class lo = std::max(a.rep_->lo, b.rep_->lo), hi = std::min(a.rep_->hi, b.rep_->hi);
    int n = count_roots(sturm_sequence(g), lo, hi) - (g.sign_at(hi) == 0 ? 1 : 0);
    // A common root inside both isolating intervals is both numbers at once.
    if (n >= 1) return 0;
  }
  RealAlgNum x = a, y = b;
  while (true) {
    x = x.refined();
    y = y.refined();
    if (x.is_rational() || y.is_rational()) return compare(x, y);
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
  }
}

mpz_class floor(const RealAlgNum& a) {
  if (a.is_rational()) return floor_q(a.rational());
  RealAlgNum r = a.refined_to(mpq_class(1, 2));
  if (r.is_rational()) return floor_q(r.rational());
  mpz_class z = floor_q(r.lo()) + 1;
  if (z < r.hi()) return r.compare(mpq_class(z)) >= 0 ? z : mpz_class(z - 1);
  return floor_q(r.lo());
}

RealAlgNum nth_root(const RealAlgNum& a, unsigned n) {
  if (n == 0) throw Error(ErrorKind::NotIsolating, "0-th root");
  if (n == 1) return a;
  const int s = a.sign();
  if (s == 0) return RealAlgNum(0);
  if (s < 0) {
    if (n % 2 == 0) throw Error(ErrorKind::NegativeEvenRoot, a.to_string());
    return -nth_root(-a, n);
  }
  if (a.is_rational()) {
    mpz_class rn, rd;
    const bool exact_num = mpz_root(rn.get_mpz_t(), a.rational().get_num_mpz_t(), n) != 0;
    const bool exact_den = mpz_root(rd.get_mpz_t(), a.rational().get_den_mpz_t(), n) != 0;
    if (exact_num && exact_den) return RealAlgNum(mpq_class(rn, rd));
  }
  UPoly target = a.defpoly().substitute_power(n).squarefree();
  auto seq = sturm_sequence(target);
  RealAlgNum x = a;
  while (!x.is_rational() && sgn(x.lo()) <= 0) x = x.refined();
  unsigned long bits = 16;
  while (true) {
    Interval iv = enclosure(x);
    Interval root_iv{root_floor(iv.lo, n, bits), root_ceil(iv.hi, n, bits)};
    if (isolates(target, seq, root_iv)) return RealAlgNum::from_isolated(target, root_iv.lo, root_iv.hi);
    x = x.refined();
    bits += 4;
  }
}

RealAlgNum pow(const RealAlgNum& a, long n) {
  if (n < 0) return pow(a.inverse(), -n);
  RealAlgNum result(1), base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

RealAlgNum abs(const RealAlgNum& a) { return a.sign() < 0 ? -a : a; }

std::vector<RealAlgNum> real_roots(const UPoly& p) {
  std::vector<RealAlgNum> out;
  if (p.degree() < 1) return out;
  UPoly sf = p.squarefree();
  auto seq = sturm_sequence(sf);
  mpq_class b = root_bound(sf);
  std::vector<Interval> work{{-b, b}};
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    const int n = count_roots(seq, iv.lo, iv.hi);
    if (n == 0) continue;
    const bool hi_root = sf.sign_at(iv.hi) == 0;
    if (n == 1 && hi_root) {
      out.emplace_back(iv.hi);
      continue;
    }
    if (n == 1 && sf.sign_at(iv.lo) != 0) {
      out.push_back(RealAlgNum::make(sf, iv.lo, iv.hi));
      continue;
    }
    mpq_class mid = (iv.lo + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(), [](const RealAlgNum& x, const RealAlgNum& y) { return compare(x, y) < 0; });
  return out;
}

}  // namespace ipart
