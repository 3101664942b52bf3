/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/hahn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ipart/error.hpp"

namespace ipart {

// ---------------------------------------------------------------- ExponentVec

ExponentVec::ExponentVec(std::vector<mpq_class> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

ExponentVec ExponentVec::unit(std::size_t rank, std::size_t index, const mpq_class& value) {
  ExponentVec e(rank);
  e.coords_[index] = value;
  return e;
}

bool ExponentVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

int ExponentVec::sign() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return sgn(c);
  return 0;
}

bool ExponentVec::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& q) { return q.get_den() == 1; });
}

ExponentVec ExponentVec::operator-() const { return scaled(mpq_class(-1)); }

ExponentVec ExponentVec::scaled(const mpq_class& q) const {
  ExponentVec r = *this;
  for (auto& c : r.coords_) c *= q;
  return r;
}

ExponentVec operator+(const ExponentVec& a, const ExponentVec& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, a.to_string() + " + " + b.to_string());
  ExponentVec r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

ExponentVec operator-(const ExponentVec& a, const ExponentVec& b) { return a + (-b); }

std::strong_ordering operator<=>(const ExponentVec& a, const ExponentVec& b) {
  const std::size_t n = std::min(a.rank(), b.rank());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.rank() <=> b.rank();
}

std::string ExponentVec::to_string() const {
  if (rank() == 1) return ipart::to_string(coords_[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += ipart::to_string(coords_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------- GenPoly

GenPoly::GenPoly(std::size_t rank, std::vector<Term> terms) : rank_(rank) {
  for (const auto& t : terms)
    if (t.expo.rank() != rank) throw Error(ErrorKind::RankMismatch, "term exponent " + t.expo.to_string());
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.expo < b.expo; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().expo == t.expo) {
      terms_.back().coeff = terms_.back().coeff + t.coeff;
      continue;
    }
    if (!terms_.empty() && terms_.back().coeff.sign() == 0) terms_.pop_back();
    terms_.push_back(std::move(t));
  }
  if (!terms_.empty() && terms_.back().coeff.sign() == 0) terms_.pop_back();
}

GenPoly GenPoly::constant(const RealAlgNum& c, std::size_t rank) {
  return monomial(c, ExponentVec(rank));
}

GenPoly GenPoly::monomial(const RealAlgNum& c, const ExponentVec& e) {
  GenPoly p(e.rank());
  if (c.sign() != 0) p.terms_.push_back({e, c});
  return p;
}

bool GenPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].expo.is_zero() && terms_[0].coeff.is_rational() &&
         terms_[0].coeff.rational() == 1;
}

RealAlgNum GenPoly::coeff_at(const ExponentVec& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExponentVec& x) { return t.expo < x; });
  if (it != terms_.end() && it->expo == e) return it->coeff;
  return RealAlgNum(0);
}

bool GenPoly::all_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_rational(); });
}

GenPoly GenPoly::operator-() const {
  GenPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

GenPoly GenPoly::scaled(const RealAlgNum& c) const {
  if (c.sign() == 0) return GenPoly(rank_);
  GenPoly r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

GenPoly GenPoly::shifted(const ExponentVec& e) const {
  if (e.is_zero()) return *this;
  GenPoly r = *this;
  for (auto& t : r.terms_) t.expo = t.expo + e;
  return r;
}

GenPoly GenPoly::truncated(const ExponentVec& bound) const {
  GenPoly r(rank_);
  for (const auto& t : terms_) {
    if (t.expo > bound) break;
    r.terms_.push_back(t);
  }
  return r;
}

GenPoly operator+(const GenPoly& a, const GenPoly& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::RankMismatch, "adding generalized polynomials");
  GenPoly r(a.rank_);
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->expo < j->expo)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->expo < i->expo) {
      r.terms_.push_back(*j++);
    } else {
      RealAlgNum c = i->coeff + j->coeff;
      if (c.sign() != 0) r.terms_.push_back({i->expo, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

GenPoly operator-(const GenPoly& a, const GenPoly& b) { return a + (-b); }

GenPoly operator*(const GenPoly& a, const GenPoly& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::RankMismatch, "multiplying generalized polynomials");
  if (a.is_zero() || b.is_zero()) return GenPoly(a.rank_);
  if (b.is_monomial()) return a.shifted(b.terms_[0].expo).scaled(b.terms_[0].coeff);
  if (a.is_monomial()) return b.shifted(a.terms_[0].expo).scaled(a.terms_[0].coeff);
  std::map<ExponentVec, RealAlgNum> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      ExponentVec e = x.expo + y.expo;
      RealAlgNum c = x.coeff * y.coeff;
      auto [it, inserted] = acc.try_emplace(std::move(e), c);
      if (!inserted) it->second = it->second + c;
    }
  GenPoly r(a.rank_);
  for (auto& [e, c] : acc)
    if (c.sign() != 0) r.terms_.push_back({e, std::move(c)});
  return r;
}

bool operator==(const GenPoly& a, const GenPoly& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].expo == b.terms_[i].expo)) return false;
    if (compare(a.terms_[i].coeff, b.terms_[i].coeff) != 0) return false;
  }
  return true;
}

namespace {

std::string exponent_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + to_string(q) + ")";
}

}  // namespace

std::string monomial_string(const ExponentVec& e) {
  std::string s;
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (sgn(e[i]) == 0) continue;
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + exponent_string(e[i]);
  }
  return s;
}

std::string GenPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono = monomial_string(t.expo);
    RealAlgNum c = t.coeff;
    bool negative = c.is_rational() && c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = c.is_rational() && c.rational() == 1;
    if (mono.empty()) {
      s += c.to_string();
    } else if (unit) {
      s += mono;
    } else {
      s += c.to_string() + "*" + mono;
    }
  }
  return s;
}

// ---------------------------------------------------------------- HahnElem

HahnElem::HahnElem(GenPoly poly) : num_(std::move(poly)), den_(GenPoly::constant(1, num_.rank())) {}

HahnElem HahnElem::make(GenPoly num, GenPoly den) {
  if (num.rank() != den.rank()) throw Error(ErrorKind::RankMismatch, "numerator and denominator ranks differ");
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, num.to_string() + " / 0");
  HahnElem r(std::move(num), std::move(den), 0);
  r.normalize();
  return r;
}

HahnElem HahnElem::constant(const RealAlgNum& c, std::size_t rank) { return HahnElem(GenPoly::constant(c, rank)); }

HahnElem HahnElem::monomial(const RealAlgNum& c, const ExponentVec& e) { return HahnElem(GenPoly::monomial(c, e)); }

HahnElem HahnElem::variable(std::size_t index, std::size_t rank) {
  return monomial(RealAlgNum(1), ExponentVec::unit(rank, index));
}

namespace {

// Largest dense degree the rank-1 gcd reduction is willing to build.
constexpr long kMaxGcdDegree = 600;

struct DensePair {
  UPoly num, den;
  mpz_class scale;      // exponent denominator lcm
  mpq_class num_shift;  // exponent of s^0 in num
};

std::optional<DensePair> to_dense(const GenPoly& num, const GenPoly& den) {
  mpz_class l = 1;
  for (const GenPoly* p : {&num, &den})
    for (const auto& t : p->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.expo[0].get_den_mpz_t());
  const mpq_class shift = num.valuation()[0];
  auto build = [&](const GenPoly& p, const mpq_class& base) -> std::optional<UPoly> {
    mpq_class top = (p.terms().back().expo[0] - base) * l;
    if (top > kMaxGcdDegree) return std::nullopt;
    std::vector<mpq_class> c(top.get_num().get_si() + 1);
    for (const auto& t : p.terms()) {
      mpq_class k = (t.expo[0] - base) * l;
      c[k.get_num().get_si()] = t.coeff.rational();
    }
    return UPoly(std::move(c));
  };
  auto n = build(num, shift);
  auto d = build(den, mpq_class(0));
  if (!n || !d) return std::nullopt;
  return DensePair{*n, *d, l, shift};
}

GenPoly from_dense(const UPoly& p, const mpz_class& scale, const mpq_class& shift) {
  std::vector<Term> terms;
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p.coeff(k)) == 0) continue;
    mpq_class e = mpq_class(k) / scale + shift;
    e.canonicalize();
    terms.push_back({ExponentVec{e}, RealAlgNum(p.coeff(k))});
  }
  return GenPoly(1, std::move(terms));
}

}  // namespace

void HahnElem::normalize() {
  if (num_.is_zero()) {
    den_ = GenPoly::constant(1, num_.rank());
    return;
  }
  const Term lead = den_.leading();
  if (!lead.expo.is_zero() || !(lead.coeff.is_rational() && lead.coeff.rational() == 1)) {
    const ExponentVec shift = -lead.expo;
    const RealAlgNum inv = lead.coeff.inverse();
    num_ = num_.shifted(shift).scaled(inv);
    den_ = den_.shifted(shift).scaled(inv);
  }
  if (den_.is_one()) return;
  // Rank 1 with rational coefficients: cancel the common factor in s = t^(1/L).
  if (rank() == 1 && num_.all_rational() && den_.all_rational()) {
    auto dense = to_dense(num_, den_);
    if (!dense) return;
    UPoly g = gcd(dense->num, dense->den);
    if (g.degree() < 1) return;
    UPoly n = divrem(dense->num, g).first;
    UPoly d = divrem(dense->den, g).first;
    const mpq_class c = d.coeff(0);  // nonzero since den(0) = 1
    n = (1 / c) * n;
    d = (1 / c) * d;
    num_ = from_dense(n, dense->scale, dense->num_shift);
    den_ = from_dense(d, dense->scale, mpq_class(0));
  }
}

std::optional<RealAlgNum> HahnElem::as_constant() const {
  if (is_zero()) return RealAlgNum(0);
  if (!den_.is_one() || !num_.is_monomial() || !num_.leading().expo.is_zero()) return std::nullopt;
  return num_.leading().coeff;
}

HahnElem HahnElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
  return make(den_, num_);
}

HahnElem HahnElem::operator-() const { return HahnElem(-num_, den_, 0); }

std::string HahnElem::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (!(num_.is_monomial() && num_.leading().expo.is_zero() && num_.leading().coeff.is_rational() &&
        num_.leading().coeff.sign() > 0))
    n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

HahnElem operator+(const HahnElem& x, const HahnElem& y) {
  if (x.rank() != y.rank()) throw Error(ErrorKind::RankMismatch, x.to_string() + " + " + y.to_string());
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.is_polynomial() && y.is_polynomial()) return HahnElem(x.num() + y.num());
  if (x.den() == y.den()) return HahnElem::make(x.num() + y.num(), x.den());
  return HahnElem::make(x.num() * y.den() + y.num() * x.den(), x.den() * y.den());
}

HahnElem operator-(const HahnElem& x, const HahnElem& y) { return x + (-y); }

HahnElem operator*(const HahnElem& x, const HahnElem& y) {
  if (x.rank() != y.rank()) throw Error(ErrorKind::RankMismatch, x.to_string() + " * " + y.to_string());
  if (x.is_zero() || y.is_zero()) return HahnElem(x.rank());
  if (x.is_polynomial() && y.is_polynomial()) return HahnElem(x.num() * y.num());
  return HahnElem::make(x.num() * y.num(), x.den() * y.den());
}

HahnElem operator/(const HahnElem& x, const HahnElem& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, x.to_string() + " / 0");
  if (x.rank() != y.rank()) throw Error(ErrorKind::RankMismatch, x.to_string() + " / " + y.to_string());
  return HahnElem::make(x.num() * y.den(), x.den() * y.num());
}

HahnElem arith(ArithOp op, const HahnElem& x, const HahnElem& y) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  return x;
}

HahnElem pow(const HahnElem& x, long n) {
  if (n < 0) return pow(x.inverse(), -n);
  HahnElem result = HahnElem::constant(1, x.rank()), base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

HahnElem abs(const HahnElem& x) { return x.sign() < 0 ? -x : x; }

int compare(const HahnElem& x, const HahnElem& y) {
  if (x.rank() != y.rank()) throw Error(ErrorKind::RankMismatch, x.to_string() + " vs " + y.to_string());
  // both denominators are positive, so the cross difference carries the sign; no normalization needed
  const GenPoly d = x.den() == y.den() ? x.num() - y.num() : x.num() * y.den() - y.num() * x.den();
  return d.is_zero() ? 0 : d.leading().coeff.sign();
}

std::optional<ExponentVec> valuation(const HahnElem& x) {
  if (x.is_zero()) return std::nullopt;
  return x.num().valuation();
}

// ---------------------------------------------------------------- expansion

namespace {

// m with den = 1 - m.
GenPoly unit_part(const HahnElem& x) {
  return GenPoly::constant(1, x.rank()) - x.den();
}

}  // namespace

bool expansion_supported(const HahnElem& x) {
  GenPoly m = unit_part(x);
  return m.is_zero() || sgn(m.valuation()[0]) > 0;
}

std::string TruncatedExpansion::to_string() const {
  GenPoly p(order_bound.rank(), terms);
  std::string s = p.to_string();
  if (exact) return s;
  std::string mono = monomial_string(order_bound);
  if (mono.empty()) mono = "1";
  return s + " + O(" + mono + ")";
}

TruncatedExpansion expand(const HahnElem& x, const ExponentVec& order_bound) {
  if (order_bound.rank() != x.rank()) throw Error(ErrorKind::RankMismatch, "expansion bound rank");
  if (!expansion_supported(x))
    throw Error(ErrorKind::TruncationNotSupported,
                x.to_string() + ": denominator unit part has non-positive first exponent coordinate");
  TruncatedExpansion out;
  out.order_bound = order_bound;
  if (x.is_zero()) {
    out.exact = true;
    return out;
  }
  const GenPoly m = unit_part(x);
  // num * sum m^k; every factor of m raises the first coordinate by at least v(m)[0] > 0.
  GenPoly acc(x.rank());
  GenPoly power = x.num().truncated(order_bound);
  while (!power.is_zero()) {
    acc = acc + power;
    if (m.is_zero()) break;
    power = (power * m).truncated(order_bound);
  }
  out.terms = acc.terms();
  out.exact = (acc * x.den() == x.num());
  return out;
}

Decomposition decompose(const HahnElem& x) {
  TruncatedExpansion e = expand(x, ExponentVec(x.rank()));
  std::vector<Term> infinite;
  RealAlgNum c(0);
  for (const auto& t : e.terms) {
    if (t.expo.sign() < 0)
      infinite.push_back(t);
    else
      c = t.coeff;
  }
  HahnElem sigma(GenPoly(x.rank(), std::move(infinite)));
  HahnElem tail = x - sigma - HahnElem::constant(c, x.rank());
  return {sigma, c, tail.sign()};
}

bool is_purely_infinite(const HahnElem& x) {
  Decomposition d = decompose(x);
  return d.constant.sign() == 0 && d.tail_sign == 0;
}

TruncatedExpansion nth_root_trunc(const HahnElem& x, unsigned n, const ExponentVec& order_bound) {
  if (x.sign() <= 0) throw Error(ErrorKind::NotPositive, "root of non-positive " + x.to_string());
  if (n == 0) throw Error(ErrorKind::NotPositive, "0-th root");
  const std::size_t rank = x.rank();
  const Term lead = x.num().leading();
  const ExponentVec root_shift = lead.expo.scaled(mpq_class(1, n));
  const RealAlgNum root_coeff = nth_root(lead.coeff, n);
  TruncatedExpansion out;
  out.order_bound = order_bound;
  if (root_shift > order_bound) return out;
  const ExponentVec rel_bound = order_bound - root_shift;

  // x = c t^g (1 + u), v(u) > 0
  HahnElem u = x / HahnElem::monomial(lead.coeff, lead.expo) - HahnElem::constant(1, rank);
  GenPoly series = GenPoly::constant(1, rank);
  if (!u.is_zero()) {
    GenPoly ue = expand(u, rel_bound).as_poly(rank);
    if (!ue.is_zero() && sgn(ue.valuation()[0]) <= 0)
      throw Error(ErrorKind::TruncationNotSupported, "binomial series of " + x.to_string());
    // sum_k binom(1/n, k) u^k
    const mpq_class alpha(1, n);
    mpq_class binom = 1;
    GenPoly power = GenPoly::constant(1, rank);
    for (unsigned long k = 1;; ++k) {
      power = (power * ue).truncated(rel_bound);
      if (power.is_zero()) break;
      binom = binom * (alpha - (k - 1)) / k;
      series = series + power.scaled(RealAlgNum(binom));
    }
  }
  GenPoly root = series.shifted(root_shift).scaled(root_coeff);
  out.terms = root.terms();
  out.exact = compare(pow(HahnElem(root), n), x) == 0;
  return out;
}

}  // namespace ipart
