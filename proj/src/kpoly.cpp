/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/kpoly.hpp"

#include <stdexcept>

#include "ipart/error.hpp"

namespace ipart {

KPoly::KPoly(std::size_t rank, std::vector<HahnElem> coeffs) : rank_(rank), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.rank() != rank_) throw Error(ErrorKind::RankMismatch, "polynomial coefficient " + c.to_string());
  trim();
}

void KPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

HahnElem KPoly::operator()(const HahnElem& x) const {
  HahnElem r(rank_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

int KPoly::sign_at_infinity(int direction) const {
  if (is_zero()) return 0;
  int s = leading().sign();
  if (direction < 0 && degree() % 2 == 1) s = -s;
  return s;
}

KPoly KPoly::derivative() const {
  std::vector<HahnElem> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(coeffs_[k] * HahnElem::constant(RealAlgNum(static_cast<long>(k)), rank_));
  return KPoly(rank_, std::move(d));
}

KPoly KPoly::operator-() const {
  std::vector<HahnElem> c;
  for (const auto& x : coeffs_) c.push_back(-x);
  return KPoly(rank_, std::move(c));
}

KPoly KPoly::sign_normalized() const {
  if (is_zero()) return *this;
  HahnElem inv = abs(leading()).inverse();
  std::vector<HahnElem> c;
  for (const auto& x : coeffs_) c.push_back(x * inv);
  return KPoly(rank_, std::move(c));
}

KPoly KPoly::squarefree() const {
  if (degree() < 1) return *this;
  KPoly g = gcd(*this, derivative());
  if (g.degree() < 1) return *this;
  return divrem(*this, g).first;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) return KPoly(a.rank_);
  std::vector<HahnElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, HahnElem(a.rank_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return KPoly(a.rank_, std::move(c));
}

std::string KPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const HahnElem& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool simple = c.is_polynomial() && c.num().is_monomial();
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += simple ? cs : "(" + cs + ")";
      continue;
    }
    std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
    if (cs == "1") s += mono;
    else if (cs == "-1") s += "-" + mono;
    else s += (simple ? cs : "(" + cs + ")") + "*" + mono;
  }
  return s;
}

std::pair<KPoly, KPoly> divrem(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const std::size_t rank = a.rank();
  if (a.degree() < b.degree()) return {KPoly(rank), a};
  std::vector<HahnElem> r = a.coeffs();
  std::vector<HahnElem> q(a.degree() - b.degree() + 1, HahnElem(rank));
  const int db = b.degree();
  const HahnElem inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    HahnElem f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * b.coeffs()[j];
  }
  r.resize(db);
  return {KPoly(rank, std::move(q)), KPoly(rank, std::move(r))};
}

KPoly gcd(const KPoly& a, const KPoly& b) {
  KPoly x = a.sign_normalized(), y = b.sign_normalized();
  while (!y.is_zero()) {
    KPoly r = divrem(x, y).second;
    x = std::move(y);
    y = r.sign_normalized();
  }
  return x;
}

std::vector<KPoly> sturm_sequence(const KPoly& p) {
  std::vector<KPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.sign_normalized());
  KPoly d = p.derivative().sign_normalized();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    KPoly r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back((-r).sign_normalized());
  }
  return seq;
}

int sign_variations(const std::vector<KPoly>& seq, const KBound& at) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = 0;
    switch (at.kind) {
      case KBound::Kind::NegInf: s = p.sign_at_infinity(-1); break;
      case KBound::Kind::PosInf: s = p.sign_at_infinity(+1); break;
      case KBound::Kind::Finite: s = p(at.value).sign(); break;
    }
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int poly_sturm_count(const KPoly& p, const KBound& lo, const KBound& hi) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm count of the zero polynomial");
  const bool ordered = lo.kind == KBound::Kind::NegInf || hi.kind == KBound::Kind::PosInf
                           ? !(lo.kind == KBound::Kind::PosInf || hi.kind == KBound::Kind::NegInf)
                           : lo.value < hi.value;
  if (!ordered) throw std::invalid_argument("poly_sturm_count needs lo < hi");
  auto seq = sturm_sequence(p.squarefree());
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

}  // namespace ipart
