/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace ipart {

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sgn(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }

mpq_class simplest_between(const mpq_class& lo, const mpq_class& hi) {
  assert(lo <= hi);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  mpz_class fl = floor_q(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return mpq_class(fl + 1);
  mpq_class inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  mpq_class r = fl + 1 / inner;
  r.canonicalize();
  return r;
}

std::string to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class pow_q(const mpq_class& base, unsigned long exp) {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  r.canonicalize();
  return r;
}

UPoly::UPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UPoly UPoly::constant(const mpq_class& c) { return UPoly(std::vector<mpq_class>{c}); }

UPoly UPoly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear_root(const mpq_class& root) {
  return UPoly(std::vector<mpq_class>{-root, mpq_class(1)});
}

void UPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

mpq_class UPoly::operator()(const mpq_class& x) const {
  mpq_class r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

int UPoly::sign_at(const mpq_class& x) const { return sgn((*this)(x)); }

UPoly UPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpq_class> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(d));
}

namespace {

// Multiplier that turns the coefficients into coprime integers; always positive.
mpq_class positive_content_inverse(const std::vector<mpq_class>& c) {
  mpz_class lcm_den = 1, g = 0;
  for (const auto& q : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  for (const auto& q : c) {
    mpz_class n = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return 1;
  return mpq_class(lcm_den, g);
}

UPoly positive_primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  mpq_class s = positive_content_inverse(p.coeffs());
  s.canonicalize();
  return s * p;
}

}  // namespace

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  UPoly r = positive_primitive(*this);
  if (sgn(r.leading()) < 0) r = -r;
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  mpq_class inv = 1 / leading();
  return inv * *this;
}

UPoly UPoly::squarefree() const {
  if (degree() < 1) return primitive();
  UPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return primitive();
  return divrem(*this, g).first.primitive();
}

UPoly UPoly::shifted(const mpq_class& r) const {
  // Horner in the basis (x + r).
  UPoly result;
  UPoly lin(std::vector<mpq_class>{r, mpq_class(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * lin + constant(*it);
  return result;
}

UPoly UPoly::scaled_arg(const mpq_class& r) const {
  std::vector<mpq_class> c = coeffs_;
  mpq_class f = 1;
  for (auto& q : c) {
    q *= f;
    f *= r;
  }
  return UPoly(std::move(c));
}

UPoly UPoly::reversed() const {
  std::vector<mpq_class> c(coeffs_.rbegin(), coeffs_.rend());
  return UPoly(std::move(c));
}

UPoly UPoly::substitute_power(unsigned n) const {
  if (is_zero()) return *this;
  std::vector<mpq_class> c(static_cast<size_t>(degree()) * n + 1);
  for (size_t k = 0; k < coeffs_.size(); ++k) c[k * n] = coeffs_[k];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
  std::vector<mpq_class> c = coeffs_;
  for (auto& q : c) q = -q;
  return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const mpq_class& s, const UPoly& a) {
  if (sgn(s) == 0) return {};
  std::vector<mpq_class> c = a.coeffs_;
  for (auto& q : c) q *= s;
  return UPoly(std::move(c));
}

std::string UPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? '-' : '+');
    }
    first = false;
    bool unit = (a == 1);
    if (k == 0 || !unit) {
      os << ipart::to_string(a);
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<mpq_class> r = a.coeffs();
  std::vector<mpq_class> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  mpq_class inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    mpq_class f = r[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

namespace {

using ZVec = std::vector<mpz_class>;

ZVec integer_coeffs(const UPoly& p) {
  UPoly q = positive_primitive(p);
  ZVec z;
  z.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) z.push_back(c.get_num());
  return z;
}

void strip(ZVec& z) {
  while (!z.empty() && sgn(z.back()) == 0) z.pop_back();
}

void make_primitive(ZVec& z) {
  mpz_class g;
  for (const auto& c : z) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Degree of gcd(a, b) mod prime, or -2 when the prime divides a leading coefficient.
int modular_gcd_degree(const ZVec& a, const ZVec& b, std::uint64_t prime) {
  auto reduce = [prime](const ZVec& z) {
    std::vector<std::uint64_t> r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), prime);
    return r;
  };
  auto mul = [prime](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % prime);
  };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t result = 1, e = prime - 2;
    while (e) {
      if (e & 1) result = mul(result, x);
      x = mul(x, x);
      e >>= 1;
    }
    return result;
  };
  auto x = reduce(a), y = reduce(b);
  if (x.back() == 0 || y.back() == 0) return -2;
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    const std::uint64_t li = inv(y.back());
    const std::size_t dy = y.size() - 1;
    while (x.size() >= y.size()) {
      const std::uint64_t f = mul(x.back(), li);
      const std::size_t off = x.size() - 1 - dy;
      for (std::size_t j = 0; j <= dy; ++j) {
        const std::uint64_t m = mul(f, y[j]);
        x[off + j] = x[off + j] >= m ? x[off + j] - m : x[off + j] + (prime - m);
      }
      trim(x);
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

}  // namespace

/*
 * Primitive remainder sequence over Z. Coprime inputs, by far the common
 * case, are recognised first by a gcd modulo two word-sized primes.
 */
UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZVec x = integer_coeffs(a), y = integer_coeffs(b);
  for (std::uint64_t prime : {0xffffffffffffffc5ull, 0xffffffffffffff43ull}) {
    if (modular_gcd_degree(x, y, prime) == 0) return UPoly::constant(1);
  }
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    const std::size_t dy = y.size() - 1;
    const mpz_class ly = y.back();
    while (x.size() >= y.size()) {
      const mpz_class lx = x.back();
      const std::size_t off = x.size() - 1 - dy;
      for (auto& c : x) c *= ly;
      for (std::size_t j = 0; j <= dy; ++j) x[off + j] -= lx * y[j];
      strip(x);
    }
    make_primitive(x);
    std::swap(x, y);
  }
  std::vector<mpq_class> q(x.begin(), x.end());
  return UPoly(std::move(q)).monic();
}

mpq_class resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (n == 0) return pow_q(b.leading(), m);
  if (m == 0) return pow_q(a.leading(), n);
  const int parity = (m % 2 == 1 && n % 2 == 1) ? -1 : 1;
  if (m < n) return parity * resultant(b, a);
  UPoly r = divrem(a, b).second;
  if (r.is_zero()) return 0;
  return parity * pow_q(b.leading(), m - r.degree()) * resultant(b, r);
}

namespace {

// Newton interpolation through (xs[i], ys[i]), returned in the monomial basis.
UPoly interpolate(const std::vector<mpq_class>& xs, std::vector<mpq_class> ys) {
  const size_t n = xs.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UPoly result;
  for (size_t i = n; i-- > 0;) result = result * UPoly::linear_root(xs[i]) + UPoly::constant(ys[i]);
  return result;
}

}  // namespace

UPoly resultant_sum(const UPoly& p, const UPoly& q) {
  const int degree = p.degree() * q.degree();
  std::vector<mpq_class> xs, ys;
  UPoly q_neg = q.negated_arg();  // q(-y)
  for (int i = 0; i <= degree; ++i) {
    mpq_class x0 = i;
    // q(x0 - y) = q_neg(y - x0)
    ys.push_back(resultant(p, q_neg.shifted(-x0)));
    xs.push_back(x0);
  }
  return interpolate(xs, std::move(ys));
}

UPoly resultant_product(const UPoly& p, const UPoly& q) {
  if (sgn(q.coeff(0)) == 0) throw std::invalid_argument("resultant_product needs q(0) != 0");
  const int n = q.degree();
  const int degree = p.degree() * n;
  std::vector<mpq_class> xs, ys;
  for (int i = 0; i <= degree; ++i) {
    mpq_class x0 = i;
    std::vector<mpq_class> c(n + 1);
    mpq_class f = 1;
    for (int k = 0; k <= n; ++k) {
      c[n - k] = q.coeff(k) * f;
      f *= x0;
    }
    ys.push_back(resultant(p, UPoly(std::move(c))));
    xs.push_back(x0);
  }
  return interpolate(xs, std::move(ys));
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_primitive(p));
  UPoly d = positive_primitive(p.derivative());
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    UPoly r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(positive_primitive(-r));
  }
  return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const mpq_class& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_variations_at_infinity(const std::vector<UPoly>& seq, int direction) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn(p.leading());
    if (direction < 0 && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int count_roots(const std::vector<UPoly>& seq, const mpq_class& lo, const mpq_class& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

int count_roots(const UPoly& p, const mpq_class& lo, const mpq_class& hi) {
  return count_roots(sturm_sequence(p.squarefree()), lo, hi);
}

int count_real_roots(const UPoly& p) {
  auto seq = sturm_sequence(p.squarefree());
  return sign_variations_at_infinity(seq, -1) - sign_variations_at_infinity(seq, +1);
}

mpq_class root_bound(const UPoly& p) {
  mpq_class m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, mpq_class(abs(p.coeff(k) / p.leading())));
  return m + 1;
}

}  // namespace ipart
