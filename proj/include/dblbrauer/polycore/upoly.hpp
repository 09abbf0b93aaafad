#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dblbrauer/polycore/mpoly.hpp"

namespace dblbrauer {

// Dense univariate polynomial, coefficients stored low degree first.
template <class K>
class UPoly {
 public:
  using field_type = K;
  using coeff_type = typename K::element;

  explicit UPoly(K field = K{}) : field_(std::move(field)) {}
  UPoly(K field, std::vector<coeff_type> c) : field_(std::move(field)), c_(std::move(c)) { trim(); }

  static UPoly constant(const K& k, const coeff_type& c) { return UPoly(k, {c}); }
  static UPoly x(const K& k) { return UPoly(k, {k.zero(), k.one()}); }
  static UPoly monomial(const K& k, int d, const coeff_type& c) {
    std::vector<coeff_type> v(d + 1, k.zero());
    v[d] = c;
    return UPoly(k, std::move(v));
  }

  const K& field() const { return field_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
  coeff_type operator[](int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : field_.zero(); }
  const std::vector<coeff_type>& coefficients() const { return c_; }
  coeff_type leading_coefficient() const { return c_.empty() ? field_.zero() : c_.back(); }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<coeff_type> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UPoly(a.field_, std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<coeff_type> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(a.field_, std::move(r));
  }
  UPoly scaled(const coeff_type& s) const {
    UPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  UPoly monic() const { return is_zero() ? *this : scaled(field_.one() / leading_coefficient()); }
  UPoly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<coeff_type> r(k, field_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(field_, std::move(r));
  }

  std::pair<UPoly, UPoly> divmod(const UPoly& b) const {
    if (b.is_zero()) throw domain_error("division by the zero polynomial");
    if (degree() < b.degree()) return {UPoly(field_), *this};
    std::vector<coeff_type> r = c_;
    std::vector<coeff_type> q(c_.size() - b.c_.size() + 1, field_.zero());
    const coeff_type inv = field_.one() / b.leading_coefficient();
    const int db = b.degree();
    for (int i = degree(); i >= db; --i) {
      if (detail::coeff_zero(r[i])) continue;
      coeff_type f = r[i] * inv;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
  UPoly exact_div(const UPoly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw not_divisible();
    return q;
  }

  UPoly derivative() const {
    std::vector<coeff_type> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(std::int64_t(i)));
    return UPoly(field_, std::move(r));
  }
  coeff_type eval(const coeff_type& x) const {
    coeff_type s = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
  }
  UPoly pow(unsigned k) const {
    UPoly r = constant(field_, field_.one()), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  MPoly<K> to_mpoly(Var v) const {
    std::vector<typename MPoly<K>::Term> ts;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!detail::coeff_zero(c_[i])) ts.emplace_back(Monomial::variable(v, unsigned(i)), c_[i]);
    return MPoly<K>::from_terms(field_, std::move(ts));
  }
  // Requires p to involve at most the variable v.
  static UPoly from_mpoly(const MPoly<K>& p, Var v) {
    std::vector<coeff_type> c(std::max(0, p.degree_in(v)) + 1, p.field().zero());
    for (auto& [m, cc] : p.terms()) {
      if (m.degree() != m.exponent(v)) throw domain_error("polynomial is not univariate in the requested variable");
      c[m.exponent(v)] = cc;
    }
    return UPoly(p.field(), std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
  }

  K field_;
  std::vector<coeff_type> c_;
};

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <class K>
std::tuple<UPoly<K>, UPoly<K>, UPoly<K>> xgcd(UPoly<K> a, UPoly<K> b) {
  const K& k = a.field();
  UPoly<K> s0 = UPoly<K>::constant(k, k.one()), s1(k), t0(k), t1 = UPoly<K>::constant(k, k.one());
  while (!b.is_zero()) {
    auto [q, r] = a.divmod(b);
    a = std::move(b);
    b = std::move(r);
    UPoly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero()) return {a, s0, t0};
  auto inv = k.one() / a.leading_coefficient();
  return {a.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class K>
UPoly<K> powmod(const UPoly<K>& a, const mpz_class& e, const UPoly<K>& m) {
  const K& k = a.field();
  UPoly<K> r = UPoly<K>::constant(k, k.one()) % m, b = a % m;
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

// Resultant over a field by the Euclidean remainder sequence.
template <class K>
typename K::element resultant(UPoly<K> a, UPoly<K> b) {
  const K& k = a.field();
  using E = typename K::element;
  if (a.is_zero() || b.is_zero()) return k.zero();
  E res = k.one();
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      E r = k.one();
      for (int i = 0; i < da; ++i) r = r * b.leading_coefficient();
      return res * r;
    }
    if ((da & 1) && (db & 1)) res = -res;
    UPoly<K> r = a % b;
    if (r.is_zero()) return k.zero();
    E lb = b.leading_coefficient();
    for (int i = 0; i < da - r.degree(); ++i) res = res * lb;
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace dblbrauer
