#pragma once

#include <utility>

#include "dblbrauer/polycore/gcd.hpp"

namespace dblbrauer {

// num/den with gcd removed and den monic.
template <class K>
class RatFn {
 public:
  using field_type = K;
  using poly_type = MPoly<K>;

  explicit RatFn(K k = K{}) : num_(k), den_(MPoly<K>::constant(k, k.one())) {}
  RatFn(MPoly<K> num) : num_(std::move(num)), den_(MPoly<K>::constant(num_.field(), num_.field().one())) {}
  RatFn(MPoly<K> num, MPoly<K> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFn constant(const K& k, const typename K::element& c) { return RatFn(MPoly<K>::constant(k, c)); }
  static RatFn one(const K& k) { return constant(k, k.one()); }

  const MPoly<K>& num() const { return num_; }
  const MPoly<K>& den() const { return den_; }
  const K& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // Both parts homogeneous of one degree, so the quotient is a function on the plane.
  bool is_degree_zero() const {
    return !num_.is_zero() && num_.is_homogeneous() && den_.is_homogeneous() &&
           num_.total_degree() == den_.total_degree();
  }

  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    MPoly<K> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    RatFn r(a.field());
    r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    r.fix_scale();
    return r;
  }
  RatFn inverse() const {
    if (is_zero()) throw domain_error("inverse of the zero function");
    RatFn r(field());
    r.num_ = den_;
    r.den_ = num_;
    r.fix_scale();
    return r;
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }
  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFn operator-(const RatFn& a) {
    RatFn r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

  RatFn pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFn r(field());
    r.num_ = num_.pow(unsigned(k));
    r.den_ = den_.pow(unsigned(k));
    return r;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw domain_error("zero denominator");
    num_.check_field(den_);
    if (num_.is_zero()) {
      den_ = MPoly<K>::constant(field(), field().one());
      return;
    }
    MPoly<K> g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    fix_scale();
  }
  void fix_scale() {
    if (den_.is_zero()) throw domain_error("zero denominator");
    auto lc = den_.leading_coefficient();
    if (lc == field().one()) return;
    auto inv = field().one() / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  MPoly<K> num_, den_;
};

}  // namespace dblbrauer
