#pragma once

#include "dblbrauer/valuation/curve.hpp"

namespace dblbrauer {

template <class K>
int multiplicity_of(MPoly<K> p, const MPoly<K>& f) {
  if (p.is_zero()) throw domain_error("valuation of zero");
  int k = 0;
  while (true) {
    auto q = p.try_exact_div(f);
    if (!q) return k;
    p = std::move(*q);
    ++k;
  }
}

template <class K>
int curve_valuation(const RatFn<K>& h, const PlaneCurve<K>& c) {
  if (h.is_zero()) throw domain_error("valuation of the zero function");
  return multiplicity_of(h.num(), c.f()) - multiplicity_of(h.den(), c.f());
}

// h with every factor of the curve equation removed from numerator and denominator.
template <class K>
RatFn<K> strip_curve(const RatFn<K>& h, const PlaneCurve<K>& c) {
  MPoly<K> n = h.num(), d = h.den();
  while (auto q = n.try_exact_div(c.f())) n = std::move(*q);
  while (auto q = d.try_exact_div(c.f())) d = std::move(*q);
  return RatFn<K>(n, d);
}

// A class in k(C)^x / k(C)^xm, represented by a function with both parts reduced modulo f.
template <class K>
class ResidueClass {
 public:
  ResidueClass(PlaneCurve<K> c, RatFn<K> value, unsigned m) : curve_(std::move(c)), m_(m) {
    if (m < 2) throw domain_error("residue modulus must be at least 2");
    MPoly<K> n = value.num().remainder(curve_.f()), d = value.den().remainder(curve_.f());
    if (n.is_zero() || d.is_zero()) throw domain_error("residue value vanishes on the curve");
    value_ = RatFn<K>(n, d);
  }
  static ResidueClass trivial(const PlaneCurve<K>& c, unsigned m) { return ResidueClass(c, RatFn<K>::one(c.field()), m); }

  const PlaneCurve<K>& curve() const { return curve_; }
  const RatFn<K>& value() const { return value_; }
  unsigned modulus() const { return m_; }
  bool is_one() const { return value_.is_one(); }

  friend ResidueClass operator*(const ResidueClass& a, const ResidueClass& b) {
    a.check(b);
    return ResidueClass(a.curve_, a.value_ * b.value_, a.m_);
  }
  ResidueClass inverse() const { return ResidueClass(curve_, value_.inverse(), m_); }
  friend ResidueClass operator/(const ResidueClass& a, const ResidueClass& b) { return a * b.inverse(); }
  ResidueClass pow(int k) const {
    ResidueClass r = trivial(curve_, m_), base = k < 0 ? inverse() : *this;
    for (int i = 0; i < std::abs(k); ++i) r = r * base;
    return r;
  }

 private:
  void check(const ResidueClass& b) const {
    if (!(curve_ == b.curve_) || m_ != b.m_) throw domain_error("residue classes live on different curves or moduli");
  }

  PlaneCurve<K> curve_;
  RatFn<K> value_;
  unsigned m_;
};

// Equality of the underlying functions on the curve, not just of their classes.
template <class K>
bool equal_on_curve(const ResidueClass<K>& a, const ResidueClass<K>& b) {
  const RatFn<K>& x = a.value();
  const RatFn<K>& y = b.value();
  return (x.num() * y.den() - y.num() * x.den()).divisible_by(a.curve().f());
}

template <class K>
bool equal_on_curve_up_to_sign(const ResidueClass<K>& a, const ResidueClass<K>& b) {
  return equal_on_curve(a, b) || equal_on_curve(a, b * ResidueClass<K>(a.curve(), RatFn<K>::constant(a.curve().field(), -a.curve().field().one()), a.modulus()));
}

template <class K>
ResidueClass<K> residue_at_curve(const RatFn<K>& h, const PlaneCurve<K>& c, unsigned m) {
  if (curve_valuation(h, c) != 0) throw domain_error("residue needs a function of valuation zero along the curve");
  return ResidueClass<K>(c, strip_curve(h, c), m);
}

}  // namespace dblbrauer
