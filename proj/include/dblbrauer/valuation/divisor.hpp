#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dblbrauer/valuation/chart.hpp"
#include "dblbrauer/valuation/closed_point.hpp"
#include "dblbrauer/valuation/curve.hpp"

namespace dblbrauer {

// A Galois orbit of points in chart coordinates: x runs over the roots of
// factor and y = y(x) modulo factor. Over fields of characteristic zero the
// factor is only squarefree and y is left empty. Over F_p the cluster also
// carries its original coordinates modulo factor and a chart-free key.
template <class K>
struct Cluster {
  UPoly<K> factor;
  UPoly<K> y;
  int mult = 0;
  std::vector<std::uint32_t> key;
  std::vector<UPoly<K>> point;
};

template <class K>
bool cluster_key_less(const Cluster<K>& a, const Cluster<K>& b) {
  if (!a.key.empty() && !b.key.empty()) return a.key < b.key;
  if (upoly_less(a.factor, b.factor)) return true;
  if (upoly_less(b.factor, a.factor)) return false;
  return upoly_less(a.y, b.y);
}

template <class K>
bool same_key(const Cluster<K>& a, const Cluster<K>& b) {
  if (!a.key.empty() && !b.key.empty()) return a.key == b.key;
  return a.factor == b.factor && a.y == b.y;
}

class chart_degenerate : public error {
 public:
  chart_degenerate() : error("chart is not generic for this intersection") {}
};

template <class K>
class CurveDivisor {
 public:
  CurveDivisor(PlaneCurve<K> c, Chart<K> ch) : curve_(std::move(c)), chart_(std::move(ch)) {}
  CurveDivisor(PlaneCurve<K> c, Chart<K> ch, std::vector<Cluster<K>> cl)
      : curve_(std::move(c)), chart_(std::move(ch)), clusters_(std::move(cl)) {
    normalize();
  }

  const PlaneCurve<K>& curve() const { return curve_; }
  const Chart<K>& chart() const { return chart_; }
  const std::vector<Cluster<K>>& clusters() const { return clusters_; }
  bool is_zero() const { return clusters_.empty(); }

  int degree() const {
    int d = 0;
    for (auto& c : clusters_) d += c.mult * c.factor.degree();
    return d;
  }
  int multiplicity(const Cluster<K>& key) const {
    for (auto& c : clusters_)
      if (same_key(c, key)) return c.mult;
    return 0;
  }
  bool divisible_by(int m) const {
    for (auto& c : clusters_)
      if (c.mult % m) return false;
    return true;
  }

  friend CurveDivisor operator+(const CurveDivisor& a, const CurveDivisor& b) {
    a.check_compatible(b);
    CurveDivisor r = a;
    r.clusters_.insert(r.clusters_.end(), b.clusters_.begin(), b.clusters_.end());
    r.normalize();
    return r;
  }
  CurveDivisor scaled(int k) const {
    CurveDivisor r = *this;
    for (auto& c : r.clusters_) c.mult *= k;
    r.normalize();
    return r;
  }
  friend CurveDivisor operator-(const CurveDivisor& a, const CurveDivisor& b) { return a + b.scaled(-1); }
  friend bool operator==(const CurveDivisor& a, const CurveDivisor& b) {
    if (!a.chart_free() && !(a.chart_ == b.chart_)) return false;
    if (!(a.curve_ == b.curve_) || a.clusters_.size() != b.clusters_.size()) return false;
    for (std::size_t i = 0; i < a.clusters_.size(); ++i)
      if (!same_key(a.clusters_[i], b.clusters_[i]) || a.clusters_[i].mult != b.clusters_[i].mult) return false;
    return true;
  }

  // Over F_p clusters are keyed independently of the chart.
  static constexpr bool chart_free() { return is_prime_field_v<K>; }

  void check_compatible(const CurveDivisor& b) const {
    if ((!chart_free() && !(chart_ == b.chart_)) || !(curve_ == b.curve_))
      throw domain_error("divisors must live on the same curve and chart to be combined");
  }

 private:
  void normalize() {
    std::sort(clusters_.begin(), clusters_.end(), cluster_key_less<K>);
    std::vector<Cluster<K>> out;
    for (auto& c : clusters_) {
      if (!out.empty() && same_key(out.back(), c)) out.back().mult += c.mult;
      else out.push_back(c);
    }
    std::erase_if(out, [](const Cluster<K>& c) { return c.mult == 0; });
    clusters_ = std::move(out);
  }

  PlaneCurve<K> curve_;
  Chart<K> chart_;
  std::vector<Cluster<K>> clusters_;
};

// Cluster-wise minimum of divisors on one chart (absent clusters count as 0).
template <class K>
CurveDivisor<K> cluster_min(const std::vector<CurveDivisor<K>>& ds) {
  if (ds.empty()) throw domain_error("minimum of an empty family of divisors");
  std::vector<Cluster<K>> out;
  for (auto& c : ds[0].clusters()) {
    int m = c.mult;
    for (auto& d : ds) {
      d.check_compatible(ds[0]);
      m = std::min(m, d.multiplicity(c));
    }
    if (m > 0) {
      Cluster<K> k = c;
      k.mult = m;
      out.push_back(std::move(k));
    }
  }
  return CurveDivisor<K>(ds[0].curve(), ds[0].chart(), std::move(out));
}

// Numerator and denominator as forms of one degree; inputs that are not
// degree-zero are read in the affine chart z = 1.
template <class K>
std::pair<MPoly<K>, MPoly<K>> projective_parts(const RatFn<K>& g) {
  if (g.is_degree_zero()) return {g.num(), g.den()};
  MPoly<K> n = g.num().homogenize(Var::z), d = g.den().homogenize(Var::z);
  const K& k = g.field();
  const MPoly<K> z = MPoly<K>::variable(k, Var::z);
  int dn = n.total_degree(), dd = d.total_degree();
  if (dn < dd) n = n * z.pow(unsigned(dd - dn));
  if (dd < dn) d = d * z.pow(unsigned(dn - dd));
  return {n, d};
}

namespace detail {

// Unique common root of two polynomials that share exactly one root, possibly repeated.
inline std::optional<ExtElem> single_common_root(const UPoly<ExtField>& h) {
  const int k = h.degree();
  if (k < 1) return std::nullopt;
  const ExtField& f = h.field();
  UPoly<ExtField> m = h.monic();
  ExtElem kk = f.from_int(k);
  if (is_zero(kk)) return std::nullopt;
  ExtElem y0 = -(m[k - 1] / kk);
  UPoly<ExtField> lin(f, {-y0, f.one()});
  if (!(lin.pow(unsigned(k)) == m)) return std::nullopt;
  return y0;
}

inline ExtElem eval_in(const UPoly<PrimeField>& p, const ExtField& k, const ExtElem& x) {
  ExtElem s = k.zero();
  for (int i = p.degree(); i >= 0; --i) s = s * x + k.from_base(p[i]);
  return s;
}

}  // namespace detail

// Clusters of C . V(g) with positive multiplicities, or nothing when the chart is not generic.
template <class K>
std::optional<std::vector<Cluster<K>>> intersection_clusters(const PlaneCurve<K>& c, const MPoly<K>& g,
                                                             const Chart<K>& ch) {
  if (g.is_zero()) throw domain_error("intersection with the zero form");
  if (!g.is_homogeneous()) throw domain_error("intersection requires a homogeneous form");
  std::vector<Cluster<K>> out;
  if (g.is_constant()) return out;
  if (g.divisible_by(c.f())) throw domain_error("form vanishes identically on the curve");
  const K& k = c.field();
  MPoly<K> ft = ch.pull(c.f()), gt = ch.pull(g);
  const unsigned e = c.degree(), dg = unsigned(g.total_degree());
  if (is_zero(ft.coefficient(Monomial::variable(Var::y, e))) || is_zero(gt.coefficient(Monomial::variable(Var::y, dg))))
    return std::nullopt;
  MPoly<K> fa = ft.specialize(Var::z, k.one()), ga = gt.specialize(Var::z, k.one());
  UPoly<K> r = bivariate_resultant(fa, ga, Var::y, Var::x);
  if (r.degree() != int(e * dg)) return std::nullopt;
  if constexpr (is_prime_field_v<K>) {
    for (auto& [p, mult] : univariate_factor(r)) {
      ExtField kk(p);
      std::array<ExtElem, 4> pt{kk.generator(), kk.zero(), kk.one(), kk.zero()};
      UPoly<ExtField> h = gcd(restrict_to(fa, kk, Var::y, pt), restrict_to(ga, kk, Var::y, pt));
      auto y0 = detail::single_common_root(h);
      if (!y0) return std::nullopt;
      std::array<ExtElem, 3> v{kk.generator(), *y0, kk.one()}, x;
      std::vector<UPoly<K>> coords;
      for (int i = 0; i < 3; ++i) {
        x[i] = kk.zero();
        for (int j = 0; j < 3; ++j) x[i] += kk.from_base(ch.matrix()[i][j]) * v[j];
        coords.push_back(x[i].as_upoly());
      }
      out.push_back({p, y0->as_upoly(), mult, closed_point_key(x, kk), std::move(coords)});
    }
  } else {
    for (auto& [s, mult] : squarefree_decomposition(r)) out.push_back({s, UPoly<K>(k), mult, {}, {}});
  }
  return out;
}

template <class K>
CurveDivisor<K> intersection_divisor(const PlaneCurve<K>& c, const MPoly<K>& g, const Chart<K>& ch) {
  auto cl = intersection_clusters(c, g, ch);
  if (!cl) throw chart_degenerate();
  return CurveDivisor<K>(c, ch, std::move(*cl));
}

// A chart generic for every listed form, together with their intersection divisors.
template <class K>
std::pair<Chart<K>, std::vector<CurveDivisor<K>>> common_chart(const PlaneCurve<K>& c, const std::vector<MPoly<K>>& forms,
                                                               Rng& rng, int max_tries = 64) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Chart<K> ch = Chart<K>::random(c.field(), rng);
    std::vector<CurveDivisor<K>> ds;
    bool ok = true;
    for (auto& g : forms) {
      auto cl = intersection_clusters(c, g, ch);
      if constexpr (CurveDivisor<K>::chart_free()) {
        for (int t = 0; !cl && t < max_tries; ++t) cl = intersection_clusters(c, g, Chart<K>::random(c.field(), rng));
      }
      if (!cl) {
        ok = false;
        break;
      }
      ds.emplace_back(c, ch, std::move(*cl));
    }
    if (ok) return {ch, std::move(ds)};
  }
  throw retry_exhausted("no generic chart found for the curve intersections");
}

// Same divisor on possibly different charts. Over F_p the keys are chart-free;
// otherwise the multisets of (factor degree, multiplicity) are compared.
template <class K>
bool same_divisor(const CurveDivisor<K>& a, const CurveDivisor<K>& b) {
  if (!(a.curve() == b.curve())) return false;
  if (CurveDivisor<K>::chart_free() || a.chart() == b.chart()) return a == b;
  auto sig = [](const CurveDivisor<K>& d) {
    std::vector<std::pair<int, int>> s;
    for (auto& c : d.clusters()) s.emplace_back(c.factor.degree(), c.mult);
    std::sort(s.begin(), s.end());
    return s;
  };
  return sig(a) == sig(b);
}

// Divisor of g restricted to the curve, checked against a second independent chart.
template <class K>
CurveDivisor<K> divisor_on_curve(const RatFn<K>& g, const PlaneCurve<K>& c, Rng& rng, bool cross_check = true) {
  if (g.is_zero()) throw domain_error("divisor of the zero function");
  auto [n, d] = projective_parts(g);
  if (n.divisible_by(c.f()) || d.divisible_by(c.f()))
    throw domain_error("function has nonzero valuation along the curve");
  auto [ch, ds] = common_chart(c, {n, d}, rng);
  CurveDivisor<K> div = ds[0] - ds[1];
  if (cross_check) {
    auto [ch2, ds2] = common_chart(c, {n, d}, rng);
    if (!same_divisor(div, ds2[0] - ds2[1])) throw domain_error("divisor differs between two generic charts");
  }
  return div;
}

}  // namespace dblbrauer
