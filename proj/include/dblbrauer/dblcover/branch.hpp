#pragma once

#include <optional>
#include <string>

#include "dblbrauer/dblcover/resolution.hpp"

namespace dblbrauer {

enum class Smoothness { smooth, singular, undecided };

inline const char* smoothness_name(Smoothness s) {
  switch (s) {
    case Smoothness::smooth: return "TRUE";
    case Smoothness::singular: return "FALSE";
    case Smoothness::undecided: return "UNDECIDED";
  }
  return "?";
}

struct SingularSearch {
  Smoothness status = Smoothness::undecided;
  std::string witness;
};

namespace detail {

template <class K>
UPoly<K> at_infinity(const MPoly<K>& f) {
  const K& k = f.field();
  return UPoly<K>::from_mpoly(f.specialize(Var::x, k.one()).specialize(Var::z, k.zero()), Var::y);
}

// Common zeros of f and its partials. In a chart where [0:1:0] is off the
// curve, affine singular points have x-coordinates among the common roots of
// Res_y(f, f_y) and Res_y(f, f_x); each candidate is tested exactly in the
// extension it generates. Points at infinity are tested at x = 1.
template <class K>
SingularSearch search_singular(const MPoly<K>& f, Rng& rng) {
  const K& k = f.field();
  const unsigned e = unsigned(f.total_degree());
  for (int attempt = 0; attempt < 32; ++attempt) {
    Chart<K> ch = attempt == 0 ? Chart<K>::identity(k) : Chart<K>::random(k, rng);
    MPoly<K> ft = ch.pull(f);
    if (is_zero(ft.coefficient(Monomial::variable(Var::y, e)))) continue;
    std::array<MPoly<K>, 3> d{ft.derivative(Var::x), ft.derivative(Var::y), ft.derivative(Var::z)};
    UPoly<K> inf = at_infinity(ft);
    for (auto& p : d) inf = gcd(inf, at_infinity(p));
    if (inf.degree() >= 1) return {Smoothness::singular, "singular point at infinity of the chart, y a root of " + to_string(inf, 'y')};
    MPoly<K> g0 = ft.specialize(Var::z, k.one()), gx = d[0].specialize(Var::z, k.one()),
             gy = d[1].specialize(Var::z, k.one());
    if (gy.is_zero()) continue;
    UPoly<K> r1 = bivariate_resultant(g0, gy, Var::y, Var::x);
    if (r1.is_zero()) continue;
    UPoly<K> g = gx.is_zero() ? r1 : gcd(r1, bivariate_resultant(g0, gx, Var::y, Var::x));
    if (g.degree() < 1) return {Smoothness::smooth, ""};
    if constexpr (is_prime_field_v<K>) {
      for (auto& [p, mult] : univariate_factor(g)) {
        ExtField kk(p);
        std::array<ExtElem, 4> pt{kk.generator(), kk.zero(), kk.one(), kk.zero()};
        UPoly<ExtField> h = gcd(gcd(restrict_to(g0, kk, Var::y, pt), restrict_to(gx, kk, Var::y, pt)),
                                restrict_to(gy, kk, Var::y, pt));
        if (h.degree() >= 1)
          return {Smoothness::singular, "singular point with chart x-coordinate a root of " + to_string(p, 'x')};
      }
      return {Smoothness::smooth, ""};
    } else {
      return {Smoothness::undecided, "candidate x-coordinates " + to_string(g, 'x') + " not split over the field"};
    }
  }
  throw retry_exhausted("no chart with [0:1:0] off the curve");
}

}  // namespace detail

// Smoothness of V(f). Over characteristic zero a smooth reduction modulo a
// prime also proves smoothness.
template <class K>
SingularSearch plane_curve_smoothness(const MPoly<K>& f, Rng& rng) {
  if (f.is_zero() || f.is_constant() || !f.is_homogeneous()) throw domain_error("smoothness needs a nonconstant form");
  if (f.total_degree() == 1) return {Smoothness::smooth, ""};
  if (!is_squarefree(f)) return {Smoothness::singular, "equation is not squarefree"};
  SingularSearch s = detail::search_singular(f, rng);
  if constexpr (is_char_zero_v<K>) {
    if (s.status == Smoothness::undecided) {
      for (std::uint32_t p : {10009u, 10037u, 10069u}) {
        PrimeField fp(p);
        auto g = detail::reduce_mod(f, fp);
        if (!g || g->is_zero() || g->total_degree() != f.total_degree()) continue;
        if (!is_squarefree(*g)) continue;
        if (detail::search_singular(*g, rng).status == Smoothness::smooth)
          return {Smoothness::smooth, "smooth reduction modulo " + std::to_string(p)};
      }
    }
  }
  return s;
}

template <class K>
struct BranchReport {
  MPoly<K> det;
  std::optional<PlaneCurve<K>> curve;
  Smoothness smooth = Smoothness::undecided;
  std::string witness;
};

template <class K>
BranchReport<K> branch_curve(const SymResolution<K>& r, Rng& rng) {
  BranchReport<K> b{r.det(), std::nullopt, Smoothness::undecided, ""};
  if (b.det.total_degree() != r.e) throw invalid_resolution("determinant degree differs from e");
  auto s = plane_curve_smoothness(b.det, rng);
  b.smooth = s.status;
  b.witness = s.witness;
  if (b.smooth == Smoothness::smooth) b.curve = PlaneCurve<K>::certified_by(b.det, "smooth plane curve");
  else if (is_squarefree(b.det)) b.curve = PlaneCurve<K>::certify(b.det, rng);
  return b;
}

}  // namespace dblbrauer
