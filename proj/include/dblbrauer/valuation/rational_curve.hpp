#pragma once

#include <optional>

#include "dblbrauer/valuation/divisor.hpp"
#include "dblbrauer/valuation/residue.hpp"

namespace dblbrauer {

inline std::optional<Fp> field_sqrt(const PrimeField& k, Fp a) {
  if (is_zero(a)) return a;
  const std::uint32_t p = k.characteristic();
  if (a.pow((p - 1) / 2) != k.one()) return std::nullopt;
  std::uint32_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Fp z = k.from_int(2);
  while (z.pow((p - 1) / 2) == k.one()) z = z + k.one();
  Fp c = z.pow(q), t = a.pow(q), r = a.pow((q + 1) / 2);
  std::uint32_t m = s;
  while (t != k.one()) {
    std::uint32_t i = 0;
    Fp tt = t;
    while (tt != k.one()) {
      tt = tt * tt;
      ++i;
    }
    Fp b = c;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  return r;
}
inline std::optional<mpq_class> field_sqrt(const RationalField&, const mpq_class& a) {
  mpq_class r;
  if (rational_sqrt(a, r)) return r;
  return std::nullopt;
}
inline std::optional<QI> field_sqrt(const GaussianRationalField&, const QI& a) {
  QI r;
  if (GaussianRationalField::sqrt(a, r)) return r;
  return std::nullopt;
}

// Birational map from the projective line: point(s) = coords[i](s) with binary degree deg.
template <class K>
struct Parametrization {
  std::array<UPoly<K>, 3> coords;
  int degree = 1;

  // f(point(s)) as a polynomial in s; its binary degree is deg(f) * degree.
  UPoly<K> pull(const MPoly<K>& f) const {
    std::array<MPoly<K>, 3> im;
    for (int i = 0; i < 3; ++i) im[i] = coords[i].to_mpoly(Var::t);
    return UPoly<K>::from_mpoly(f.substitute({&im[0], &im[1], &im[2], nullptr}), Var::t);
  }
};

namespace detail {

template <class K>
std::vector<typename K::element> conic_search_values(const K& k) {
  std::vector<typename K::element> out;
  if constexpr (is_prime_field_v<K>) {
    for (std::uint32_t v = 0; v < std::min<std::uint32_t>(k.characteristic(), 4096); ++v) out.push_back(k.from_int(v));
  } else {
    for (int b = 1; b <= 5; ++b)
      for (int a = 0; a <= 20; ++a) {
        if (std::gcd(a, b) != 1 && !(a == 0 && b == 1)) continue;
        out.push_back(k.from_rational(a, b));
        if (a) out.push_back(k.from_rational(-a, b));
      }
  }
  return out;
}

}  // namespace detail

// Lines always; smooth conics when a point over the coefficient field is found.
template <class K>
std::optional<Parametrization<K>> parametrize(const PlaneCurve<K>& c) {
  using E = typename K::element;
  const K& k = c.field();
  const MPoly<K>& f = c.f();
  auto coeff = [&](unsigned a, unsigned b, unsigned d) -> E { return f.coefficient(Monomial::from_exponents({a, b, d, 0})); };
  if (c.degree() == 1) {
    E a = coeff(1, 0, 0), b = coeff(0, 1, 0), d = coeff(0, 0, 1);
    std::array<std::array<E, 3>, 2> basis;
    if (!is_zero(a)) basis = {{{-b / a, k.one(), k.zero()}, {-d / a, k.zero(), k.one()}}};
    else if (!is_zero(b)) basis = {{{k.one(), k.zero(), k.zero()}, {k.zero(), -d / b, k.one()}}};
    else basis = {{{k.one(), k.zero(), k.zero()}, {k.zero(), k.one(), k.zero()}}};
    Parametrization<K> p;
    for (int i = 0; i < 3; ++i) p.coords[i] = UPoly<K>(k, {basis[1][i], basis[0][i]});
    p.degree = 1;
    return p;
  }
  if (c.degree() != 2) return std::nullopt;
  const E half = k.one() / k.from_int(2);
  std::array<std::array<E, 3>, 3> A;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) {
      std::array<unsigned, 3> e{0, 0, 0};
      e[i] += 1;
      e[j] += 1;
      E v = coeff(e[0], e[1], e[2]);
      A[i][j] = i == j ? v : v * half;
    }
  auto det3 = [](const std::array<std::array<E, 3>, 3>& t) -> E {
    return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
           t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
  };
  if (is_zero(det3(A))) return std::nullopt;
  auto bil = [&](const std::array<E, 3>& u, const std::array<E, 3>& v) -> E {
    E s = k.zero();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s = s + u[i] * A[i][j] * v[j];
    return s;
  };
  std::optional<std::array<E, 3>> p0;
  auto try_line = [&](const E& x0, const E& z0) {
    E a = A[1][1], b = A[0][1] * x0 + A[1][2] * z0, cc = bil({x0, k.zero(), z0}, {x0, k.zero(), z0});
    if (is_zero(a)) {
      if (!is_zero(b)) p0 = std::array<E, 3>{x0, -cc / (b + b), z0};
      else if (is_zero(cc)) p0 = std::array<E, 3>{x0, k.zero(), z0};
      return;
    }
    auto r = field_sqrt(k, b * b - a * cc);
    if (r) p0 = std::array<E, 3>{x0, (-b + *r) / a, z0};
  };
  try_line(k.one(), k.zero());
  if (!p0 && is_zero(A[1][1])) p0 = std::array<E, 3>{k.zero(), k.one(), k.zero()};
  for (auto& x0 : detail::conic_search_values(k)) {
    if (p0) break;
    try_line(x0, k.one());
  }
  if (!p0) return std::nullopt;
  std::array<std::array<E, 3>, 3> unit{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) unit[i][j] = i == j ? k.one() : k.zero();
  std::array<E, 3> w0, w1;
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i)
    for (int j = i + 1; j < 3 && !found; ++j)
      if (!is_zero(det3({*p0, unit[i], unit[j]}))) {
        w0 = unit[i];
        w1 = unit[j];
        found = true;
      }
  // Second intersection of the line through p0 in direction v: Q(v) p0 - 2 B(p0, v) v.
  const UPoly<K> s = UPoly<K>::x(k);
  std::array<UPoly<K>, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = s.scaled(w0[i]) + UPoly<K>::constant(k, w1[i]);
  UPoly<K> qv = UPoly<K>(k, {bil(w1, w1), bil(w0, w1) + bil(w0, w1), bil(w0, w0)});
  UPoly<K> bv = UPoly<K>(k, {bil(*p0, w1), bil(*p0, w0)});
  Parametrization<K> p;
  for (int i = 0; i < 3; ++i) p.coords[i] = qv.scaled((*p0)[i]) - (bv * v[i]).scaled(k.from_int(2));
  p.degree = 2;
  return p;
}

namespace detail {

template <class K>
bool upoly_is_mth_power(const UPoly<K>& f, unsigned m) {
  if constexpr (is_prime_field_v<K>) {
    for (auto& [g, e] : univariate_factor(f))
      if (e % int(m)) return false;
  } else {
    for (auto& [g, e] : squarefree_decomposition(f))
      if (e % int(m)) return false;
  }
  return true;
}

}  // namespace detail

template <class K>
bool is_mth_power_on_rational_curve(const ResidueClass<K>& r) {
  auto p = parametrize(r.curve());
  if (!p) throw unsupported("curve is neither a line nor a smooth conic with a known point");
  const RatFn<K>& v = r.value();
  if (!v.is_degree_zero()) throw domain_error("residue value is not a degree-zero function");
  UPoly<K> n = p->pull(v.num()), d = p->pull(v.den());
  UPoly<K> g = gcd(n, d);
  n = n.exact_div(g);
  d = d.exact_div(g);
  const K& k = r.curve().field();
  if (!k.is_mth_power(n.leading_coefficient() / d.leading_coefficient(), r.modulus())) return false;
  return detail::upoly_is_mth_power(n, r.modulus()) && detail::upoly_is_mth_power(d, r.modulus());
}

enum class Verdict { trivial, nontrivial, undecided };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::trivial: return "TRIVIAL";
    case Verdict::nontrivial: return "NONTRIVIAL";
    case Verdict::undecided: return "UNDECIDED";
  }
  return "?";
}

// Exact on lines and pointed smooth conics; elsewhere a cluster of
// multiplicity prime to m proves nontriviality and anything else is undecided.
template <class K>
Verdict classify_residue(const ResidueClass<K>& r, Rng& rng) {
  if (r.is_one()) return Verdict::trivial;
  const K& k = r.curve().field();
  if (r.value().is_constant() && k.is_mth_power(r.value().num().leading_coefficient(), r.modulus()))
    return Verdict::trivial;
  if (r.curve().degree() <= 2 && parametrize(r.curve()))
    return is_mth_power_on_rational_curve(r) ? Verdict::trivial : Verdict::nontrivial;
  if (r.value().is_constant()) return Verdict::undecided;
  auto d = divisor_on_curve(r.value(), r.curve(), rng, false);
  return d.divisible_by(int(r.modulus())) ? Verdict::undecided : Verdict::nontrivial;
}

template <class K>
Verdict compare_residues(const ResidueClass<K>& a, const ResidueClass<K>& b, Rng& rng) {
  return classify_residue(a / b, rng);
}

}  // namespace dblbrauer
