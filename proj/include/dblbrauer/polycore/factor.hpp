#pragma once

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

#include "dblbrauer/polycore/upoly.hpp"

namespace dblbrauer {

template <class K>
struct Factor {
  UPoly<K> poly;
  int multiplicity;
};

inline bool coeff_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }
inline bool coeff_less(const mpq_class& a, const mpq_class& b) { return a < b; }
inline bool coeff_less(const QI& a, const QI& b) { return a.re < b.re || (a.re == b.re && a.im < b.im); }

// Degree first, then coefficients from the top.
template <class K>
bool upoly_less(const UPoly<K>& a, const UPoly<K>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (coeff_less(a[i], b[i])) return true;
    if (coeff_less(b[i], a[i])) return false;
  }
  return false;
}

namespace detail {

// In F_p[x], f' = 0 means f = g(x^p) = g(x)^p.
inline UPoly<PrimeField> pth_root(const UPoly<PrimeField>& f) {
  const std::uint32_t p = f.field().characteristic();
  std::vector<Fp> c;
  for (int i = 0; i <= f.degree(); i += int(p)) c.push_back(f[i]);
  return UPoly<PrimeField>(f.field(), std::move(c));
}

}  // namespace detail

// Squarefree decomposition of a monic polynomial: pieces are squarefree,
// pairwise coprime, and f = prod piece^multiplicity.
template <class K>
std::vector<Factor<K>> squarefree_decomposition(const UPoly<K>& f0) {
  std::vector<Factor<K>> out;
  if (f0.is_zero()) throw domain_error("squarefree decomposition of zero");
  UPoly<K> f = f0.monic();
  if (f.degree() <= 0) return out;
  UPoly<K> g = f.derivative();
  if (g.is_zero()) {
    if constexpr (is_prime_field_v<K>) {
      const int p = int(f.field().characteristic());
      for (auto& [h, e] : squarefree_decomposition(detail::pth_root(f))) out.push_back({h, e * p});
      return out;
    } else {
      throw domain_error("zero derivative of a nonconstant polynomial");
    }
  }
  UPoly<K> c = gcd(f, g);
  UPoly<K> w = f.exact_div(c);
  int i = 1;
  while (w.degree() > 0) {
    UPoly<K> y = gcd(w, c);
    UPoly<K> z = w.exact_div(y);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = c.exact_div(y);
  }
  if (c.degree() > 0) {
    if constexpr (is_prime_field_v<K>) {
      const int p = int(c.field().characteristic());
      for (auto& [h, e] : squarefree_decomposition(detail::pth_root(c))) out.push_back({h, e * p});
    } else {
      throw domain_error("inconsistent squarefree decomposition");
    }
  }
  return out;
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
  UPoly<K> s = UPoly<K>::constant(f.field(), f.field().one());
  for (auto& [h, e] : squarefree_decomposition(f)) s = s * h;
  return s;
}

// Distinct-degree factorization of a squarefree monic polynomial over F_p.
inline std::vector<Factor<PrimeField>> distinct_degree_factorization(UPoly<PrimeField> f) {
  const PrimeField& k = f.field();
  std::vector<Factor<PrimeField>> out;
  const UPoly<PrimeField> x = UPoly<PrimeField>::x(k);
  const mpz_class q = k.order();
  UPoly<PrimeField> h = x % f;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, q, f);
    UPoly<PrimeField> g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.push_back({g, i});
      f = f.exact_div(g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
inline void equal_degree_split(const UPoly<PrimeField>& f, int d, Rng& rng, std::vector<UPoly<PrimeField>>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const PrimeField& k = f.field();
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), k.order(), unsigned(d));
  e = (e - 1) / 2;
  const UPoly<PrimeField> one = UPoly<PrimeField>::constant(k, k.one());
  while (true) {
    std::vector<Fp> c(f.degree());
    for (auto& v : c) v = k.random(rng);
    UPoly<PrimeField> a(k, std::move(c));
    if (a.degree() <= 0) continue;
    UPoly<PrimeField> g = gcd(a, f);
    if (g.degree() <= 0) g = gcd(powmod(a, e, f) - one, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f.exact_div(g), d, rng, out);
      return;
    }
  }
}

// Complete factorization over F_p into monic irreducibles, sorted.
inline std::vector<Factor<PrimeField>> univariate_factor(const UPoly<PrimeField>& f) {
  if (f.is_zero()) throw domain_error("factorization of the zero polynomial");
  std::vector<Factor<PrimeField>> out;
  Rng rng(0x9e3779b97f4a7c15ull ^ std::uint64_t(f.degree()));
  for (auto& [s, mult] : squarefree_decomposition(f)) {
    for (auto& [g, d] : distinct_degree_factorization(s)) {
      std::vector<UPoly<PrimeField>> pieces;
      equal_degree_split(g, d, rng, pieces);
      for (auto& p : pieces) out.push_back({p, mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (upoly_less(a.poly, b.poly)) return true;
    if (upoly_less(b.poly, a.poly)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

inline bool is_irreducible(const UPoly<PrimeField>& f) {
  if (f.degree() <= 0) return false;
  auto fs = univariate_factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace dblbrauer
