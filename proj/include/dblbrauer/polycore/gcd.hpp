#pragma once

#include <algorithm>
#include <vector>

#include "dblbrauer/polycore/factor.hpp"
#include "dblbrauer/polycore/prs.hpp"

namespace dblbrauer {

inline Fp sample_element(const PrimeField& k, Rng& rng) { return k.random(rng); }
inline mpq_class sample_element(const RationalField& k, Rng& rng) { return k.from_int(std::int64_t(rng() % 61) - 30); }
inline QI sample_element(const GaussianRationalField&, Rng& rng) {
  return {mpq_class(long(rng() % 61) - 30), mpq_class(long(rng() % 7) - 3)};
}

template <class K>
bool mpoly_less(const MPoly<K>& a, const MPoly<K>& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ta = a.terms(), tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (ta[i].first != tb[i].first) return ta[i].first > tb[i].first;
    if (coeff_less(ta[i].second, tb[i].second)) return true;
    if (coeff_less(tb[i].second, ta[i].second)) return false;
  }
  return ta.size() < tb.size();
}

template <class K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b);

namespace detail {

template <class K>
MPoly<K> content_in(const MPoly<K>& a, Var v) {
  MPoly<K> g(a.field());
  for (auto& c : a.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// gcd of two polynomials that are primitive with respect to v and both involve v.
template <class K>
MPoly<K> primitive_gcd(const MPoly<K>& a, const MPoly<K>& b, Var v) {
  const K& k = a.field();
  const MPoly<K> one = MPoly<K>::constant(k, k.one());
  const unsigned others = (a.var_mask() | b.var_mask()) & ~(1u << unsigned(v));
  if (others == 0) {
    auto g = gcd(UPoly<K>::from_mpoly(a, v), UPoly<K>::from_mpoly(b, v));
    return g.to_mpoly(v);
  }
  Rng rng(0x243f6a8885a308d3ull + a.size() * 131 + b.size());
  const MPoly<K> la = a.leading_coefficient_in(v), lb = b.leading_coefficient_in(v);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::array<typename K::element, 4> pt;
    for (auto& c : pt) c = sample_element(k, rng);
    auto eval_others = [&](const MPoly<K>& p) {
      MPoly<K> q = p;
      for (Var w : all_vars)
        if (w != v && ((others >> unsigned(w)) & 1u)) q = q.specialize(w, pt[unsigned(w)]);
      return q;
    };
    if (eval_others(la).is_zero() || eval_others(lb).is_zero()) continue;
    auto g = gcd(UPoly<K>::from_mpoly(eval_others(a), v), UPoly<K>::from_mpoly(eval_others(b), v));
    if (g.degree() == 0) return one;
    if (g.degree() == b.degree_in(v) && a.divisible_by(b)) return b.make_monic();
    if (g.degree() == a.degree_in(v) && b.divisible_by(a)) return a.make_monic();
    break;
  }
  auto last = prs::subresultant_last(a.coefficients_in(v), b.coefficients_in(v));
  MPoly<K> g = MPoly<K>::from_coefficients(k, v, last);
  if (g.degree_in(v) <= 0) return one;
  return g.exact_div(content_in(g, v)).make_monic();
}

}  // namespace detail

// Greatest common divisor, normalized monic in the graded-lex leading term.
template <class K>
MPoly<K> gcd(const MPoly<K>& a, const MPoly<K>& b) {
  a.check_field(b);
  const K& k = a.field();
  if (a.is_zero()) return b.make_monic();
  if (b.is_zero()) return a.make_monic();
  const MPoly<K> one = MPoly<K>::constant(k, k.one());
  if (a.is_constant() || b.is_constant()) return one;
  const unsigned ma = a.var_mask(), mb = b.var_mask();
  for (Var v : all_vars) {
    const unsigned bit = 1u << unsigned(v);
    if ((ma & bit) && !(mb & bit)) return gcd(detail::content_in(a, v), b);
    if ((mb & bit) && !(ma & bit)) return gcd(a, detail::content_in(b, v));
  }
  Var v = Var::x;
  int best = -1;
  for (Var w : all_vars) {
    if (!((ma >> unsigned(w)) & 1u)) continue;
    int d = std::max(a.degree_in(w), b.degree_in(w));
    if (best < 0 || d < best) {
      best = d;
      v = w;
    }
  }
  MPoly<K> ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  MPoly<K> gc = gcd(ca, cb);
  MPoly<K> gp = detail::primitive_gcd(a.exact_div(ca), b.exact_div(cb), v);
  return (gc * gp).make_monic();
}

template <class K>
MPoly<K> lcm(const MPoly<K>& a, const MPoly<K>& b) {
  return (a * b).exact_div(gcd(a, b)).make_monic();
}

template <class K>
bool is_squarefree(const MPoly<K>& f) {
  if (f.is_zero()) return false;
  MPoly<K> g = f;
  for (Var v : all_vars) {
    if (!f.involves(v)) continue;
    g = gcd(g, f.derivative(v));
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

// Over F_p a polynomial with all partial derivatives zero is a p-th power.
inline MPoly<PrimeField> pth_root(const MPoly<PrimeField>& f) {
  const unsigned p = f.field().characteristic();
  std::vector<MPoly<PrimeField>::Term> ts;
  for (auto& [m, c] : f.terms()) {
    auto e = m.exponents();
    for (auto& x : e) x /= p;
    ts.emplace_back(Monomial::from_exponents(e), c);
  }
  return MPoly<PrimeField>::from_terms(f.field(), std::move(ts));
}

// Pairwise coprime squarefree monic polynomials such that every nonzero input is
// a constant times a product of their powers. Sorted deterministically.
template <class K>
std::vector<MPoly<K>> coprime_base(const std::vector<MPoly<K>>& inputs) {
  std::vector<MPoly<K>> base, work;
  for (auto& p : inputs)
    if (!p.is_zero() && !p.is_constant()) work.push_back(p.make_monic());
  while (!work.empty()) {
    MPoly<K> p = std::move(work.back());
    work.pop_back();
    if (p.is_constant()) continue;
    bool split = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (base[i] == p) {
        split = true;
        break;
      }
      MPoly<K> g = gcd(p, base[i]);
      if (g.is_constant()) continue;
      MPoly<K> b = base[i];
      base.erase(base.begin() + long(i));
      work.push_back(g);
      work.push_back(b.exact_div(g).make_monic());
      work.push_back(p.exact_div(g).make_monic());
      split = true;
      break;
    }
    if (split) continue;
    bool all_zero = true;
    for (Var v : all_vars) {
      if (!p.involves(v)) continue;
      MPoly<K> d = p.derivative(v);
      if (d.is_zero()) continue;
      all_zero = false;
      MPoly<K> g = gcd(p, d);
      if (!g.is_constant()) {
        work.push_back(g);
        work.push_back(p.exact_div(g).make_monic());
        split = true;
        break;
      }
    }
    if (split) continue;
    if (all_zero) {
      if constexpr (is_prime_field_v<K>) {
        work.push_back(pth_root(p).make_monic());
        continue;
      } else {
        throw domain_error("nonconstant polynomial with vanishing derivatives");
      }
    }
    base.push_back(std::move(p));
  }
  std::sort(base.begin(), base.end(), [](const MPoly<K>& a, const MPoly<K>& b) { return mpoly_less(a, b); });
  return base;
}

// Exponents of p along a coprime base plus the leftover constant factor.
template <class K>
std::pair<typename K::element, std::vector<int>> factor_over_base(MPoly<K> p, const std::vector<MPoly<K>>& base) {
  std::vector<int> e(base.size(), 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (true) {
      auto q = p.try_exact_div(base[i]);
      if (!q) break;
      p = std::move(*q);
      ++e[i];
    }
  }
  if (!p.is_constant() || p.is_zero()) throw domain_error("polynomial does not factor over the given base");
  return {p.leading_coefficient(), e};
}

}  // namespace dblbrauer
