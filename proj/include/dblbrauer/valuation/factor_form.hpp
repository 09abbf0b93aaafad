#pragma once

#include <vector>

#include "dblbrauer/valuation/chart.hpp"

namespace dblbrauer {

namespace detail {

// Truncated power series in x with coefficients in F_p[y].
using YSeries = std::vector<UPoly<PrimeField>>;

inline YSeries series_mul(const YSeries& a, const YSeries& b, std::size_t n) {
  YSeries r(n, UPoly<PrimeField>(a[0].field()));
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

// g = A * B mod x^n with A = a0, B = b0 mod x, A monic in y.
inline std::pair<YSeries, YSeries> hensel_split(const YSeries& g, const UPoly<PrimeField>& a0,
                                                const UPoly<PrimeField>& b0) {
  const std::size_t n = g.size();
  auto [h, s, t] = xgcd(a0, b0);
  if (h.degree() != 0) throw domain_error("Hensel lifting needs coprime factors");
  const UPoly<PrimeField> hi = UPoly<PrimeField>::constant(h.field(), h.field().one() / h[0]);
  s = s * hi;
  t = t * hi;
  YSeries a(n, UPoly<PrimeField>(g[0].field())), b = a;
  a[0] = a0;
  b[0] = b0;
  for (std::size_t k = 1; k < n; ++k) {
    UPoly<PrimeField> e = g[k];
    for (std::size_t i = 0; i <= k; ++i) e = e - a[i] * b[k - i];
    UPoly<PrimeField> da = (e * t) % a0;
    auto [q, rem] = (e - da * b0).divmod(a0);
    if (!rem.is_zero()) throw domain_error("Hensel step is not exact");
    a[k] = da;
    b[k] = q;
  }
  return {a, b};
}

}  // namespace detail

// Irreducible factors over F_p of a squarefree form in x, y, z: Hensel lifting
// of a fibre factorization in a random chart, then recombination.
inline std::vector<MPoly<PrimeField>> factor_form(const MPoly<PrimeField>& f, Rng& rng, int max_tries = 400) {
  if (f.is_zero() || !f.is_homogeneous()) throw domain_error("factor_form needs a nonzero form");
  const PrimeField& k = f.field();
  const int d = f.total_degree();
  if (d <= 1) return {f.make_monic()};
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Chart<PrimeField> ch = Chart<PrimeField>::random(k, rng);
    MPoly<PrimeField> g = ch.pull(f);
    const Fp lc = g.coefficient(Monomial::variable(Var::y, unsigned(d)));
    if (is_zero(lc)) continue;
    g = g.specialize(Var::z, k.one()).scaled(k.one() / lc);
    const std::size_t n = std::size_t(d) + 1;
    std::vector<std::vector<Fp>> raw(n, std::vector<Fp>(std::size_t(d) + 1, k.zero()));
    for (auto& [m, c] : g.terms()) raw[m.exponent(Var::x)][m.exponent(Var::y)] = c;
    detail::YSeries ser;
    for (auto& r : raw) ser.emplace_back(k, r);
    const UPoly<PrimeField>& g0 = ser[0];
    if (g0.degree() != d || gcd(g0, g0.derivative()).degree() != 0) continue;
    auto fib = univariate_factor(g0);
    if (fib.size() == 1) return {f.make_monic()};
    std::vector<detail::YSeries> lifted;
    detail::YSeries rest = ser;
    for (std::size_t i = 0; i + 1 < fib.size(); ++i) {
      UPoly<PrimeField> others = UPoly<PrimeField>::constant(k, k.one());
      for (std::size_t j = i + 1; j < fib.size(); ++j) others = others * fib[j].poly;
      auto [a, b] = detail::hensel_split(rest, fib[i].poly.monic(), others);
      lifted.push_back(std::move(a));
      rest = std::move(b);
    }
    lifted.push_back(std::move(rest));

    const Chart<PrimeField> back(k, ch.inverse());
    auto to_form = [&](const detail::YSeries& h) -> std::optional<MPoly<PrimeField>> {
      const int a = h[0].degree();
      std::vector<MPoly<PrimeField>::Term> ts;
      for (std::size_t i = 0; i < h.size(); ++i)
        for (int j = 0; j <= h[i].degree(); ++j) {
          if (is_zero(h[i][j])) continue;
          if (int(i) + j > a) return std::nullopt;
          ts.emplace_back(Monomial::from_exponents({unsigned(i), unsigned(j), unsigned(a - int(i) - j), 0}), h[i][j]);
        }
      return back.pull(MPoly<PrimeField>::from_terms(k, std::move(ts)));
    };
    std::vector<MPoly<PrimeField>> out;
    std::vector<std::size_t> live(lifted.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
    MPoly<PrimeField> left = f;
    for (std::size_t size = 1; 2 * size <= live.size();) {
      bool found = false;
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      while (true) {
        detail::YSeries h = lifted[live[pick[0]]];
        for (std::size_t i = 1; i < size; ++i) h = detail::series_mul(h, lifted[live[pick[i]]], n);
        auto cand = to_form(h);
        if (cand) {
          if (auto q = left.try_exact_div(*cand)) {
            out.push_back(cand->make_monic());
            left = std::move(*q);
            for (std::size_t i = size; i-- > 0;) live.erase(live.begin() + long(pick[i]));
            found = true;
            break;
          }
        }
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == live.size() - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
      if (!found) ++size;
    }
    if (!left.is_constant()) out.push_back(left.make_monic());
    std::sort(out.begin(), out.end(), [](const MPoly<PrimeField>& a, const MPoly<PrimeField>& b) { return mpoly_less(a, b); });
    return out;
  }
  throw retry_exhausted("no chart with a squarefree fibre for factoring");
}

}  // namespace dblbrauer
