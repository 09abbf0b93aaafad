#pragma once

#include <string>
#include <vector>

#include "dblbrauer/dblcover/weil.hpp"

namespace dblbrauer {

template <class K>
MPoly<K> random_form(const K& k, unsigned deg, Rng& rng) {
  std::vector<typename MPoly<K>::Term> ts;
  for (unsigned a = 0; a <= deg; ++a)
    for (unsigned b = 0; a + b <= deg; ++b) {
      auto c = sample_element(k, rng);
      if (!is_zero(c)) ts.emplace_back(Monomial::from_exponents({a, b, deg - a - b, 0}), c);
    }
  return MPoly<K>::from_terms(k, std::move(ts));
}

inline std::vector<int> parse_partition(const std::string& s) {
  std::vector<int> d;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find_first_of(",+", i);
    if (j == std::string::npos) j = s.size();
    const std::string tok = s.substr(i, j - i);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad partition part '" + tok + "'", i);
    d.push_back(std::stoi(tok));
    if (d.back() <= 0) throw parse_error("partition parts must be positive", i);
    i = j + 1;
  }
  if (d.empty()) throw parse_error("empty partition", 0);
  std::sort(d.rbegin(), d.rend());
  return d;
}

template <class K>
struct Fixture {
  SymResolution<K> resolution;
  BranchReport<K> branch;
  int attempts = 0;
};

// Random matrix with the degree pattern of the partition, resampled until
// det is smooth and meets L = V(z) in e distinct points away from [0:1:0].
template <class K>
Fixture<K> generate_fixture(const K& k, const std::vector<int>& parts, Rng& rng, int max_attempts = 500) {
  if (parts.empty()) throw domain_error("empty partition");
  const int e = std::accumulate(parts.begin(), parts.end(), 0);
  const int eps = ((e - parts[0]) % 2 + 2) % 2;
  std::vector<int> twists;
  for (int d : parts) {
    if ((e - d - eps) % 2) throw domain_error("partition parts must share one parity");
    twists.push_back((e - d - eps) / 2);
  }
  const std::size_t n = parts.size();
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    FormMatrix<K> m(k, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.set(i, j, random_form(k, unsigned(parts[i] + parts[j]) / 2, rng));
    if (determinant(m).is_zero()) continue;
    SymResolution<K> r = new_resolution(m, twists, eps);
    const MPoly<K> f = r.det();
    if (is_zero(f.coefficient(Monomial::variable(Var::y, unsigned(e))))) continue;
    const MPoly<K> onl = f.specialize(Var::z, k.zero());
    if (onl.is_zero() || onl.total_degree() != e || !is_squarefree(onl)) continue;
    BranchReport<K> b = branch_curve(r, rng);
    if (b.smooth != Smoothness::smooth) continue;
    return {std::move(r), std::move(b), attempt};
  }
  throw retry_exhausted("no smooth fixture found for the partition");
}

template <class K>
SymResolution<K> worked_example_resolution(const K& k, const typename K::element& a, const typename K::element& b) {
  auto v = [&](Var x, const typename K::element& c) { return MPoly<K>::variable(k, x).scaled(c); };
  PolyMatrix<K> m{{v(Var::x, a), v(Var::z, b), v(Var::y, b)},
                  {v(Var::z, b), v(Var::y, a), v(Var::x, b)},
                  {v(Var::y, b), v(Var::x, b), v(Var::z, a)}};
  return new_resolution(FormMatrix<K>(m, k), {1, 1, 1}, 0);
}

}  // namespace dblbrauer
