#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dblbrauer/polycore.hpp"

namespace dblbrauer {

namespace detail {

inline ExtElem frobenius(const ExtElem& a, const ExtField& k) {
  ExtElem r = k.one(), b = a;
  for (std::uint64_t e = k.characteristic(); e; e >>= 1) {
    if (e & 1) r = r * b;
    b = b * b;
  }
  return r;
}

inline ExtElem frobenius_power(ExtElem a, const ExtField& k, int times) {
  for (int i = 0; i < times; ++i) a = frobenius(a, k);
  return a;
}

// Orbit of a under x -> x^(p^step).
inline std::vector<ExtElem> orbit(const ExtElem& a, const ExtField& k, int step) {
  std::vector<ExtElem> o{a};
  for (ExtElem b = frobenius_power(a, k, step); !(b == a); b = frobenius_power(b, k, step)) o.push_back(b);
  return o;
}

// Coefficients of prod (T - r), low degree first, leading 1 included.
inline std::vector<ExtElem> poly_from_roots(const std::vector<ExtElem>& roots, const ExtField& k) {
  std::vector<ExtElem> c{k.one()};
  for (auto& r : roots) {
    std::vector<ExtElem> n(c.size() + 1, k.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= r * c[i];
    }
    c = std::move(n);
  }
  return c;
}

inline std::uint32_t coeff_at(const ExtElem& a, std::size_t i) {
  return i < a.coefficients().size() ? a.coefficients()[i] : 0;
}

// Coordinates of v in the basis 1, b, ..., b^(m-1) of F_p(b).
inline std::vector<std::uint32_t> solve_in_powers(const ExtElem& v, const ExtElem& b, int m, const ExtField& k) {
  const std::uint64_t p = k.characteristic();
  const int d = k.degree();
  std::vector<std::vector<std::uint64_t>> a(std::size_t(d), std::vector<std::uint64_t>(std::size_t(m) + 1, 0));
  ExtElem pw = k.one();
  for (int j = 0; j < m; ++j, pw = pw * b)
    for (int i = 0; i < d; ++i) a[i][j] = coeff_at(pw, std::size_t(i));
  for (int i = 0; i < d; ++i) a[i][m] = coeff_at(v, std::size_t(i));
  auto inv = [&](std::uint64_t x) {
    std::uint64_t r = 1;
    for (std::uint64_t e = p - 2; e; e >>= 1, x = x * x % p)
      if (e & 1) r = r * x % p;
    return r;
  };
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < m && row < d; ++col) {
    int piv = row;
    while (piv < d && a[piv][col] == 0) ++piv;
    if (piv == d) continue;
    std::swap(a[piv], a[row]);
    const std::uint64_t s = inv(a[row][col]);
    for (auto& x : a[row]) x = x * s % p;
    for (int i = 0; i < d; ++i)
      if (i != row && a[i][col]) {
        const std::uint64_t f = a[i][col];
        for (int j = 0; j <= m; ++j) a[i][j] = (a[i][j] + (p - f) * a[row][j]) % p;
      }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < d; ++i)
    if (a[i][m]) throw domain_error("element is not in the subfield");
  std::vector<std::uint32_t> out(std::size_t(m), 0);
  for (int i = 0; i < row; ++i) out[std::size_t(pivot_col[i])] = std::uint32_t(a[i][m]);
  return out;
}

}  // namespace detail

// Chart-free name of the closed point of P^2 through [X:Y:Z]: the reduced lex
// basis of its ideal in the affine chart of the first nonzero coordinate.
inline std::vector<std::uint32_t> closed_point_key(std::array<ExtElem, 3> pt, const ExtField& k) {
  int i0 = 0;
  while (i0 < 3 && is_zero(pt[i0])) ++i0;
  if (i0 == 3) throw domain_error("zero vector is not a projective point");
  const ExtElem s = pt[i0].inverse();
  for (auto& v : pt) v = v * s;
  std::vector<std::uint32_t> key{std::uint32_t(i0)};
  if (i0 == 2) return key;
  const ExtElem& b = pt[i0 + 1];
  auto ob = detail::orbit(b, k, 1);
  for (auto& c : detail::poly_from_roots(ob, k)) key.push_back(detail::coeff_at(c, 0));
  if (i0 == 1) return key;
  const int d1 = int(ob.size());
  auto oc = detail::orbit(pt[2], k, d1);
  auto g = detail::poly_from_roots(oc, k);
  key.push_back(std::uint32_t(oc.size()));
  for (std::size_t j = 0; j + 1 < g.size(); ++j)
    for (auto v : detail::solve_in_powers(g[j], b, d1, k)) key.push_back(v);
  return key;
}

}  // namespace dblbrauer
