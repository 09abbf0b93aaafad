#pragma once

#include <optional>
#include <vector>

#include "dblbrauer/symbolalg.hpp"

namespace dblbrauer {

template <class K>
bool has_sqrt_minus_one(const K& k) {
  if constexpr (is_prime_field_v<K>) return k.has_sqrt_minus_one();
  else if constexpr (std::is_same_v<K, GaussianRationalField>) return true;
  else return false;
}

template <class K>
void require_sqrt_minus_one(const K& k) {
  if (!has_sqrt_minus_one(k)) throw domain_error("Clifford computations need sqrt(-1) in the coefficient field (" + k.tag().to_string() + ")");
}

template <class K>
ConstMatrix<K> identity_matrix(const K& k, std::size_t n) {
  ConstMatrix<K> p(n, std::vector<typename K::element>(n, k.zero()));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = k.one();
  return p;
}

template <class K>
ConstMatrix<K> const_product(const ConstMatrix<K>& a, const ConstMatrix<K>& b, const K& k) {
  const std::size_t n = a.size();
  ConstMatrix<K> r(n, std::vector<typename K::element>(n, k.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
    }
  return r;
}

namespace detail {

template <class K>
typename K::element const_det(ConstMatrix<K> m, const K& k) {
  using E = typename K::element;
  const std::size_t n = m.size();
  E d = k.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && is_zero(m[r][c])) ++r;
    if (r == n) return k.zero();
    if (r != c) {
      std::swap(m[r], m[c]);
      d = -d;
    }
    d = d * m[c][c];
    const E inv = k.one() / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      const E f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return d;
}

// P^T A P for constant matrices.
template <class K>
ConstMatrix<K> const_congruent(const ConstMatrix<K>& a, const ConstMatrix<K>& p, const K& k) {
  ConstMatrix<K> pt(p.size(), std::vector<typename K::element>(p.size(), k.zero()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) pt[i][j] = p[j][i];
  return const_product(const_product(pt, a, k), p, k);
}

template <class K>
bool leading_minors_nonzero(const ConstMatrix<K>& a, const K& k, std::size_t upto) {
  for (std::size_t i = 1; i <= upto; ++i) {
    ConstMatrix<K> s(i);
    for (std::size_t r = 0; r < i; ++r) s[r].assign(a[r].begin(), a[r].begin() + long(i));
    if (is_zero(const_det(s, k))) return false;
  }
  return true;
}

}  // namespace detail

// Principal minors of the quadratic form Q_ij = m_ij / l^deg(m_ij) after a
// constant change of basis P. The form is carried as N / l^s with
// N_ij = m_ij l^(s - deg m_ij), so minors[i-1] = det(P^T N P)_i / l^(i s).
template <class K>
struct MinorLadder {
  FormMatrix<K> matrix;
  MPoly<K> ell;
  int scale = 0;
  ConstMatrix<K> change;
  FormMatrix<K> transformed;
  std::vector<MPoly<K>> poly_minors;
  std::vector<RatFn<K>> minors;

  std::size_t size() const { return matrix.size(); }
  bool identity_change() const { return change == identity_matrix(matrix.field(), matrix.size()); }
};

namespace detail {

template <class K>
FormMatrix<K> scaled_form(const FormMatrix<K>& m, const MPoly<K>& ell, int& scale) {
  const K& k = m.field();
  const std::size_t n = m.size();
  scale = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = m.at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous()) throw domain_error("matrix entries must be forms");
      scale = std::max(scale, e.total_degree());
    }
  FormMatrix<K> r(k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const auto& e = m.at(i, j);
      r.set(i, j, e.is_zero() ? e : e * ell.pow(unsigned(scale - e.total_degree())));
    }
  return r;
}

template <class K>
ConstMatrix<K> evaluate_matrix(const FormMatrix<K>& m, const std::array<typename K::element, 4>& pt) {
  ConstMatrix<K> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i].push_back(m.at(i, j).evaluate(pt));
  return r;
}

}  // namespace detail

// Constant change of basis making every leading principal minor nonzero:
// found at a point where det does not vanish (elementary additions
// e_i -> e_i + c e_j first, then seeded random matrices) and applied to the
// whole matrix.
template <class K>
MinorLadder<K> ensure_principal_minors(const FormMatrix<K>& m, Rng& rng, std::optional<MPoly<K>> ell = std::nullopt) {
  using E = typename K::element;
  const K& k = m.field();
  const std::size_t n = m.size();
  if (n == 0) throw domain_error("empty matrix");
  MinorLadder<K> l{m, ell ? *ell : MPoly<K>::variable(k, Var::z), 0, identity_matrix(k, n), m, {}, {}};
  if (!l.ell.is_homogeneous() || l.ell.total_degree() != 1) throw domain_error("scale line must be a linear form");
  FormMatrix<K> nm = detail::scaled_form(m, l.ell, l.scale);
  MPoly<K> det = determinant(nm);
  if (det.is_zero()) throw domain_error("determinant is identically zero");
  std::array<E, 4> pt;
  for (int tries = 0;; ++tries) {
    if (tries > 256) throw retry_exhausted("no point with nonzero determinant found");
    for (auto& c : pt) c = sample_element(k, rng);
    if (!is_zero(det.evaluate(pt))) break;
  }
  const ConstMatrix<K> a = detail::evaluate_matrix(nm, pt);
  ConstMatrix<K> p = identity_matrix(k, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (detail::leading_minors_nonzero(detail::const_congruent(a, p, k), k, i + 1)) continue;
    bool fixed = false;
    for (int c = 1; c <= 2 && !fixed; ++c)
      for (std::size_t j = 0; j < n && !fixed; ++j) {
        if (j == i) continue;
        ConstMatrix<K> q = p;
        for (std::size_t r = 0; r < n; ++r) q[r][i] = q[r][i] + k.from_int(c) * p[r][j];
        if (detail::leading_minors_nonzero(detail::const_congruent(a, q, k), k, i + 1)) {
          p = q;
          fixed = true;
        }
      }
    if (!fixed) break;
  }
  if (!detail::leading_minors_nonzero(detail::const_congruent(a, p, k), k, n)) {
    bool found = false;
    for (int tries = 0; tries < 512 && !found; ++tries) {
      ConstMatrix<K> q(n);
      for (auto& r : q)
        for (std::size_t j = 0; j < n; ++j) r.push_back(sample_element(k, rng));
      if (is_zero(detail::const_det(q, k))) continue;
      if (detail::leading_minors_nonzero(detail::const_congruent(a, q, k), k, n)) {
        p = q;
        found = true;
      }
    }
    if (!found) throw retry_exhausted("no basis change with nonzero principal minors found");
  }
  l.change = p;
  l.transformed = m.congruent(p);
  FormMatrix<K> nt = nm.congruent(p);
  for (std::size_t i = 1; i <= n; ++i) {
    l.poly_minors.push_back(principal_minor(nt, i));
    if (l.poly_minors.back().is_zero()) throw domain_error("principal minor vanishes after basis change");
    l.minors.emplace_back(l.poly_minors.back(), l.ell.pow(unsigned(i * std::size_t(l.scale))));
  }
  return l;
}

template <class K>
using DiagonalForm = std::vector<RatFn<K>>;

template <class K>
DiagonalForm<K> diagonalize(const MinorLadder<K>& l) {
  DiagonalForm<K> d;
  for (std::size_t i = 0; i < l.minors.size(); ++i) d.push_back(i == 0 ? l.minors[0] : l.minors[i] / l.minors[i - 1]);
  return d;
}

// Sum over i < j of (m_i, m_j): the Clifford class for even length, the even
// Clifford class for odd length.
template <class K>
SymbolClass<K> clifford_symbols(const DiagonalForm<K>& d) {
  if (d.empty()) throw domain_error("empty diagonal form");
  const K& k = d[0].field();
  require_sqrt_minus_one(k);
  SymbolClass<K> s(k, 2);
  for (auto& a : d)
    if (a.is_zero()) throw domain_error("diagonal form has a zero entry");
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) s.push(d[i], d[j]);
  return s;
}

// Cl_0([m_1..m_n]) rewritten as Cl([-m_1 m_2, ..., -m_1 m_n]).
template <class K>
SymbolClass<K> clifford_symbols_alternate(const DiagonalForm<K>& d) {
  if (d.size() < 3 || d.size() % 2 == 0) throw domain_error("alternate construction needs odd length at least 3");
  DiagonalForm<K> e;
  for (std::size_t i = 1; i < d.size(); ++i) e.push_back(-(d[0] * d[i]));
  return clifford_symbols(e);
}

// Product of M_i^(e_(i+1) - e_(i-1)) with e_i the valuation of M_i along c.
template <class K>
ResidueClass<K> clifford_residue(const MinorLadder<K>& l, const PlaneCurve<K>& c) {
  const std::size_t n = l.minors.size();
  std::vector<int> e(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) e[i] = curve_valuation(l.minors[i - 1], c);
  ResidueClass<K> r = ResidueClass<K>::trivial(c, 2);
  for (std::size_t i = 1; i <= n; ++i) {
    const int x = e[i + 1] - e[i - 1];
    if (x) r = r * ResidueClass<K>(c, strip_curve(l.minors[i - 1], c), 2).pow(x);
  }
  return r;
}

template <class K>
std::vector<int> minor_valuations(const MinorLadder<K>& l, const PlaneCurve<K>& c) {
  std::vector<int> e;
  for (auto& m : l.minors) e.push_back(curve_valuation(m, c));
  return e;
}

// The (i, i+1) minor B of the leading (i+1) block; Desnanot-Jacobi gives
// M_(i+1) M_(i-1) + B^2 = M_i M'.
template <class K>
MPoly<K> schur_cofactor(const MinorLadder<K>& l, std::size_t i) {
  int s = 0;
  FormMatrix<K> nt = detail::scaled_form(l.matrix, l.ell, s).congruent(l.change);
  PolyMatrix<K> b;
  for (std::size_t r = 0; r <= i; ++r) {
    if (r + 1 == i) continue;
    std::vector<MPoly<K>> row;
    for (std::size_t c = 0; c <= i; ++c)
      if (c != i) row.push_back(nt.at(r, c));
    b.push_back(std::move(row));
  }
  return determinant(std::move(b), l.matrix.field());
}

// M_(i+1) M_(i-1) is a square on the curve w, a component of V(M_i).
template <class K>
bool schur_square_check(const MinorLadder<K>& l, std::size_t i, const PlaneCurve<K>& w, Rng& rng) {
  const std::size_t n = l.size();
  if (i < 1 || i + 1 > n) throw domain_error("Schur check index out of range");
  const K& k = l.matrix.field();
  const MPoly<K> one = MPoly<K>::constant(k, k.one());
  const MPoly<K>& mi = l.poly_minors[i - 1];
  if (!mi.divisible_by(w.f())) throw domain_error("curve is not a component of V(M_i)");
  const MPoly<K>& up = l.poly_minors[i];
  const MPoly<K> down = i >= 2 ? l.poly_minors[i - 2] : one;
  const MPoly<K> b = schur_cofactor(l, i);
  const MPoly<K> lhs = up * down + b * b;
  if (!lhs.divisible_by(w.f())) return false;
  if (has_sqrt_minus_one(k) && !b.divisible_by(w.f())) return true;
  const RatFn<K> v(up * down, l.ell.pow(unsigned(2 * i * std::size_t(l.scale))));
  if (curve_valuation(v, w) % 2 != 0) return false;
  Verdict verdict = classify_residue(ResidueClass<K>(w, strip_curve(v, w), 2), rng);
  if (verdict == Verdict::undecided) throw unsupported("square test on this curve is not decidable here");
  return verdict == Verdict::trivial;
}

}  // namespace dblbrauer
