#pragma once

#include <vector>

#include "dblbrauer/polycore/mpoly.hpp"

namespace dblbrauer {

template <class K>
using PolyMatrix = std::vector<std::vector<MPoly<K>>>;

template <class K>
using ConstMatrix = std::vector<std::vector<typename K::element>>;

// Symmetric square matrix of polynomials.
template <class K>
class FormMatrix {
 public:
  FormMatrix(const K& k, std::size_t n) : field_(k), n_(n), e_(n * n, MPoly<K>(k)) {}
  explicit FormMatrix(const PolyMatrix<K>& rows, const K& k) : field_(k), n_(rows.size()) {
    for (auto& r : rows)
      if (r.size() != n_) throw domain_error("matrix is not square");
    for (auto& r : rows)
      for (auto& x : r) {
        if (!(x.field() == k)) throw field_mismatch();
        e_.push_back(x);
      }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!(at(i, j) == at(j, i)))
          throw domain_error("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }

  const K& field() const { return field_; }
  std::size_t size() const { return n_; }
  const MPoly<K>& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const MPoly<K>& v) {
    e_[i * n_ + j] = v;
    e_[j * n_ + i] = v;
  }
  PolyMatrix<K> rows() const {
    PolyMatrix<K> r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i].assign(e_.begin() + long(i * n_), e_.begin() + long((i + 1) * n_));
    return r;
  }
  friend bool operator==(const FormMatrix& a, const FormMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  // P^T M P for a constant matrix P.
  FormMatrix congruent(const ConstMatrix<K>& p) const {
    FormMatrix r(field_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        MPoly<K> s(field_);
        for (std::size_t a = 0; a < n_; ++a) {
          if (is_zero(p[a][i])) continue;
          MPoly<K> t(field_);
          for (std::size_t b = 0; b < n_; ++b)
            if (!is_zero(p[b][j])) t += at(a, b).scaled(p[b][j]);
          s += t.scaled(p[a][i]);
        }
        r.set(i, j, s);
      }
    return r;
  }

 private:
  K field_;
  std::size_t n_;
  std::vector<MPoly<K>> e_;
};

// Fraction-free elimination; every division is exact.
template <class K>
MPoly<K> determinant(PolyMatrix<K> m, const K& k) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly<K>::constant(k, k.one());
  for (auto& r : m)
    if (r.size() != n) throw domain_error("determinant of a non-square matrix");
  MPoly<K> prev = MPoly<K>::constant(k, k.one());
  bool negate = false;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (m[c][c].is_zero()) {
      std::size_t r = c + 1;
      while (r < n && m[r][c].is_zero()) ++r;
      if (r == n) return MPoly<K>(k);
      std::swap(m[c], m[r]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]).exact_div(prev);
      m[i][c] = MPoly<K>(k);
    }
    prev = m[c][c];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

template <class K>
MPoly<K> determinant(const FormMatrix<K>& m) { return determinant(m.rows(), m.field()); }

// Rows and columns are 1-based, as in M_ij.
template <class K>
MPoly<K> minor(const FormMatrix<K>& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  if (row < 1 || row > n || col < 1 || col > n) throw domain_error("minor index out of range");
  PolyMatrix<K> s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == row) continue;
    std::vector<MPoly<K>> r;
    for (std::size_t j = 0; j < n; ++j)
      if (j + 1 != col) r.push_back(m.at(i, j));
    s.push_back(std::move(r));
  }
  return determinant(std::move(s), m.field());
}

template <class K>
MPoly<K> principal_minor(const FormMatrix<K>& m, std::size_t i) {
  if (i < 1 || i > m.size()) throw domain_error("principal minor index out of range");
  PolyMatrix<K> s(i);
  for (std::size_t a = 0; a < i; ++a)
    for (std::size_t b = 0; b < i; ++b) s[a].push_back(m.at(a, b));
  return determinant(std::move(s), m.field());
}

}  // namespace dblbrauer
