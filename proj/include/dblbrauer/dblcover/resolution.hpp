#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dblbrauer/clifford.hpp"

namespace dblbrauer {

class invalid_resolution : public error {
 public:
  explicit invalid_resolution(const std::string& what) : error("invalid resolution: " + what) {}
};

// Symmetric resolution 0 -> sum O(-a_i - eps - e) ... with deg m_ij = e - a_i - a_j - eps
// and diagonal degrees d_i = e - 2 a_i - eps summing to e.
template <class K>
struct SymResolution {
  FormMatrix<K> matrix;
  std::vector<int> twists;
  int epsilon = 0;
  int e = 0;
  std::vector<int> partition;
  MPoly<K> ell;
  MPoly<K> elltilde;
  std::vector<std::size_t> order;  // input row of each row after sorting by degree

  const K& field() const { return matrix.field(); }
  std::size_t n() const { return matrix.size(); }
  MPoly<K> det() const { return determinant(matrix); }
};

namespace detail {

template <class K>
bool proportional(const MPoly<K>& a, const MPoly<K>& b) {
  return a.make_monic() == b.make_monic();
}

}  // namespace detail

template <class K>
SymResolution<K> new_resolution(const FormMatrix<K>& m, std::vector<int> twists, int epsilon,
                                 std::optional<MPoly<K>> ell = std::nullopt,
                                 std::optional<MPoly<K>> elltilde = std::nullopt, std::optional<int> e_given = std::nullopt) {
  const K& k = m.field();
  const std::size_t n = m.size();
  if (n == 0) throw invalid_resolution("empty matrix");
  if (twists.size() != n) throw invalid_resolution("expected " + std::to_string(n) + " twists");
  if (epsilon != 0 && epsilon != 1) throw invalid_resolution("epsilon must be 0 or 1");
  for (int a : twists)
    if (a < 0) throw invalid_resolution("twists must be nonnegative");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = m.at(i, j);
      if (!x.is_zero() && !x.is_homogeneous())
        throw invalid_resolution("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not homogeneous");
      if (x.involves(Var::t)) throw invalid_resolution("entries must only involve x, y, z");
    }
  std::optional<int> parity;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = m.at(i, i);
    if (x.is_zero()) continue;
    const int p = x.total_degree() % 2;
    if (parity && *parity != p) throw invalid_resolution("diagonal degrees mix parity");
    parity = p;
  }
  const int sa = std::accumulate(twists.begin(), twists.end(), 0);
  int e;
  if (n >= 2) {
    const int num = 2 * sa + int(n) * epsilon;
    if (num % int(n - 1) != 0) throw invalid_resolution("twists and epsilon do not determine an integral degree");
    e = num / int(n - 1);
  } else {
    if (m.at(0, 0).is_zero()) throw invalid_resolution("1x1 matrix must be nonzero");
    e = m.at(0, 0).total_degree() + 2 * twists[0] + epsilon;
  }
  if (e_given && *e_given != e) throw invalid_resolution("degree e = " + std::to_string(*e_given) + " contradicts twists (e = " + std::to_string(e) + ")");
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = e - 2 * twists[i] - epsilon;
    if (d[i] <= 0) throw invalid_resolution("diagonal degree d_" + std::to_string(i + 1) + " is not positive");
  }
  if (std::accumulate(d.begin(), d.end(), 0) != e) throw invalid_resolution("diagonal degrees do not sum to e");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = m.at(i, j);
      const int want = e - twists[i] - twists[j] - epsilon;
      if (!x.is_zero() && x.total_degree() != want)
        throw invalid_resolution("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") has degree " +
                                 std::to_string(x.total_degree()) + ", expected " + std::to_string(want));
    }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
  FormMatrix<K> sorted(k, n);
  std::vector<int> st(n), sd(n);
  for (std::size_t i = 0; i < n; ++i) {
    st[i] = twists[order[i]];
    sd[i] = d[order[i]];
    for (std::size_t j = i; j < n; ++j) sorted.set(i, j, m.at(order[i], order[j]));
  }
  SymResolution<K> r{sorted, st, epsilon, e, sd,
                     ell ? *ell : MPoly<K>::variable(k, Var::z), elltilde ? *elltilde : MPoly<K>::variable(k, Var::x),
                     order};
  for (auto* l : {&r.ell, &r.elltilde})
    if (!l->is_homogeneous() || l->total_degree() != 1) throw invalid_resolution("lines must be linear forms");
  if (determinant(r.matrix).is_zero()) throw invalid_resolution("determinant is zero");
  if (detail::proportional(r.ell, r.elltilde)) throw invalid_resolution("the lines L and L~ coincide");
  return r;
}

// Twists a_i = (e - deg m_ii - eps) / 2 read off the diagonal.
template <class K>
std::vector<int> infer_twists(const FormMatrix<K>& m, int e, int epsilon) {
  std::vector<int> a;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.at(i, i).is_zero()) throw invalid_resolution("cannot infer twists from a zero diagonal entry");
    const int x = e - m.at(i, i).total_degree() - epsilon;
    if (x < 0 || x % 2) throw invalid_resolution("diagonal degree incompatible with e and epsilon");
    a.push_back(x / 2);
  }
  return a;
}

}  // namespace dblbrauer
