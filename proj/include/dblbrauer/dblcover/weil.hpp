#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblbrauer/dblcover/brauer.hpp"

namespace dblbrauer {

// D_V = V(M_1k, ..., M_nk) on C as a cluster minimum, together with L.C and
// the divisors of any extra forms.
template <class K>
struct WeilData {
  Chart<K> chart;
  CurveDivisor<K> dv;
  CurveDivisor<K> lc;
  std::vector<CurveDivisor<K>> column;
  std::vector<MPoly<K>> column_minors;
  std::vector<CurveDivisor<K>> extra;
  int twist = 0;
};

template <class K>
WeilData<K> weil_data(const SymResolution<K>& r, const PlaneCurve<K>& c, Rng& rng, std::size_t col,
                      const std::vector<MPoly<K>>& extra = {}) {
  const std::size_t n = r.n();
  if (col < 1 || col > n) throw domain_error("column index out of range");
  std::vector<MPoly<K>> minors, forms;
  for (std::size_t i = 1; i <= n; ++i) {
    MPoly<K> m = minor(r.matrix, i, col);
    if (m.is_zero() || m.divisible_by(c.f())) continue;
    minors.push_back(m);
  }
  if (minors.empty()) throw domain_error("all minors of the column vanish on C: the branch curve is singular");
  forms = minors;
  forms.push_back(r.ell);
  forms.insert(forms.end(), extra.begin(), extra.end());
  auto [ch, ds] = common_chart(c, forms, rng);
  WeilData<K> w{ch, CurveDivisor<K>(c, ch), ds[minors.size()], {}, minors, {}, 0};
  w.column.assign(ds.begin(), ds.begin() + long(minors.size()));
  w.extra.assign(ds.begin() + long(minors.size()) + 1, ds.end());
  w.dv = cluster_min(w.column);
  const int x = r.e - r.partition[col - 1] - r.epsilon;
  if (x % 2) throw domain_error("e - d_k - epsilon is odd");
  w.twist = -x / 2;
  return w;
}

template <class K>
struct WeilDivisor {
  CurveDivisor<K> d;  // D_V; the divisor class is D_V + twist (L.C)
  CurveDivisor<K> lc;
  int twist = 0;
};

template <class K>
WeilDivisor<K> weil_divisor(const SymResolution<K>& r, const PlaneCurve<K>& c, Rng& rng) {
  auto w = weil_data(r, c, rng, r.n());
  return {w.dv, w.lc, w.twist};
}

struct TangencyReport {
  bool doubling = false;
  bool locus = false;
  int clusters = 0;
  bool pass() const { return doubling && locus; }
};

namespace detail {

inline std::array<ExtElem, 4> cluster_point(const Cluster<PrimeField>& cl, const ExtField& kk) {
  return {kk.from_upoly(cl.point[0]), kk.from_upoly(cl.point[1]), kk.from_upoly(cl.point[2]), kk.zero()};
}

}  // namespace detail

// v_P(M_jj) = 2 min_i v_P(M_ij) at every cluster, and every zero of M_jj on C
// is a common zero of the whole column (checked by evaluation at the cluster
// points).
template <class K>
TangencyReport tangency_check(const SymResolution<K>& r, const PlaneCurve<K>& c, std::size_t j, Rng& rng) {
  if constexpr (!is_prime_field_v<K>) {
    (void)r, (void)c, (void)j, (void)rng;
    throw unsupported("tangency check is UNDECIDED without cluster splitting (needs a prime field)");
  } else {
    TangencyReport t;
    const std::size_t n = r.n();
    if (j < 1 || j > n) throw domain_error("column index out of range");
    if (n == 1) {
      t.doubling = t.locus = true;
      return t;
    }
    const MPoly<K> mjj = minor(r.matrix, j, j);
    auto w = weil_data(r, c, rng, j, {mjj});
    const CurveDivisor<K>& djj = w.extra[0];
    t.doubling = djj == w.dv.scaled(2);
    t.clusters = int(djj.clusters().size());
    t.locus = true;
    for (auto& cl : djj.clusters()) {
      ExtField kk(cl.factor);
      auto pt = detail::cluster_point(cl, kk);
      for (auto& m : w.column_minors)
        if (!is_zero(evaluate_in(m, kk, pt))) t.locus = false;
    }
    return t;
  }
}

template <class K>
struct CompatReport {
  bool divisor_identity = false;
  bool residues_ok = false;
  std::optional<CurveDivisor<K>> lhs, rhs;
  std::size_t column = 0;
  std::string message;
  bool pass() const { return divisor_identity && residues_ok; }
};

// div_C of the residue at C against 2 D - eps (L.C), where D = D_V + twist (L.C)
// comes from the minors of column k (k = n unless overridden).
template <class K>
CompatReport<K> compatibility_check(const SymResolution<K>& r, const PlaneCurve<K>& c, Rng& rng,
                                    ResidueMode mode = ResidueMode::tame, std::optional<std::size_t> column = std::nullopt) {
  CompatReport<K> rep;
  const std::size_t n = r.n();
  rep.column = column ? *column : n;
  AUClass<K> au = brauer_class_AU(r, rng);
  auto res = residues_AU(r, c, au, rng, mode);
  rep.residues_ok = res.pass();
  if (n == 1) {
    rep.divisor_identity = r.epsilon == 0;
    rep.message = "trivial partition";
    return rep;
  }
  // residues_AU certifies that the residue at C is the class of M_nn / l^(e - d_n);
  // that representative is the one whose divisor is compared.
  auto w = weil_data(r, c, rng, rep.column, {minor(r.matrix, n, n)});
  rep.lhs = w.extra[0] - w.lc.scaled(r.e - r.partition.back());
  rep.rhs = w.dv.scaled(2) + w.lc.scaled(2 * w.twist - r.epsilon);
  rep.divisor_identity = *rep.lhs == *rep.rhs;
  rep.message = rep.divisor_identity ? "div(residue at C) = 2D - eps(L.C)" : "divisor identity fails";
  if (!rep.residues_ok) rep.message += "; residue law violated";
  return rep;
}

}  // namespace dblbrauer
