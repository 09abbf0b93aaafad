#pragma once

#include "dblbrauer/polycore/prs.hpp"
#include "dblbrauer/polycore/upoly.hpp"

namespace dblbrauer {

// Res_v(f, g) by the subresultant algorithm over the remaining variables.
template <class K>
MPoly<K> resultant(const MPoly<K>& f, const MPoly<K>& g, Var v) {
  f.check_field(g);
  if (f.is_zero() || g.is_zero()) throw domain_error("resultant of a zero polynomial");
  if (f.degree_in(v) <= 0 && g.degree_in(v) <= 0) throw domain_error("resultant: both inputs are constant in the eliminated variable");
  return prs::resultant(f.coefficients_in(v), g.coefficients_in(v), MPoly<K>(f.field()));
}

// f in the two variables (main, other) as a polynomial in main over K[other].
template <class K>
prs::Rec<UPoly<K>> as_bivariate(const MPoly<K>& f, Var main, Var other) {
  const K& k = f.field();
  std::vector<std::vector<typename K::element>> c(std::max(0, f.degree_in(main)) + 1);
  for (auto& [m, cc] : f.terms()) {
    if (m.degree() != m.exponent(main) + m.exponent(other))
      throw domain_error("polynomial involves more than two variables");
    auto& row = c[m.exponent(main)];
    if (row.size() <= m.exponent(other)) row.resize(m.exponent(other) + 1, k.zero());
    row[m.exponent(other)] = cc;
  }
  prs::Rec<UPoly<K>> out;
  for (auto& r : c) out.emplace_back(k, std::move(r));
  prs::trim(out);
  return out;
}

// Res_main(f, g) for bivariate f, g, returned as a univariate polynomial in other.
template <class K>
UPoly<K> bivariate_resultant(const MPoly<K>& f, const MPoly<K>& g, Var main, Var other) {
  return prs::resultant(as_bivariate(f, main, other), as_bivariate(g, main, other), UPoly<K>(f.field()));
}

}  // namespace dblbrauer
