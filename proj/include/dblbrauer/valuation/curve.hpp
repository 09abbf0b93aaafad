#pragma once

#include <optional>
#include <string>
#include <utility>

#include "dblbrauer/polycore.hpp"
#include "dblbrauer/valuation/factor_form.hpp"

namespace dblbrauer {

enum class Trust { certified, asserted };

struct Certificate {
  Trust trust = Trust::asserted;
  int lines_tried = 0;
  std::string method;
};

// Substitute x_i -> a_i * t + b_i, giving a univariate polynomial in t.
template <class K>
UPoly<K> restrict_to_line(const MPoly<K>& f, const std::array<typename K::element, 3>& a,
                          const std::array<typename K::element, 3>& b) {
  const K& k = f.field();
  const MPoly<K> t = MPoly<K>::variable(k, Var::t);
  std::array<MPoly<K>, 3> im;
  for (int i = 0; i < 3; ++i) im[i] = t.scaled(a[i]) + MPoly<K>::constant(k, b[i]);
  return UPoly<K>::from_mpoly(f.substitute({&im[0], &im[1], &im[2], nullptr}), Var::t);
}

namespace detail {

inline std::optional<Fp> reduce_coeff(const Fp& c, const PrimeField&, Fp) { return c; }
inline std::optional<Fp> reduce_coeff(const mpq_class& c, const PrimeField& k, Fp) {
  if (k.from_mpz(c.get_den()).value() == 0) return std::nullopt;
  return k.from_rational(c.get_num(), c.get_den());
}
inline std::optional<Fp> reduce_coeff(const QI& c, const PrimeField& k, Fp i) {
  auto re = reduce_coeff(c.re, k, i), im = reduce_coeff(c.im, k, i);
  if (!re || !im) return std::nullopt;
  return *re + *im * i;
}

// Image modulo a degree-one prime; empty when a coefficient has bad reduction.
template <class K>
std::optional<MPoly<PrimeField>> reduce_mod(const MPoly<K>& f, const PrimeField& k) {
  Fp i = k.has_sqrt_minus_one() ? k.sqrt_minus_one() : k.zero();
  std::vector<MPoly<PrimeField>::Term> ts;
  for (auto& [m, c] : f.terms()) {
    auto r = reduce_coeff(c, k, i);
    if (!r) return std::nullopt;
    ts.emplace_back(m, *r);
  }
  return MPoly<PrimeField>::from_terms(k, std::move(ts));
}

}  // namespace detail

// A reduced plane curve V(f), f homogeneous, squarefree and made monic.
template <class K>
class PlaneCurve {
 public:
  // Irreducibility test by restriction to random lines: an irreducible
  // restriction of full degree proves f irreducible. Over F_p a full
  // factorization decides the remaining cases.
  static PlaneCurve certify(const MPoly<K>& f, Rng& rng, int max_lines = 40) {
    PlaneCurve c(f);
    c.cert_ = {Trust::asserted, 0, "no irreducible line restriction found"};
    if (c.degree_ == 1) {
      c.cert_ = {Trust::certified, 0, "linear"};
      return c;
    }
    std::vector<PrimeField> images;
    if constexpr (is_prime_field_v<K>) images.push_back(f.field());
    else images = {PrimeField(10009), PrimeField(10037), PrimeField(10069)};
    for (auto& fp : images) {
      auto g = detail::reduce_mod(c.f_, fp);
      if (!g || g->total_degree() != int(c.degree_)) continue;
      for (int i = 0; i < max_lines; ++i) {
        std::array<Fp, 3> a, b;
        for (auto& v : a) v = fp.random(rng);
        for (auto& v : b) v = fp.random(rng);
        ++c.cert_.lines_tried;
        UPoly<PrimeField> r = restrict_to_line(*g, a, b);
        if (r.degree() != int(c.degree_)) continue;
        if (is_irreducible(r)) {
          c.cert_.trust = Trust::certified;
          c.cert_.method = "irreducible restriction to a line over F_" + std::to_string(fp.characteristic());
          return c;
        }
      }
      if constexpr (is_prime_field_v<K>) break;
    }
    if constexpr (is_prime_field_v<K>) {
      if (factor_form(c.f_, rng).size() == 1) c.cert_ = {Trust::certified, c.cert_.lines_tried, "fibre factorization over F_p"};
    }
    return c;
  }
  static PlaneCurve asserted(const MPoly<K>& f, std::string why = "asserted by caller") {
    PlaneCurve c(f);
    c.cert_ = {Trust::asserted, 0, std::move(why)};
    if (c.degree_ == 1) c.cert_ = {Trust::certified, 0, "linear"};
    return c;
  }
  static PlaneCurve certified_by(const MPoly<K>& f, std::string why) {
    PlaneCurve c(f);
    c.cert_ = {Trust::certified, 0, std::move(why)};
    return c;
  }

  const MPoly<K>& f() const { return f_; }
  unsigned degree() const { return degree_; }
  const K& field() const { return f_.field(); }
  const Certificate& certificate() const { return cert_; }
  bool certified() const { return cert_.trust == Trust::certified; }

  friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.f_ == b.f_; }

 private:
  explicit PlaneCurve(const MPoly<K>& f) : f_(f.make_monic()) {
    if (f.is_zero() || f.is_constant()) throw domain_error("curve equation must be a nonconstant form");
    if (!f.is_homogeneous()) throw domain_error("curve equation must be homogeneous");
    if (f.involves(Var::t)) throw domain_error("curve equation must only involve x, y, z");
    degree_ = unsigned(f.total_degree());
    if (degree_ > 1 && !is_squarefree(f_)) throw domain_error("curve equation is not squarefree");
  }

  MPoly<K> f_;
  unsigned degree_ = 0;
  Certificate cert_;
};

}  // namespace dblbrauer
