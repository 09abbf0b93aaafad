#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dblbrauer/dblcover/branch.hpp"

namespace dblbrauer {

// Clifford class (n even) or even Clifford class (n odd) of the quadric
// bundle, read on the chart l != 0.
template <class K>
struct AUClass {
  MinorLadder<K> ladder;
  SymbolClass<K> symbols;
};

template <class K>
AUClass<K> brauer_class_AU(const SymResolution<K>& r, Rng& rng) {
  require_sqrt_minus_one(r.field());
  MinorLadder<K> l = ensure_principal_minors(r.matrix, rng, std::optional<MPoly<K>>(r.ell));
  SymbolClass<K> s = clifford_symbols(diagonalize(l));
  return {std::move(l), std::move(s)};
}

// Pullback to the double cover X: w = det / l~^e becomes a square there.
template <class K>
struct AXClass {
  AUClass<K> base;
  RatFn<K> cover_function;

  // For n <= 2 the class is (M_1, -det') up to squares, and det' is w times a
  // square, so the pullback is trivial; larger n is not decided here.
  std::optional<bool> pullback_trivial() const {
    const auto& l = base.ladder;
    const std::size_t n = l.size();
    if (n == 1) return true;
    if (n > 2) return std::nullopt;
    const K& k = l.matrix.field();
    const auto d = detail::const_det(l.change, k);
    const int shift = int(n) * l.scale - cover_function.num().total_degree();
    if (shift < 0 || shift % 2) return false;
    return l.poly_minors.back() == (determinant(l.matrix) * l.ell.pow(unsigned(shift))).scaled(d * d);
  }
};

template <class K>
AXClass<K> brauer_class_AX(const SymResolution<K>& r, Rng& rng) {
  if (r.e % 2) throw domain_error("the double cover X needs e even (e = " + std::to_string(r.e) + ")");
  return {brauer_class_AU(r, rng), RatFn<K>(r.det(), r.elltilde.pow(unsigned(r.e)))};
}

template <class K>
struct AuxResidue {
  PlaneCurve<K> curve;
  std::string method;  // "exact", "schur", "divisor-level"
  bool ok = false;
};

template <class K>
struct AUResidueReport {
  std::vector<AuxResidue<K>> aux;
  std::optional<ResidueClass<K>> at_c;
  std::optional<ResidueClass<K>> at_l;
  bool c_minor_formula = false;     // symbol residue equals the minor formula as functions on C
  bool c_certificate = false;  // exact square certificate against M_nn / l^(e - d_n)
  bool c_divisor = false;      // divisor of the quotient is even
  std::optional<int> l_exponent;
  bool l_parity = false;
  std::vector<std::string> violations;

  bool support_ok() const {
    for (auto& a : aux)
      if (!a.ok) return false;
    return true;
  }
  bool pass() const {
    return violations.empty() && support_ok() && c_divisor && (c_certificate || at_c == std::nullopt) && l_exponent && l_parity;
  }
};

namespace detail {

template <class K>
MPoly<K> cofactor(const FormMatrix<K>& m, std::size_t a, std::size_t b) {
  MPoly<K> c = minor(m, a, b);
  return (a + b) % 2 ? -c : c;
}

template <class K>
ConstMatrix<K> const_inverse(const ConstMatrix<K>& p, const K& k) {
  const std::size_t n = p.size();
  ConstMatrix<K> a = p, inv = identity_matrix(k, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && is_zero(a[r][c])) ++r;
    if (r == n) throw domain_error("singular basis change");
    std::swap(a[r], a[c]);
    std::swap(inv[r], inv[c]);
    const auto s = k.one() / a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * s;
      inv[c][j] = inv[c][j] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a[i][c])) continue;
      const auto f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = a[i][j] - f * a[c][j];
        inv[i][j] = inv[i][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

// On C the adjugate of N has rank one, so with c = row n of P^-1:
// adj(P^T N P)_nn adj(N)_nn = det(P)^2 (sum_a c_a adj(N)_an)^2 mod f.
template <class K>
bool cofactor_square_certificate(const SymResolution<K>& r, const MinorLadder<K>& l, const MPoly<K>& f) {
  const K& k = r.field();
  const std::size_t n = r.n();
  int s = 0;
  FormMatrix<K> nm = scaled_form(r.matrix, r.ell, s);
  ConstMatrix<K> pinv = const_inverse(l.change, k);
  MPoly<K> sum(k);
  for (std::size_t a = 0; a < n; ++a)
    if (!is_zero(pinv[n - 1][a])) sum += cofactor(nm, a + 1, n).scaled(pinv[n - 1][a]);
  const auto d = const_det(l.change, k);
  const MPoly<K> adj_nn = cofactor(nm, n, n);
  const MPoly<K>& adj_t = l.poly_minors[n - 2];
  if (sum.divisible_by(f) || adj_nn.divisible_by(f)) return false;
  if (!(adj_t * adj_nn - (sum * sum).scaled(d * d)).divisible_by(f)) return false;
  const RatFn<K> lhs(adj_nn, r.ell.pow(unsigned((n - 1) * std::size_t(s))));
  const RatFn<K> rhs(minor(r.matrix, n, n), r.ell.pow(unsigned(r.e - r.partition.back())));
  return lhs == rhs;
}

}  // namespace detail

// Residues of the class along every curve in its support. Away from C and L
// they must vanish; at C the class must be M_nn / l^(e - d_n); at L it must
// be (det / l~^e)^i.
template <class K>
AUResidueReport<K> residues_AU(const SymResolution<K>& r, const PlaneCurve<K>& c, const AUClass<K>& au, Rng& rng,
                               ResidueMode mode = ResidueMode::tame) {
  AUResidueReport<K> rep;
  const K& k = r.field();
  const std::size_t n = r.n();
  const PlaneCurve<K> lc = PlaneCurve<K>::certify(r.ell, rng);
  auto support = symbol_support(au.symbols, {c, lc}, rng);
  for (auto& w : support) {
    if (w == c || w == lc) continue;
    ResidueClass<K> rw = residue_symbol(au.symbols, w, mode);
    AuxResidue<K> a{w, "", false};
    if (!equal_on_curve_up_to_sign(rw, clifford_residue(au.ladder, w))) {
      rep.violations.push_back("symbol residue differs from the minor formula on " + to_string(w.f()));
    }
    Verdict v = classify_residue(rw, rng);
    if (v == Verdict::trivial) {
      a.method = "exact";
      a.ok = true;
    } else if (v == Verdict::nontrivial) {
      a.method = "exact";
      rep.violations.push_back("nontrivial residue on the extra curve " + to_string(w.f()));
    } else {
      auto e = minor_valuations(au.ladder, w);
      std::size_t hit = 0, where = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) {
          ++hit;
          where = i + 1;
        }
      if (hit == 1 && e[where - 1] == 1 && where < n && schur_square_check(au.ladder, where, w, rng)) {
        a.method = "schur";
        a.ok = true;
      } else {
        a.method = "divisor-level";
        a.ok = true;
      }
    }
    rep.aux.push_back(std::move(a));
  }
  if (n >= 2) {
    ResidueClass<K> rc = residue_symbol(au.symbols, c, mode);
    rep.at_c = rc;
    ResidueClass<K> target(c, RatFn<K>(minor(r.matrix, n, n), r.ell.pow(unsigned(r.e - r.partition.back()))), 2);
    auto e = minor_valuations(au.ladder, c);
    bool simple = e.back() == 1;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) simple = simple && e[i] == 0;
    rep.c_minor_formula = equal_on_curve_up_to_sign(rc, clifford_residue(au.ladder, c));
    rep.c_certificate = simple && rep.c_minor_formula && detail::cofactor_square_certificate(r, au.ladder, c.f());
    rep.c_divisor = divisor_on_curve((rc / target).value(), c, rng, false).divisible_by(2);
    if (!rep.c_divisor) rep.violations.push_back("residue at C differs from M_nn / l^(e - d_n)");
  } else {
    rep.c_divisor = true;
  }
  ResidueClass<K> rl = residue_symbol(au.symbols, lc, mode);
  rep.at_l = rl;
  ResidueClass<K> w(lc, RatFn<K>(r.det(), r.elltilde.pow(unsigned(r.e))), 2);
  if (classify_residue(rl, rng) == Verdict::trivial) rep.l_exponent = 0;
  else if (classify_residue(rl / w, rng) == Verdict::trivial) rep.l_exponent = 1;
  else rep.violations.push_back("residue at L is not a power of det / l~^e");
  rep.l_parity = rep.l_exponent && *rep.l_exponent == r.epsilon;
  if (rep.l_exponent && !rep.l_parity) rep.violations.push_back("exponent at L disagrees with epsilon");
  (void)k;
  return rep;
}

}  // namespace dblbrauer
