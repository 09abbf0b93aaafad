#pragma once

#include <optional>
#include <vector>

#include "dblbrauer/valuation.hpp"

namespace dblbrauer {

enum class ResidueMode { tame, paper };

inline const char* mode_name(ResidueMode m) { return m == ResidueMode::tame ? "tame" : "paper"; }

template <class K>
bool ratfn_less(const RatFn<K>& a, const RatFn<K>& b) {
  if (mpoly_less(a.num(), b.num())) return true;
  if (mpoly_less(b.num(), a.num())) return false;
  return mpoly_less(a.den(), b.den());
}

// Functions on the plane are kept as quotients of forms of equal degree;
// anything else is read in the chart z = 1 and homogenized.
template <class K>
RatFn<K> to_plane_function(const RatFn<K>& h) {
  if (h.is_zero()) throw domain_error("symbol entries must be nonzero");
  auto [n, d] = projective_parts(h);
  return RatFn<K>(n, d);
}

template <class K>
struct SymbolTerm {
  RatFn<K> a, b;
  unsigned coeff = 1;
};

// Formal sum of m-symbols sum c_k (a_k, b_k); the empty sum is the trivial class.
template <class K>
class SymbolClass {
 public:
  SymbolClass(const K& k, unsigned m) : field_(k), m_(m) {
    if (m < 2) throw domain_error("symbol modulus must be at least 2");
    if (!k.has_root_of_unity(m)) throw domain_error("field has no primitive root of unity of order " + std::to_string(m));
  }

  const K& field() const { return field_; }
  unsigned modulus() const { return m_; }
  const std::vector<SymbolTerm<K>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void push(RatFn<K> a, RatFn<K> b, long long coeff = 1) {
    a = to_plane_function(a);
    b = to_plane_function(b);
    long long c = ((coeff % long(m_)) + m_) % m_;
    if (c) terms_.push_back({std::move(a), std::move(b), unsigned(c)});
  }

 private:
  K field_;
  unsigned m_;
  std::vector<SymbolTerm<K>> terms_;
};

template <class K>
SymbolClass<K> symbol(const RatFn<K>& a, const RatFn<K>& b, unsigned m) {
  SymbolClass<K> s(a.field(), m);
  s.push(a, b);
  return s;
}

template <class K>
SymbolClass<K> add(const SymbolClass<K>& s1, const SymbolClass<K>& s2) {
  if (s1.modulus() != s2.modulus()) throw domain_error("symbol classes have different moduli");
  SymbolClass<K> r = s1;
  for (auto& t : s2.terms()) r.push(t.a, t.b, t.coeff);
  return r;
}

template <class K>
SymbolClass<K> scaled(const SymbolClass<K>& s, long long k) {
  SymbolClass<K> r(s.field(), s.modulus());
  for (auto& t : s.terms()) r.push(t.a, t.b, (long long)t.coeff * k);
  return r;
}

template <class K>
SymbolClass<K> negate(const SymbolClass<K>& s) {
  return scaled(s, -1);
}

namespace detail {

// b == (-a)^n for some small n, including n = 0 and negative n.
template <class K>
bool is_power_of_negative(const RatFn<K>& a, const RatFn<K>& b, unsigned m) {
  const RatFn<K> na = -a;
  RatFn<K> p = RatFn<K>::one(a.field()), q = p;
  for (unsigned n = 0; n <= 2 * m; ++n) {
    if (b == p || b == q) return true;
    p = p * na;
    q = q / na;
  }
  return false;
}

template <class K>
bool drop_term(const SymbolTerm<K>& t, unsigned m) {
  return t.coeff == 0 || t.a.is_one() || t.b.is_one() || is_power_of_negative(t.a, t.b, m) ||
         is_power_of_negative(t.b, t.a, m);
}

}  // namespace detail

// Relation-based rewriting run to a fixpoint: antisymmetry puts the smaller
// entry first, bilinearity merges terms sharing a slot, and (a, (-a)^n) and
// 1-entries are deleted.
template <class K>
SymbolClass<K> simplify(const SymbolClass<K>& s) {
  const unsigned m = s.modulus();
  std::vector<SymbolTerm<K>> ts = s.terms();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<SymbolTerm<K>> next;
    for (auto t : ts) {
      t.coeff %= m;
      if (detail::drop_term(t, m)) {
        changed = true;
        continue;
      }
      if (ratfn_less(t.b, t.a)) {
        std::swap(t.a, t.b);
        t.coeff = (m - t.coeff) % m;
        changed = true;
      }
      next.push_back(std::move(t));
    }
    std::sort(next.begin(), next.end(), [](const SymbolTerm<K>& x, const SymbolTerm<K>& y) {
      if (ratfn_less(x.a, y.a)) return true;
      if (ratfn_less(y.a, x.a)) return false;
      if (ratfn_less(x.b, y.b)) return true;
      if (ratfn_less(y.b, x.b)) return false;
      return x.coeff < y.coeff;
    });
    ts.clear();
    for (auto& t : next) {
      if (!ts.empty()) {
        auto& u = ts.back();
        if (u.a == t.a && u.b == t.b) {
          u.coeff = (u.coeff + t.coeff) % m;
          changed = true;
          continue;
        }
        if (u.a == t.a) {
          if (u.coeff == t.coeff) u.b = u.b * t.b;
          else {
            u.b = u.b.pow(int(u.coeff)) * t.b.pow(int(t.coeff));
            u.coeff = 1;
          }
          changed = true;
          continue;
        }
        if (u.b == t.b) {
          if (u.coeff == t.coeff) u.a = u.a * t.a;
          else {
            u.a = u.a.pow(int(u.coeff)) * t.a.pow(int(t.coeff));
            u.coeff = 1;
          }
          changed = true;
          continue;
        }
      }
      ts.push_back(t);
    }
  }
  SymbolClass<K> r(s.field(), m);
  for (auto& t : ts) r.push(t.a, t.b, t.coeff);
  return r;
}

// Residue along c: the product over terms of (sign * a^v(b) / b^v(a))^coeff,
// with sign = (-1)^(v(a) v(b)) in tame mode and 1 in paper mode.
template <class K>
ResidueClass<K> residue_symbol(const SymbolClass<K>& s, const PlaneCurve<K>& c, ResidueMode mode = ResidueMode::tame) {
  const unsigned m = s.modulus();
  const K& k = s.field();
  ResidueClass<K> r = ResidueClass<K>::trivial(c, m);
  for (auto& t : s.terms()) {
    const int va = curve_valuation(t.a, c), vb = curve_valuation(t.b, c);
    if (va == 0 && vb == 0) continue;
    ResidueClass<K> term = ResidueClass<K>(c, strip_curve(t.a, c), m).pow(vb) *
                           ResidueClass<K>(c, strip_curve(t.b, c), m).pow(-va);
    if (mode == ResidueMode::tame && (va * vb) % 2 != 0)
      term = term * ResidueClass<K>(c, RatFn<K>::constant(k, -k.one()), m);
    r = r * term.pow(int(t.coeff));
  }
  return r;
}

template <class K>
Verdict is_unramified(const SymbolClass<K>& s, const PlaneCurve<K>& c, Rng& rng, ResidueMode mode = ResidueMode::tame) {
  return classify_residue(residue_symbol(s, c, mode), rng);
}

template <class K>
struct ProfileEntry {
  PlaneCurve<K> curve;
  ResidueClass<K> residue;
  Verdict verdict;
};

// Curves with nontrivial residue; curves where the available tests are silent are listed apart.
template <class K>
struct ResidueProfile {
  unsigned modulus = 2;
  std::vector<ProfileEntry<K>> entries;
  std::vector<PlaneCurve<K>> undecided;

  const ProfileEntry<K>* find(const MPoly<K>& f) const {
    for (auto& e : entries)
      if (e.curve.f() == f.make_monic()) return &e;
    return nullptr;
  }
  bool empty() const { return entries.empty(); }
};

// Curves along which some entry has a zero or pole: the declared curves plus
// the irreducible factors of whatever remains (factored over F_p, an error in
// characteristic zero).
template <class K>
std::vector<PlaneCurve<K>> symbol_support(const SymbolClass<K>& s, const std::vector<PlaneCurve<K>>& declared, Rng& rng) {
  std::vector<MPoly<K>> parts;
  for (auto& t : s.terms())
    for (auto* h : {&t.a, &t.b}) {
      parts.push_back(h->num());
      parts.push_back(h->den());
    }
  std::vector<PlaneCurve<K>> out;
  auto known = [&](const MPoly<K>& f) {
    for (auto& c : out)
      if (c.f() == f.make_monic()) return true;
    return false;
  };
  for (auto& base : coprime_base(parts)) {
    MPoly<K> rest = base;
    for (auto& c : declared) {
      while (auto q = rest.try_exact_div(c.f())) {
        rest = std::move(*q);
        if (!known(c.f())) out.push_back(c);
      }
    }
    if (rest.is_constant()) continue;
    if constexpr (is_char_zero_v<K>) {
      throw unsupported("undeclared factor " + to_string(rest) + " in symbol entries");
    } else {
      for (auto& g : factor_form(rest, rng)) {
        auto c = PlaneCurve<K>::certified_by(g, "fibre factorization over F_p");
        if (!known(c.f())) out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PlaneCurve<K>& a, const PlaneCurve<K>& b) { return mpoly_less(a.f(), b.f()); });
  return out;
}

template <class K>
ResidueProfile<K> residue_profile(const SymbolClass<K>& s, const std::vector<PlaneCurve<K>>& declared, Rng& rng,
                                  ResidueMode mode = ResidueMode::tame) {
  ResidueProfile<K> p;
  p.modulus = s.modulus();
  for (auto& c : symbol_support(s, declared, rng)) {
    auto r = residue_symbol(s, c, mode);
    Verdict v = classify_residue(r, rng);
    if (v == Verdict::nontrivial) p.entries.push_back({c, r, v});
    else if (v == Verdict::undecided) p.undecided.push_back(c);
  }
  return p;
}

}  // namespace dblbrauer
