#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dblbrauer/polycore/field.hpp"

namespace dblbrauer {

enum class Var : unsigned { x = 0, y = 1, z = 2, t = 3 };
inline constexpr unsigned num_vars = 4;
inline constexpr std::array<Var, 4> all_vars{Var::x, Var::y, Var::z, Var::t};

constexpr char var_name(Var v) { return "xyzt"[unsigned(v)]; }

// Exponent vector packed so that integer order is graded lex with x > y > z > t.
class Monomial {
 public:
  static constexpr unsigned bits = 12;
  static constexpr std::uint64_t mask = (1u << bits) - 1;
  static constexpr unsigned max_degree = mask;

  constexpr Monomial() = default;

  static Monomial from_exponents(const std::array<unsigned, 4>& e) {
    unsigned d = e[0] + e[1] + e[2] + e[3];
    if (d > max_degree) throw domain_error("monomial degree exceeds supported range");
    Monomial m;
    m.key_ = std::uint64_t(d) << (4 * bits);
    for (unsigned i = 0; i < 4; ++i) m.key_ |= std::uint64_t(e[i]) << shift(i);
    return m;
  }
  static Monomial variable(Var v, unsigned k = 1) {
    std::array<unsigned, 4> e{};
    e[unsigned(v)] = k;
    return from_exponents(e);
  }

  unsigned degree() const { return unsigned(key_ >> (4 * bits)); }
  unsigned exponent(Var v) const { return unsigned((key_ >> shift(unsigned(v))) & mask); }
  std::array<unsigned, 4> exponents() const {
    return {exponent(Var::x), exponent(Var::y), exponent(Var::z), exponent(Var::t)};
  }
  std::uint64_t key() const { return key_; }
  bool is_one() const { return key_ == 0; }

  friend Monomial operator*(Monomial a, Monomial b) {
    if (a.degree() + b.degree() > max_degree) throw domain_error("monomial degree exceeds supported range");
    Monomial m;
    m.key_ = a.key_ + b.key_;
    return m;
  }
  bool divides(Monomial b) const {
    for (unsigned i = 0; i < 4; ++i)
      if (((key_ >> shift(i)) & mask) > ((b.key_ >> shift(i)) & mask)) return false;
    return true;
  }
  // Caller guarantees divisibility.
  friend Monomial operator/(Monomial a, Monomial b) {
    Monomial m;
    m.key_ = a.key_ - b.key_;
    return m;
  }
  Monomial without(Var v) const {
    Monomial m;
    unsigned k = exponent(v);
    m.key_ = key_ - (std::uint64_t(k) << shift(unsigned(v))) - (std::uint64_t(k) << (4 * bits));
    return m;
  }

  friend auto operator<=>(Monomial a, Monomial b) = default;

 private:
  static constexpr unsigned shift(unsigned i) { return (3 - i) * bits; }
  std::uint64_t key_ = 0;
};

template <class K>
class MPoly {
 public:
  using field_type = K;
  using coeff_type = typename K::element;
  using Term = std::pair<Monomial, coeff_type>;

  explicit MPoly(K field = K{}) : field_(std::move(field)) {}

  static MPoly constant(const K& k, const coeff_type& c) { return monomial(k, Monomial{}, c); }
  static MPoly constant(const K& k, std::int64_t c) { return constant(k, k.from_int(c)); }
  static MPoly variable(const K& k, Var v) { return monomial(k, Monomial::variable(v), k.one()); }
  static MPoly monomial(const K& k, Monomial m, const coeff_type& c) {
    MPoly p(k);
    if (!detail::coeff_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  // Terms in any order; duplicates are summed.
  static MPoly from_terms(const K& k, std::vector<Term> ts) {
    MPoly p(k);
    p.terms_ = std::move(ts);
    p.canonicalize();
    return p;
  }

  const K& field() const { return field_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].second == field_.one(); }

  coeff_type leading_coefficient() const { return terms_.empty() ? field_.zero() : terms_.front().second; }
  Monomial leading_monomial() const { return terms_.empty() ? Monomial{} : terms_.front().first; }
  coeff_type constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return field_.zero();
  }
  coeff_type coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Monomial mm) { return t.first > mm; });
    if (it != terms_.end() && it->first == m) return it->second;
    return field_.zero();
  }

  int total_degree() const { return terms_.empty() ? -1 : int(terms_.front().first.degree()); }
  int degree_in(Var v) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, int(m.exponent(v)));
    return d;
  }
  bool is_homogeneous() const {
    for (auto& [m, c] : terms_)
      if (m.degree() != terms_.front().first.degree()) return false;
    return true;
  }
  unsigned var_mask() const {
    unsigned mask = 0;
    for (auto& [m, c] : terms_)
      for (Var v : all_vars)
        if (m.exponent(v)) mask |= 1u << unsigned(v);
    return mask;
  }
  bool involves(Var v) const { return (var_mask() >> unsigned(v)) & 1u; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].first != b.terms_[i].first || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }
  friend MPoly operator-(const MPoly& a) {
    MPoly r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return MPoly(a.field_);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    std::vector<Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) ts.emplace_back(ma * mb, ca * cb);
    MPoly r(a.field_);
    r.terms_ = std::move(ts);
    r.canonicalize();
    return r;
  }
  MPoly scaled(const coeff_type& c) const {
    if (detail::coeff_zero(c)) return MPoly(field_);
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }
  MPoly mul_term(Monomial m, const coeff_type& c) const {
    MPoly r(field_);
    if (detail::coeff_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& [mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
    return r;
  }
  MPoly pow(unsigned k) const {
    MPoly r = constant(field_, field_.one()), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  MPoly make_monic() const {
    if (is_zero()) return *this;
    return scaled(field_.one() / leading_coefficient());
  }

  MPoly derivative(Var v) const {
    std::vector<Term> ts;
    for (auto& [m, c] : terms_) {
      unsigned k = m.exponent(v);
      if (!k) continue;
      coeff_type nc = c * field_.from_int(k);
      if (!detail::coeff_zero(nc)) ts.emplace_back(m / Monomial::variable(v), nc);
    }
    MPoly r(field_);
    r.terms_ = std::move(ts);  // order preserved: dividing by a fixed variable keeps grlex order
    return r;
  }

  // Division with remainder by a single divisor under graded lex.
  std::pair<MPoly, MPoly> divmod(const MPoly& b) const {
    check_field(b);
    if (b.is_zero()) throw domain_error("division by the zero polynomial");
    MPoly q(field_), r(field_), p = *this;
    const Monomial lb = b.leading_monomial();
    const coeff_type inv = field_.one() / b.leading_coefficient();
    while (!p.is_zero()) {
      auto [m, c] = p.terms_.front();
      if (lb.divides(m)) {
        Monomial qm = m / lb;
        coeff_type qc = c * inv;
        q.terms_.emplace_back(qm, qc);
        p = p - b.mul_term(qm, qc);
      } else {
        r.terms_.emplace_back(m, c);
        p.terms_.erase(p.terms_.begin());
      }
    }
    return {std::move(q), std::move(r)};
  }
  MPoly remainder(const MPoly& b) const { return divmod(b).second; }

  std::optional<MPoly> try_exact_div(const MPoly& b) const {
    check_field(b);
    if (b.is_zero()) throw domain_error("division by the zero polynomial");
    if (is_zero()) return MPoly(field_);
    MPoly q(field_), p = *this;
    const Monomial lb = b.leading_monomial();
    const coeff_type inv = field_.one() / b.leading_coefficient();
    while (!p.is_zero()) {
      auto [m, c] = p.terms_.front();
      if (!lb.divides(m)) return std::nullopt;
      Monomial qm = m / lb;
      coeff_type qc = c * inv;
      q.terms_.emplace_back(qm, qc);
      p = p - b.mul_term(qm, qc);
    }
    return q;
  }
  MPoly exact_div(const MPoly& b) const {
    auto q = try_exact_div(b);
    if (!q) throw not_divisible();
    return std::move(*q);
  }
  bool divisible_by(const MPoly& b) const { return try_exact_div(b).has_value(); }

  // Coefficients as a polynomial in v: result[k] is the coefficient of v^k.
  std::vector<MPoly> coefficients_in(Var v) const {
    std::vector<std::vector<Term>> buckets(std::max(0, degree_in(v)) + 1);
    for (auto& [m, c] : terms_) buckets[m.exponent(v)].emplace_back(m.without(v), c);
    std::vector<MPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      MPoly p(field_);
      p.terms_ = std::move(b);  // removing one variable keeps relative order among equal v-degree
      out.push_back(std::move(p));
    }
    if (is_zero()) out.assign(1, MPoly(field_));
    return out;
  }
  static MPoly from_coefficients(const K& k, Var v, const std::vector<MPoly>& cs) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (auto& [m, c] : cs[i].terms_) ts.emplace_back(m * Monomial::variable(v, unsigned(i)), c);
    return from_terms(k, std::move(ts));
  }
  MPoly leading_coefficient_in(Var v) const { return coefficients_in(v).back(); }

  coeff_type evaluate(const std::array<coeff_type, 4>& pt) const {
    coeff_type s = field_.zero();
    for (auto& [m, c] : terms_) {
      coeff_type t = c;
      for (Var v : all_vars) {
        unsigned k = m.exponent(v);
        for (unsigned j = 0; j < k; ++j) t = t * pt[unsigned(v)];
      }
      s = s + t;
    }
    return s;
  }

  // Simultaneous substitution; a null image keeps the variable.
  MPoly substitute(const std::array<const MPoly*, 4>& images) const {
    std::array<std::vector<MPoly>, 4> powers;
    auto power = [&](Var v, unsigned k) -> const MPoly& {
      auto& pw = powers[unsigned(v)];
      if (pw.empty()) pw.push_back(constant(field_, field_.one()));
      while (pw.size() <= k) pw.push_back(pw.back() * *images[unsigned(v)]);
      return pw[k];
    };
    std::vector<Term> acc;
    for (auto& [m, c] : terms_) {
      Monomial kept;
      MPoly t = constant(field_, c);
      for (Var v : all_vars) {
        unsigned k = m.exponent(v);
        if (!k) continue;
        if (images[unsigned(v)]) t = t * power(v, k);
        else kept = kept * Monomial::variable(v, k);
      }
      for (auto& [mm, cc] : t.terms_) acc.emplace_back(mm * kept, cc);
    }
    return from_terms(field_, std::move(acc));
  }
  MPoly substitute(Var v, const MPoly& image) const {
    std::array<const MPoly*, 4> im{};
    im[unsigned(v)] = &image;
    return substitute(im);
  }
  MPoly specialize(Var v, const coeff_type& c) const {
    std::vector<Term> ts;
    for (auto& [m, cc] : terms_) {
      coeff_type t = cc;
      for (unsigned j = 0; j < m.exponent(v); ++j) t = t * c;
      ts.emplace_back(m.without(v), t);
    }
    return from_terms(field_, std::move(ts));
  }
  MPoly homogenize(Var h) const {
    if (is_zero()) return *this;
    unsigned d = leading_monomial().degree();
    std::vector<Term> ts;
    for (auto& [m, c] : terms_) ts.emplace_back(m * Monomial::variable(h, d - m.degree()), c);
    return from_terms(field_, std::move(ts));
  }

  void check_field(const MPoly& b) const {
    if (!(field_ == b.field_)) throw field_mismatch();
  }

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Monomial m = terms_[i].first;
      coeff_type c = terms_[i].second;
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].first == m; ++j) c = c + terms_[j].second;
      if (!detail::coeff_zero(c)) terms_[w++] = Term(m, c);
      i = j;
    }
    terms_.resize(w);
  }

  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    a.check_field(b);
    MPoly r(a.field_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
        auto t = b.terms_[j++];
        if (subtract) t.second = -t.second;
        r.terms_.push_back(std::move(t));
      } else {
        coeff_type c = subtract ? coeff_type(a.terms_[i].second - b.terms_[j].second)
                                : coeff_type(a.terms_[i].second + b.terms_[j].second);
        if (!detail::coeff_zero(c)) r.terms_.emplace_back(a.terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }

  K field_;
  std::vector<Term> terms_;
};

template <class K>
MPoly<K> exact_div(const MPoly<K>& a, const MPoly<K>& b) { return a.exact_div(b); }

template <class K>
MPoly<K> partial_derivative(const MPoly<K>& a, Var v) { return a.derivative(v); }

template <class K>
MPoly<K> var(const K& k, Var v) { return MPoly<K>::variable(k, v); }

template <class K>
MPoly<K> constant(const K& k, std::int64_t c) { return MPoly<K>::constant(k, c); }

}  // namespace dblbrauer
