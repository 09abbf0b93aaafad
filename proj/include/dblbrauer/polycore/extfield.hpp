#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "dblbrauer/polycore/factor.hpp"

namespace dblbrauer {

namespace detail {
struct ExtContext {
  PrimeField base;
  std::vector<std::uint32_t> modulus;  // monic, low degree first
  int degree() const { return int(modulus.size()) - 1; }
};
}  // namespace detail

// Element of F_p[a]/(g); coefficients low degree first, trimmed.
class ExtElem {
 public:
  ExtElem() = default;
  ExtElem(std::shared_ptr<const detail::ExtContext> ctx, std::vector<std::uint32_t> c)
      : ctx_(std::move(ctx)), c_(std::move(c)) {
    trim();
  }

  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  bool zero() const { return c_.empty(); }

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    auto ctx = join(a, b);
    const std::uint32_t p = ctx->base.characteristic();
    std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t s = std::uint64_t(i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
      r[i] = std::uint32_t(s % p);
    }
    return ExtElem(ctx, std::move(r));
  }
  friend ExtElem operator-(const ExtElem& a) {
    ExtElem r = a;
    if (!a.ctx_) return r;
    const std::uint32_t p = a.ctx_->base.characteristic();
    for (auto& v : r.c_) v = v ? p - v : 0;
    return r;
  }
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    auto ctx = join(a, b);
    if (a.c_.empty() || b.c_.empty()) return ExtElem(ctx, {});
    const std::uint64_t p = ctx->base.characteristic();
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p;
    }
    const auto& g = ctx->modulus;
    const int k = ctx->degree();
    for (int i = int(r.size()) - 1; i >= k; --i) {
      std::uint64_t c = r[i] % p;
      if (!c) continue;
      for (int j = 0; j < k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * g[j]) % p;
      r[i] = 0;
    }
    std::vector<std::uint32_t> out(std::min<std::size_t>(r.size(), std::size_t(k)));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::uint32_t(r[i] % p);
    return ExtElem(ctx, std::move(out));
  }
  ExtElem inverse() const {
    if (c_.empty()) throw domain_error("division by zero in extension field");
    auto [g, s, t] = xgcd(as_upoly(), modulus_upoly());
    if (g.degree() != 0) throw domain_error("extension modulus is not irreducible");
    std::vector<std::uint32_t> c;
    for (auto& v : s.coefficients()) c.push_back(v.value());
    return ExtElem(ctx_, std::move(c));
  }
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }
  ExtElem& operator+=(const ExtElem& b) { return *this = *this + b; }
  ExtElem& operator-=(const ExtElem& b) { return *this = *this - b; }
  ExtElem& operator*=(const ExtElem& b) { return *this = *this * b; }
  friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c_ == b.c_; }

  UPoly<PrimeField> as_upoly() const {
    std::vector<Fp> c;
    for (auto v : c_) c.push_back(Fp::raw(v, ctx_->base.characteristic()));
    return UPoly<PrimeField>(ctx_->base, std::move(c));
  }

 private:
  UPoly<PrimeField> modulus_upoly() const {
    std::vector<Fp> c;
    for (auto v : ctx_->modulus) c.push_back(Fp::raw(v, ctx_->base.characteristic()));
    return UPoly<PrimeField>(ctx_->base, std::move(c));
  }
  static const std::shared_ptr<const detail::ExtContext>& join(const ExtElem& a, const ExtElem& b) {
    if (a.ctx_ == b.ctx_ || !b.ctx_) return a.ctx_;
    if (!a.ctx_) return b.ctx_;
    if (a.ctx_->modulus != b.ctx_->modulus) throw field_mismatch();
    return a.ctx_;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::shared_ptr<const detail::ExtContext> ctx_;
  std::vector<std::uint32_t> c_;
};

inline bool is_zero(const ExtElem& a) { return a.zero(); }

// Finite field F_p[a]/(g) for a monic irreducible g.
class ExtField {
 public:
  using element = ExtElem;

  explicit ExtField(const UPoly<PrimeField>& g) {
    if (g.degree() < 1) throw domain_error("extension modulus must have positive degree");
    auto ctx = std::make_shared<detail::ExtContext>(detail::ExtContext{g.field(), {}});
    const UPoly<PrimeField> gm = g.monic();
    for (auto& c : gm.coefficients()) ctx->modulus.push_back(c.value());
    ctx_ = std::move(ctx);
  }

  ExtElem zero() const { return ExtElem(ctx_, {}); }
  ExtElem one() const { return ExtElem(ctx_, {1}); }
  ExtElem from_int(std::int64_t v) const { return from_base(ctx_->base.from_int(v)); }
  ExtElem from_base(Fp a) const { return ExtElem(ctx_, {a.value()}); }
  ExtElem generator() const {
    if (ctx_->degree() == 1) return from_base(-Fp::raw(ctx_->modulus[0], ctx_->base.characteristic()));
    return ExtElem(ctx_, {0, 1});
  }
  ExtElem from_upoly(const UPoly<PrimeField>& a) const {
    std::vector<std::uint32_t> c;
    const UPoly<PrimeField> r = a % modulus();
    for (auto& v : r.coefficients()) c.push_back(v.value());
    return ExtElem(ctx_, std::move(c));
  }
  UPoly<PrimeField> modulus() const {
    std::vector<Fp> c;
    for (auto v : ctx_->modulus) c.push_back(Fp::raw(v, ctx_->base.characteristic()));
    return UPoly<PrimeField>(ctx_->base, std::move(c));
  }

  const PrimeField& base() const { return ctx_->base; }
  int degree() const { return ctx_->degree(); }
  std::uint32_t characteristic() const { return ctx_->base.characteristic(); }

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.ctx_ == b.ctx_ || a.ctx_->modulus == b.ctx_->modulus;
  }

 private:
  std::shared_ptr<const detail::ExtContext> ctx_;
};

// Evaluate a polynomial with F_p coefficients at a point with coordinates in an extension.
inline ExtElem evaluate_in(const MPoly<PrimeField>& f, const ExtField& k, const std::array<ExtElem, 4>& pt) {
  ExtElem s = k.zero();
  for (auto& [m, c] : f.terms()) {
    ExtElem t = k.from_base(c);
    for (Var v : all_vars)
      for (unsigned j = 0; j < m.exponent(v); ++j) t = t * pt[unsigned(v)];
    s = s + t;
  }
  return s;
}

// Specialize all variables except v at the given point, giving a univariate polynomial in v.
inline UPoly<ExtField> restrict_to(const MPoly<PrimeField>& f, const ExtField& k, Var v,
                                   const std::array<ExtElem, 4>& pt) {
  std::vector<ExtElem> c(std::max(0, f.degree_in(v)) + 1, k.zero());
  for (auto& [m, cc] : f.terms()) {
    ExtElem t = k.from_base(cc);
    for (Var w : all_vars) {
      if (w == v) continue;
      for (unsigned j = 0; j < m.exponent(w); ++j) t = t * pt[unsigned(w)];
    }
    c[m.exponent(v)] = c[m.exponent(v)] + t;
  }
  return UPoly<ExtField>(k, std::move(c));
}

}  // namespace dblbrauer
