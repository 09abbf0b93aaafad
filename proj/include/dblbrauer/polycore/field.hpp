#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

#include "dblbrauer/polycore/error.hpp"

namespace dblbrauer {

using Rng = std::mt19937_64;

enum class FieldKind { rationals, gaussian_rationals, prime_field };

struct FieldTag {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t q = 0;

  friend bool operator==(const FieldTag&, const FieldTag&) = default;

  std::string to_string() const {
    switch (kind) {
      case FieldKind::rationals: return "qq";
      case FieldKind::gaussian_rationals: return "qqi";
      case FieldKind::prime_field: return "fp:" + std::to_string(q);
    }
    return "?";
  }

  static FieldTag parse(std::string_view s);
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldTag FieldTag::parse(std::string_view s) {
  if (s == "qq") return {FieldKind::rationals, 0};
  if (s == "qqi") return {FieldKind::gaussian_rationals, 0};
  if (s.substr(0, 3) == "fp:") {
    std::uint64_t q = 0;
    auto digits = s.substr(3);
    if (digits.empty()) throw domain_error("missing field order in '" + std::string(s) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') throw domain_error("bad field order in '" + std::string(s) + "'");
      q = q * 10 + std::uint64_t(c - '0');
      if (q >= (1ull << 31)) throw domain_error("field order too large");
    }
    if (!is_prime(q) || q == 2)
      throw domain_error("prime field order must be an odd prime, got " + std::to_string(q));
    return {FieldKind::prime_field, std::uint32_t(q)};
  }
  throw domain_error("unknown field '" + std::string(s) + "' (expected qq, qqi or fp:Q)");
}

// ---------------------------------------------------------------- F_p

class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    std::int64_t r = v % std::int64_t(p);
    if (r < 0) r += p;
    v_ = std::uint32_t(r);
  }
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp a;
    a.v_ = v;
    a.p_ = p;
    return a;
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t p = join(a, b);
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    return raw(std::uint32_t(s >= p ? s - p : s), p);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint32_t p = join(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : std::uint32_t(std::uint64_t(a.v_) + p - b.v_), p);
  }
  friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) {
    std::uint32_t p = join(a, b);
    return raw(std::uint32_t(std::uint64_t(a.v_) * b.v_ % p), p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp pow(std::uint64_t k) const {
    Fp r = raw(1 % p_, p_), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }
  Fp inverse() const {
    if (v_ == 0) throw domain_error("division by zero in prime field");
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

 private:
  static std::uint32_t join(Fp a, Fp b) {
    if (a.p_ == b.p_) return a.p_;
    if (a.p_ == 0 && a.v_ == 0) return b.p_;
    if (b.p_ == 0 && b.v_ == 0) return a.p_;
    throw field_mismatch();
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }

class PrimeField {
 public:
  using element = Fp;

  explicit PrimeField(std::uint32_t p = 13) : p_(p) {
    if (p == 2 || !is_prime(p) || p >= (1u << 31))
      throw domain_error("prime field order must be an odd prime below 2^31, got " + std::to_string(p));
  }

  Fp zero() const { return Fp::raw(0, p_); }
  Fp one() const { return Fp::raw(1, p_); }
  Fp from_int(std::int64_t v) const { return Fp(v, p_); }
  Fp from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return Fp::raw(std::uint32_t(r.get_ui()), p_);
  }
  Fp from_rational(const mpz_class& num, const mpz_class& den) const {
    Fp d = from_mpz(den);
    if (is_zero(d)) throw domain_error("coefficient not representable in " + tag().to_string() + ": denominator divisible by characteristic");
    return from_mpz(num) / d;
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t order() const { return p_; }
  FieldTag tag() const { return {FieldKind::prime_field, p_}; }
  bool has_sqrt_minus_one() const { return p_ % 4 == 1; }
  bool has_root_of_unity(unsigned m) const { return m >= 1 && (p_ - 1) % m == 0; }

  bool is_mth_power(Fp a, unsigned m) const {
    if (is_zero(a)) return true;
    std::uint64_t g = std::gcd<std::uint64_t>(m, p_ - 1);
    return a.pow((p_ - 1) / g) == one();
  }

  Fp sqrt_minus_one() const {
    if (!has_sqrt_minus_one()) throw domain_error("field " + tag().to_string() + " lacks a square root of -1");
    for (std::uint32_t g = 2; g < p_; ++g) {
      Fp r = Fp::raw(g, p_).pow((p_ - 1) / 4);
      if (r * r == -one()) return r.value() <= p_ / 2 ? r : -r;
    }
    throw domain_error("no square root of -1 found");
  }

  Fp random(Rng& rng) const { return Fp::raw(std::uint32_t(rng() % p_), p_); }
  Fp random_nonzero(Rng& rng) const { return Fp::raw(std::uint32_t(1 + rng() % (p_ - 1)), p_); }

  // Symmetric representative: negative flag plus decimal magnitude.
  std::pair<bool, std::string> format(Fp a) const {
    if (a.value() > p_ / 2) return {true, std::to_string(p_ - a.value())};
    return {false, std::to_string(a.value())};
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

// ---------------------------------------------------------------- Q

inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }

inline bool is_perfect_power(const mpz_class& n, unsigned m) {
  if (n < 0) return false;
  mpz_class r;
  return mpz_root(r.get_mpz_t(), n.get_mpz_t(), m) != 0;
}

class RationalField {
 public:
  using element = mpq_class;

  mpq_class zero() const { return 0; }
  mpq_class one() const { return 1; }
  mpq_class from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  mpq_class from_rational(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw domain_error("zero denominator in coefficient");
    mpq_class r(num, den);
    r.canonicalize();
    return r;
  }

  std::uint32_t characteristic() const { return 0; }
  FieldTag tag() const { return {FieldKind::rationals, 0}; }
  bool has_sqrt_minus_one() const { return false; }
  bool has_root_of_unity(unsigned m) const { return m == 1 || m == 2; }

  bool is_mth_power(const mpq_class& a, unsigned m) const {
    if (is_zero(a)) return true;
    mpz_class n = a.get_num(), d = a.get_den();
    if (n < 0) {
      if (m % 2 == 0) return false;
      n = -n;
    }
    return is_perfect_power(n, m) && is_perfect_power(d, m);
  }

  std::pair<bool, std::string> format(const mpq_class& a) const {
    if (sgn(a) < 0) return {true, mpq_class(-a).get_str()};
    return {false, a.get_str()};
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// Exact rational square root, if any.
inline bool rational_sqrt(const mpq_class& a, mpq_class& out) {
  if (sgn(a) < 0) return false;
  mpz_class n = a.get_num(), d = a.get_den(), rn, rd;
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = mpq_class(rn, rd);
  out.canonicalize();
  return true;
}

// ---------------------------------------------------------------- Q(i)

struct QI {
  mpq_class re = 0, im = 0;

  QI() = default;
  QI(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  friend QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
  friend QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
  friend QI operator-(const QI& a) { return {-a.re, -a.im}; }
  friend QI operator*(const QI& a, const QI& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  QI inverse() const {
    mpq_class n = re * re + im * im;
    if (sgn(n) == 0) throw domain_error("division by zero in Q(i)");
    return {re / n, -im / n};
  }
  friend QI operator/(const QI& a, const QI& b) { return a * b.inverse(); }
  QI& operator+=(const QI& b) { return *this = *this + b; }
  QI& operator-=(const QI& b) { return *this = *this - b; }
  QI& operator*=(const QI& b) { return *this = *this * b; }
  friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
};

inline bool is_zero(const QI& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

class GaussianRationalField {
 public:
  using element = QI;

  QI zero() const { return {}; }
  QI one() const { return {1, 0}; }
  QI i() const { return {0, 1}; }
  QI from_int(std::int64_t v) const { return {mpq_class(mpz_class(static_cast<long>(v))), 0}; }
  QI from_rational(const mpz_class& num, const mpz_class& den) const {
    return {RationalField{}.from_rational(num, den), 0};
  }

  std::uint32_t characteristic() const { return 0; }
  FieldTag tag() const { return {FieldKind::gaussian_rationals, 0}; }
  bool has_sqrt_minus_one() const { return true; }
  bool has_root_of_unity(unsigned m) const { return m == 1 || m == 2 || m == 4; }

  static bool sqrt(const QI& a, QI& out) {
    if (is_zero(a)) {
      out = {};
      return true;
    }
    if (sgn(a.im) == 0) {
      mpq_class r;
      if (rational_sqrt(a.re, r)) {
        out = {r, 0};
        return true;
      }
      if (rational_sqrt(-a.re, r)) {
        out = {0, r};
        return true;
      }
      return false;
    }
    mpq_class s, c;
    if (!rational_sqrt(a.re * a.re + a.im * a.im, s)) return false;
    if (!rational_sqrt((a.re + s) / 2, c) || sgn(c) == 0) return false;
    out = {c, a.im / (2 * c)};
    return true;
  }

  bool is_mth_power(const QI& a, unsigned m) const {
    if (m == 1 || is_zero(a)) return true;
    QI r;
    if (m == 2) return sqrt(a, r);
    if (m == 4) {
      if (!sqrt(a, r)) return false;
      QI t;
      return sqrt(r, t) || sqrt(-r, t);
    }
    throw unsupported("m-th power test over Q(i) supports m in {2, 4}");
  }

  std::pair<bool, std::string> format(const QI& a) const;

  friend bool operator==(const GaussianRationalField&, const GaussianRationalField&) { return true; }
};

inline std::pair<bool, std::string> GaussianRationalField::format(const QI& a) const {
  if (sgn(a.im) == 0) return RationalField{}.format(a.re);
  bool neg = sgn(a.re) < 0 || (sgn(a.re) == 0 && sgn(a.im) < 0);
  QI b = neg ? -a : a;
  mpz_class den = lcm(b.re.get_den(), b.im.get_den());
  mpz_class re = b.re.get_num() * (den / b.re.get_den());
  mpz_class im = b.im.get_num() * (den / b.im.get_den());
  std::string s = "(" + re.get_str() + (im < 0 ? "-" : "+") + mpz_class(abs(im)).get_str() + "*i)";
  if (den != 1) s += "*1/" + den.get_str();
  return {neg, s};
}

namespace detail {
// Unqualified call so that element types declared later are found by ADL.
template <class E>
bool coeff_zero(const E& e) { return is_zero(e); }
}  // namespace detail

template <class K>
inline constexpr bool is_prime_field_v = std::is_same_v<K, PrimeField>;

template <class K>
inline constexpr bool is_char_zero_v =
    std::is_same_v<K, RationalField> || std::is_same_v<K, GaussianRationalField>;

}  // namespace dblbrauer
