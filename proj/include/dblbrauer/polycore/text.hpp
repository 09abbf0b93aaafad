#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "dblbrauer/polycore/ratfn.hpp"

namespace dblbrauer {

namespace detail {

template <class K>
class PolyParser {
 public:
  PolyParser(std::string_view s, const K& k) : s_(s), k_(k) {}

  MPoly<K> run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    MPoly<K> r = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MPoly<K> expr() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = s_[pos_++] == '-';
    MPoly<K> r = term();
    if (neg) r = -r;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') return r;
      ++pos_;
      MPoly<K> t = term();
      r = c == '+' ? r + t : r - t;
    }
  }
  MPoly<K> term() {
    MPoly<K> r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }
  MPoly<K> factor() {
    MPoly<K> b = base();
    if (eat('^')) {
      skip();
      mpz_class e = digits();
      if (e > Monomial::max_degree) fail("exponent too large");
      b = b.pow(unsigned(e.get_ui()));
    }
    return b;
  }
  mpz_class digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  MPoly<K> base() {
    char c = peek();
    if (c == 'x' || c == 'y' || c == 'z' || c == 't') {
      ++pos_;
      Var v = c == 'x' ? Var::x : c == 'y' ? Var::y : c == 'z' ? Var::z : Var::t;
      return MPoly<K>::variable(k_, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      mpz_class num = digits();
      mpz_class den = 1;
      if (eat('/')) {
        skip();
        den = digits();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      return coefficient(num, den, 0, at);
    }
    if (c == '(') {
      std::size_t at = pos_;
      if (auto g = gaussian()) return *g;
      pos_ = at + 1;
      MPoly<K> r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }
  // '(' int ('+'|'-') int '*i' ')'
  std::optional<MPoly<K>> gaussian() {
    std::size_t at = pos_;
    auto back = [&] {
      pos_ = at;
      return std::nullopt;
    };
    ++pos_;
    bool neg = eat('-');
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return back();
    mpz_class re = digits();
    if (neg) re = -re;
    char sgn = peek();
    if (sgn != '+' && sgn != '-') return back();
    ++pos_;
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return back();
    mpz_class im = digits();
    if (sgn == '-') im = -im;
    if (!eat('*') || !eat('i') || !eat(')')) return back();
    return coefficient(re, 1, im, at);
  }
  MPoly<K> coefficient(const mpz_class& num, const mpz_class& den, const mpz_class& im, std::size_t at) {
    if constexpr (std::is_same_v<K, GaussianRationalField>) {
      return MPoly<K>::constant(k_, QI(mpq_class(num, den), mpq_class(im)));
    } else {
      if (im != 0) {
        pos_ = at;
        fail("coefficient not representable in " + k_.tag().to_string());
      }
      try {
        return MPoly<K>::constant(k_, k_.from_rational(num, den));
      } catch (const domain_error& e) {
        pos_ = at;
        fail(e.what());
      }
    }
  }

  std::string_view s_;
  const K& k_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
MPoly<K> parse_poly(std::string_view text, const K& k) {
  return detail::PolyParser<K>(text, k).run();
}

inline std::string monomial_string(Monomial m) {
  std::string s;
  for (Var v : all_vars) {
    unsigned e = m.exponent(v);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Canonical text: graded-lex order, signs between terms, unit coefficients omitted.
template <class K>
std::string to_string(const MPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    auto [neg, mag] = p.field().format(c);
    std::string mono = monomial_string(m);
    std::string body = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

template <class K>
std::string to_string(const RatFn<K>& r) {
  if (r.den().is_one()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

template <class K>
std::string to_string(const UPoly<K>& p, char var = 'x') {
  std::string s;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    auto c = p[i];
    if (is_zero(c)) continue;
    auto [neg, mag] = p.field().format(c);
    std::string mono = i == 0 ? "" : i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i);
    std::string body = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return first ? "0" : s;
}

}  // namespace dblbrauer
