#pragma once

#include <utility>
#include <vector>

#include "dblbrauer/polycore/error.hpp"

// Polynomials in one main variable over an exact domain R (MPoly or UPoly),
// stored low degree first. R must provide +, -, *, is_zero(), exact_div(),
// field(), pow() and a static constant(field, coeff).
namespace dblbrauer::prs {

template <class R>
using Rec = std::vector<R>;

template <class R>
void trim(Rec<R>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class R>
int degree(const Rec<R>& a) { return int(a.size()) - 1; }

template <class R>
R one_like(const R& r) { return R::constant(r.field(), r.field().one()); }

template <class R>
Rec<R> scale(Rec<R> a, const R& c) {
  for (auto& x : a) x = x * c;
  trim(a);
  return a;
}

template <class R>
Rec<R> exact_div(Rec<R> a, const R& c) {
  for (auto& x : a) x = x.exact_div(c);
  return a;
}

// lc(B)^(deg A - deg B + 1) * A mod B.
template <class R>
Rec<R> prem(Rec<R> r, const Rec<R>& b) {
  const int db = degree(b);
  if (db < 0) throw domain_error("pseudo-division by zero");
  const R& lb = b.back();
  int e = degree(r) - db + 1;
  if (e <= 0) return r;
  while (!r.empty() && degree(r) >= db) {
    R lr = r.back();
    const int s = degree(r) - db;
    for (auto& x : r) x = x * lb;
    for (int j = 0; j <= db; ++j) r[j + s] = r[j + s] - lr * b[j];
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) r = scale(std::move(r), lb.pow(unsigned(e)));
  return r;
}

// Subresultant remainder sequence; returns the last nonzero remainder (not made primitive).
template <class R>
Rec<R> subresultant_last(Rec<R> a, Rec<R> b) {
  if (degree(b) > degree(a)) std::swap(a, b);
  if (b.empty()) return a;
  R g = one_like(a.back()), h = g;
  while (true) {
    const int delta = degree(a) - degree(b);
    Rec<R> r = prem(a, b);
    if (r.empty()) return b;
    if (degree(r) == 0) return r;
    a = std::move(b);
    b = exact_div(std::move(r), g * h.pow(unsigned(delta)));
    g = a.back();
    if (delta == 0) {
    } else if (delta == 1) {
      h = g;
    } else {
      h = g.pow(unsigned(delta)).exact_div(h.pow(unsigned(delta - 1)));
    }
  }
}

// Resultant with respect to the main variable (subresultant algorithm).
template <class R>
R resultant(Rec<R> a, Rec<R> b, const R& zero) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return zero;
  R s = one_like(a.back());
  if (degree(b) > degree(a)) {
    std::swap(a, b);
    if ((degree(a) & 1) && (degree(b) & 1)) s = -s;
  }
  if (degree(b) == 0) return s * b[0].pow(unsigned(degree(a)));
  R g = one_like(a.back()), h = g;
  while (true) {
    const int delta = degree(a) - degree(b);
    if ((degree(a) & 1) && (degree(b) & 1)) s = -s;
    Rec<R> r = prem(a, b);
    if (r.empty()) return zero;
    a = std::move(b);
    b = exact_div(std::move(r), g * h.pow(unsigned(delta)));
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = g.pow(unsigned(delta)).exact_div(h.pow(unsigned(delta - 1)));
    }
    if (degree(b) == 0) {
      const int da = degree(a);
      R lb = b[0];
      if (da == 0) return s * h;
      return s * lb.pow(unsigned(da)).exact_div(h.pow(unsigned(da - 1)));
    }
  }
}

}  // namespace dblbrauer::prs
