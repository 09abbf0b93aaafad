#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dblbrauer/dblcover.hpp"

namespace dblbrauer {

using json = nlohmann::ordered_json;

// Either a polynomial or "(P)/(Q)".
template <class K>
RatFn<K> parse_ratfn(std::string_view text, const K& k) {
  std::size_t b = text.find_first_not_of(" \t\n");
  std::size_t e = text.find_last_not_of(" \t\n");
  if (b == std::string_view::npos) throw parse_error("empty rational function", 0);
  std::string_view s = text.substr(b, e - b + 1);
  if (s.front() == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close != std::string_view::npos) {
      std::size_t slash = s.find_first_not_of(" \t", close + 1);
      if (slash != std::string_view::npos && s[slash] == '/' && s.find_first_not_of(" \t", slash + 1) != std::string_view::npos &&
          s[s.find_first_not_of(" \t", slash + 1)] == '(') {
        MPoly<K> den = parse_poly(s.substr(slash + 1), k);
        if (den.is_zero()) throw parse_error("zero denominator", b + slash);
        return RatFn<K>(parse_poly(s.substr(1, close - 1), k), den);
      }
    }
  }
  return RatFn<K>(parse_poly(s, k));
}

template <class F>
decltype(auto) with_field(const FieldTag& tag, F&& f) {
  switch (tag.kind) {
    case FieldKind::prime_field: return f(PrimeField(tag.q));
    case FieldKind::gaussian_rationals: return f(GaussianRationalField{});
    case FieldKind::rationals: break;
  }
  return f(RationalField{});
}

template <class K>
std::string element_string(const K& k, const typename K::element& c) {
  auto [neg, mag] = k.format(c);
  return neg ? "-" + mag : mag;
}

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing key '") + key + "'", 0);
  return j.at(key);
}

inline std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw parse_error(std::string("key '") + key + "' must be a string", 0);
  return v.get<std::string>();
}

template <class K>
json poly_json(const MPoly<K>& p) {
  return to_string(p);
}

// Over F_p each cluster is printed as a point [X:Y:Z] with coordinates in
// F_p[a]/(modulus); otherwise as (factor, y) in the divisor's chart.
template <class K>
json cluster_json(const Cluster<K>& c) {
  if (c.point.empty()) return json{{"factor", to_string(c.factor)}, {"y", to_string(c.y)}, {"mult", c.mult}};
  json pt = json::array();
  for (auto& u : c.point) pt.push_back(to_string(u, 'a'));
  return json{{"modulus", to_string(c.factor, 'a')}, {"point", pt}, {"mult", c.mult}};
}

template <class K>
json divisor_json(const CurveDivisor<K>& d) {
  const K& k = d.curve().field();
  json cl = json::array();
  for (auto& c : d.clusters()) cl.push_back(cluster_json(c));
  json out{{"curve", to_string(d.curve().f())}, {"degree", d.degree()}, {"clusters", cl}};
  if (!CurveDivisor<K>::chart_free()) {
    json chart = json::array();
    for (auto& row : d.chart().matrix()) {
      json r = json::array();
      for (auto& v : row) r.push_back(element_string(k, v));
      chart.push_back(r);
    }
    out["chart"] = chart;
  }
  return out;
}

template <class K>
SymbolClass<K> symbol_from_json(const json& j, const K& k) {
  const json& m = require(j, "m");
  if (!m.is_number_unsigned()) throw parse_error("key 'm' must be a positive integer", 0);
  SymbolClass<K> s(k, m.get<unsigned>());
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw parse_error("key 'terms' must be an array", 0);
  for (auto& t : terms) {
    long long c = 1;
    if (t.contains("coeff")) {
      if (!t.at("coeff").is_number_integer()) throw parse_error("symbol coefficient must be an integer", 0);
      c = t.at("coeff").get<long long>();
    }
    s.push(parse_ratfn(require_string(t, "a"), k), parse_ratfn(require_string(t, "b"), k), c);
  }
  return s;
}

template <class K>
json symbol_json(const SymbolClass<K>& s) {
  json terms = json::array();
  for (auto& t : s.terms()) terms.push_back({{"a", to_string(t.a)}, {"b", to_string(t.b)}, {"coeff", t.coeff}});
  return json{{"m", s.modulus()}, {"terms", terms}};
}

template <class K>
std::vector<PlaneCurve<K>> curves_from_json(const json& j, const K& k, Rng& rng) {
  std::vector<PlaneCurve<K>> out;
  if (!j.contains("curves")) return out;
  for (auto& c : j.at("curves")) {
    if (!c.is_string()) throw parse_error("curves must be polynomial strings", 0);
    auto f = parse_poly(c.get<std::string>(), k);
    auto pc = PlaneCurve<K>::certify(f, rng);
    if (!pc.certified()) throw domain_error("curve " + to_string(f) + " is not certifiably irreducible");
    out.push_back(pc);
  }
  return out;
}

template <class K>
FormMatrix<K> matrix_from_json(const json& rows, const K& k) {
  if (!rows.is_array() || rows.empty()) throw parse_error("matrix must be a nonempty array of rows", 0);
  PolyMatrix<K> m;
  for (auto& r : rows) {
    if (!r.is_array()) throw parse_error("matrix rows must be arrays", 0);
    std::vector<MPoly<K>> row;
    for (auto& x : r) {
      if (!x.is_string()) throw parse_error("matrix entries must be polynomial strings", 0);
      row.push_back(parse_poly(x.get<std::string>(), k));
    }
    m.push_back(std::move(row));
  }
  return FormMatrix<K>(m, k);
}

template <class K>
json matrix_json(const FormMatrix<K>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) r.push_back(to_string(m.at(i, j)));
    rows.push_back(r);
  }
  return rows;
}

template <class K>
json const_matrix_json(const K& k, const ConstMatrix<K>& m) {
  json rows = json::array();
  for (auto& row : m) {
    json r = json::array();
    for (auto& v : row) r.push_back(element_string(k, v));
    rows.push_back(r);
  }
  return rows;
}

template <class K>
json ladder_json(const MinorLadder<K>& l) {
  json minors = json::array();
  for (auto& m : l.minors) minors.push_back(to_string(m));
  return json{{"matrix", matrix_json(l.matrix)}, {"change", const_matrix_json(l.matrix.field(), l.change)}, {"minors", minors}};
}

inline FieldTag field_from_json(const json& j, const FieldTag& fallback) {
  if (!j.contains("field")) return fallback;
  if (!j.at("field").is_string()) throw parse_error("key 'field' must be a string", 0);
  return FieldTag::parse(j.at("field").get<std::string>());
}

inline std::vector<int> int_array(const json& j, const char* key) {
  const json& a = require(j, key);
  if (!a.is_array()) throw parse_error(std::string("key '") + key + "' must be an array", 0);
  std::vector<int> out;
  for (auto& v : a) {
    if (!v.is_number_integer()) throw parse_error(std::string("key '") + key + "' must hold integers", 0);
    out.push_back(v.get<int>());
  }
  return out;
}

// {field, n, e, eps, twists, entries, ell, elltilde}
template <class K>
SymResolution<K> resolution_from_json(const json& j, const K& k) {
  FormMatrix<K> m = matrix_from_json(require(j, "entries"), k);
  if (j.contains("n") && j.at("n") != json(m.size())) throw parse_error("key 'n' disagrees with the matrix size", 0);
  const json& eps = require(j, "eps");
  if (!eps.is_number_integer()) throw parse_error("key 'eps' must be an integer", 0);
  std::optional<MPoly<K>> ell, elltilde;
  if (j.contains("ell")) ell = parse_poly(require_string(j, "ell"), k);
  if (j.contains("elltilde")) elltilde = parse_poly(require_string(j, "elltilde"), k);
  std::optional<int> e;
  if (j.contains("e")) {
    if (!j.at("e").is_number_integer()) throw parse_error("key 'e' must be an integer", 0);
    e = j.at("e").get<int>();
  }
  return new_resolution(m, int_array(j, "twists"), eps.get<int>(), ell, elltilde, e);
}

template <class K>
json resolution_json(const SymResolution<K>& r) {
  return json{{"field", r.field().tag().to_string()},
              {"n", r.n()},
              {"e", r.e},
              {"eps", r.epsilon},
              {"twists", r.twists},
              {"entries", matrix_json(r.matrix)},
              {"ell", to_string(r.ell)},
              {"elltilde", to_string(r.elltilde)}};
}

}  // namespace dblbrauer
