#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dblbrauer/invariants/invariants.hpp"

namespace dblbrauer {

struct PartitionRecord {
  int e = 0;
  std::vector<int> parts;
  int epsilon = 0;
  std::vector<int> twists;
  std::int64_t dim_l = 0;
  bool generic = false;
};

inline std::string partition_string(const std::vector<int>& parts, const char* sep = "+") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + std::to_string(parts[i]);
  return s;
}

inline void check_partition(int e, const std::vector<int>& parts) {
  if (e < 1) throw domain_error("e must be positive");
  if (parts.empty()) throw domain_error("empty partition");
  int sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw domain_error("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) throw domain_error("partition must be weakly decreasing");
    if ((parts[i] - parts[0]) % 2) throw domain_error("partition parts must share one parity");
    sum += parts[i];
  }
  if (sum != e) throw domain_error("partition of " + std::to_string(sum) + " given for e = " + std::to_string(e));
}

// The four families where the dimension bound is attained. Membership is
// set-theoretic, so small e can sit in several at once.
struct FamilyMembership {
  bool ones = false, twos = false, three_ones = false, single = false;
  int count() const { return int(ones) + int(twos) + int(three_ones) + int(single); }
  bool any() const { return count() > 0; }
};

inline FamilyMembership families(const std::vector<int>& parts) {
  FamilyMembership f;
  auto all = [&](std::size_t from, int v) {
    return std::all_of(parts.begin() + long(from), parts.end(), [v](int x) { return x == v; });
  };
  f.ones = all(0, 1);
  f.twos = all(0, 2);
  f.three_ones = parts[0] == 3 && all(1, 1);
  f.single = parts.size() == 1;
  return f;
}

inline PartitionRecord moduli_dim(int e, const std::vector<int>& parts) {
  check_partition(e, parts);
  PartitionRecord r;
  r.e = e;
  r.parts = parts;
  r.epsilon = (e - parts[0]) % 2;
  for (int d : parts) r.twists.push_back((e - d - r.epsilon) / 2);
  const std::size_t n = parts.size();
  std::int64_t first = 0, second = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t ai = r.twists[i], aj = r.twists[j];
      if (i <= j) first += choose2(e - ai - aj - r.epsilon + 2);
      second += choose2(ai - aj + 2);
    }
  r.dim_l = first - second - 8;
  r.generic = families(parts).any();
  return r;
}

inline std::int64_t curve_moduli_dim(int e) { return choose2(e + 2) - 9; }

// Stages of the reduction of the bound to a sum of visibly controlled terms.
struct BracketTerms {
  std::int64_t lhs_sums = 0;        // first binomial sum minus second
  std::int64_t paired = 0;          // sum over i <= j of the paired binomial difference, minus sum C(f_i, 2)
  std::int64_t expanded = 0;        // sum over i <= j of (d_i d_j + 3 d_j)/2, minus sum C(f_i, 2)
  std::int64_t gap = 0;             // C(e+2, 2) - 9 - dim_L
  std::int64_t multiplicity = 0;    // sum C(f_i, 2)
  std::int64_t running = 0;         // sum over j of (sum_{i<j} d_i - 3(j-1)) d_j / 2
  bool consistent() const { return lhs_sums == paired && paired == expanded && gap == multiplicity + running; }
};

inline BracketTerms bracket_terms(int e, const std::vector<int>& parts) {
  const PartitionRecord r = moduli_dim(e, parts);
  const std::size_t n = parts.size();
  BracketTerms b;
  b.lhs_sums = r.dim_l + 8;
  std::map<int, std::int64_t> freq;
  for (int d : parts) ++freq[d];
  for (auto& [d, f] : freq) b.multiplicity += choose2(f);
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::int64_t di = parts[i], dj = parts[j];
      b.paired += choose2((di + dj) / 2 + 2) - choose2((di - dj) / 2 + 2);
      twice += di * dj + 3 * dj;
    }
  b.paired -= b.multiplicity;
  b.expanded = exact_half(twice, "paired expansion") - b.multiplicity;
  b.gap = curve_moduli_dim(e) - r.dim_l;
  std::int64_t run = 0, prefix = 0;
  for (std::size_t j = 0; j < n; ++j) {
    run += (prefix - 3 * std::int64_t(j)) * parts[j];
    prefix += parts[j];
  }
  b.running = exact_half(run, "running sum");
  return b;
}

// Weakly decreasing partitions of e into parts of one parity.
inline void for_each_parity_partition(int e, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      fn(cur);
      return;
    }
    int top = std::min(left, maxpart);
    if ((top - cur[0]) % 2) --top;
    for (int p = top; p >= 1; p -= 2) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  for (int first = e; first >= 1; --first) {
    cur = {first};
    rec(e - first, first);
  }
}

struct CombinatoricsReport {
  int e_max = 0;
  std::int64_t partitions = 0;
  std::int64_t equality_cases = 0;
  std::int64_t overlaps = 0;  // partitions lying in more than one equality family
  std::vector<std::string> counterexamples;
  std::map<int, std::vector<std::string>> equality_sets;
  bool ok() const { return counterexamples.empty(); }
};

inline CombinatoricsReport verify_combinatorics(int e_max) {
  if (e_max < 1) throw domain_error("e_max must be positive");
  CombinatoricsReport rep;
  rep.e_max = e_max;
  for (int e = 1; e <= e_max; ++e) {
    const std::int64_t bound = curve_moduli_dim(e);
    for_each_parity_partition(e, [&](const std::vector<int>& parts) {
      ++rep.partitions;
      const PartitionRecord r = moduli_dim(e, parts);
      const FamilyMembership f = families(parts);
      const std::string name = partition_string(parts);
      if (f.count() > 1) ++rep.overlaps;
      if (r.dim_l == bound) {
        ++rep.equality_cases;
        rep.equality_sets[e].push_back(name);
      }
      if (r.dim_l > bound)
        rep.counterexamples.push_back("e=" + std::to_string(e) + " " + name + ": dim " + std::to_string(r.dim_l) +
                                      " exceeds " + std::to_string(bound));
      else if ((r.dim_l == bound) != f.any())
        rep.counterexamples.push_back("e=" + std::to_string(e) + " " + name + ": equality " +
                                      (r.dim_l == bound ? "outside" : "missing from") + " the listed families");
      const BracketTerms b = bracket_terms(e, parts);
      if (!b.consistent()) rep.counterexamples.push_back("e=" + std::to_string(e) + " " + name + ": bracket identity fails");
    });
  }
  return rep;
}

struct EpsilonCase {
  int e = 0, epsilon = 0;
  std::string bundles;
  std::vector<std::string> generic_partitions;
  std::string twist;
};

inline EpsilonCase epsilon_case(int e, int epsilon) {
  if (e < 1) throw domain_error("e must be positive");
  if (epsilon != 0 && epsilon != 1) throw domain_error("epsilon must be 0 or 1");
  EpsilonCase c{e, epsilon, "", {}, ""};
  auto ones = [](int k) { return std::vector<int>(std::size_t(k), 1); };
  if (e % 2 == 0 && epsilon == 0) {
    c.bundles = "Jac(C)[2]";
    c.generic_partitions.push_back(partition_string(std::vector<int>(std::size_t(e / 2), 2)));
    c.twist = "none";
    return c;
  }
  if (e % 2 == 1 && epsilon == 1) throw domain_error("odd e forces epsilon = 0");
  c.bundles = "theta characteristics";
  c.generic_partitions.push_back(partition_string(ones(e)) + " (even theta)");
  if (e >= 3) {
    std::vector<int> p = ones(e - 2);
    p[0] = 3;
    c.generic_partitions.push_back(partition_string(p) + " (odd theta)");
  }
  // deg L(k) = e k + e epsilon / 2 must equal g - 1 = e (e - 3) / 2.
  c.twist = e % 2 == 0 ? "L((e-4)/2) = L(" + std::to_string((e - 4) / 2) + ")"
                       : "L((e-3)/2) = L(" + std::to_string((e - 3) / 2) + ")";
  return c;
}

struct CatalogRow {
  std::vector<int> parts;
  std::int64_t count = 0;
  std::string square;
  std::string bundle;
  std::string tag;
};

inline std::vector<CatalogRow> k3_catalog() {
  struct Entry {
    std::vector<int> parts;
    const char* bundle;
    const char* tag;
  };
  static const std::vector<Entry> rows = {
      {{6}, "ℙ²", "trivial"},
      {{4, 2}, "X", "tangent-conic"},
      {{2, 2, 2}, "(2,2) ⊂ ℙ²×ℙ²", "jacobian-2-torsion"},
      {{5, 1}, "X", "tritangent-line"},
      {{3, 3}, "X", "even-theta-split"},
      {{3, 1, 1, 1}, "Bl_Π X ⊂ ℙ⁵, deg X = 3", "cubic-fourfold"},
      {{1, 1, 1, 1, 1, 1}, "(2,1) ⊂ ℙ⁵×ℙ²", "net-of-quadrics"},
  };
  std::vector<CatalogRow> out;
  for (auto& r : rows) {
    const PartitionRecord rec = moduli_dim(6, r.parts);
    out.push_back({r.parts, rec.dim_l, rec.epsilon ? "𝓞_C(1)" : "𝓞_C", r.bundle, r.tag});
  }
  return out;
}

}  // namespace dblbrauer
