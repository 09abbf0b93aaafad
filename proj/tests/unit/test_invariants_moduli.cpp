#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "dblbrauer/invariants.hpp"
#include "dblbrauer/moduli.hpp"

using namespace dblbrauer;

namespace {

// p-cyclic cover of the plane branched along a smooth curve of degree pd:
// chi_top = 3p - (p-1)(2 - 2g), K = pullback of O(-3 + (p-1)d), and
// Noether gives 1 + h20 = (K^2 + chi_top) / 12.
struct Oracle {
  std::int64_t b2, h20;
};

Oracle cover_oracle(std::int64_t p, std::int64_t d) {
  const std::int64_t g = (p * d - 1) * (p * d - 2) / 2;
  const std::int64_t chi = 3 * p - (p - 1) * (2 - 2 * g);
  const std::int64_t k = -3 + (p - 1) * d;
  const std::int64_t k2 = p * k * k;
  EXPECT_EQ((k2 + chi) % 12, 0);
  return {chi - 2, (k2 + chi) / 12 - 1};
}

std::vector<std::vector<int>> naive_partitions(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> go = [&](int left, int maxp) {
    if (left == 0) {
      bool same = true;
      for (int x : cur) same = same && (x - cur[0]) % 2 == 0;
      if (same) out.push_back(cur);
      return;
    }
    for (int x = std::min(left, maxp); x >= 1; --x) {
      cur.push_back(x);
      go(left - x, x);
      cur.pop_back();
    }
  };
  go(e, e);
  return out;
}

bool in_listed_family(const std::vector<int>& p) {
  auto all = [&](std::size_t from, int v) {
    for (std::size_t i = from; i < p.size(); ++i)
      if (p[i] != v) return false;
    return true;
  };
  return all(0, 1) || all(0, 2) || (p[0] == 3 && all(1, 1)) || p.size() == 1;
}

}  // namespace

TEST(Invariants, Examples) {
  auto a = hodge_invariants(2, 3);
  EXPECT_EQ(a.h01, 0);
  EXPECT_EQ(a.h20, 1);
  EXPECT_EQ(a.b2, 22);
  EXPECT_EQ(a.genus, 10);
  auto b = hodge_invariants(2, 1);
  EXPECT_EQ(std::tuple(b.h01, b.h20, b.b2, b.genus), std::tuple(0, 0, 2, 0));
  auto c = hodge_invariants(3, 1);
  EXPECT_EQ(std::tuple(c.h01, c.h20, c.b2, c.genus), std::tuple(0, 0, 7, 1));
  EXPECT_EQ(brauer_p_rank(2, 3, 1), 21);
  EXPECT_EQ(brauer_p_rank(2, 3, 22), 0);
  EXPECT_EQ(brauer_p_rank(3, 1, 7), 0);
  EXPECT_THROW(hodge_invariants(4, 1), domain_error);
}

TEST(Invariants, MatchEulerCharacteristicAndNoether) {
  for (std::int64_t p : {2, 3, 5, 7})
    for (std::int64_t d = 1; d <= 5; ++d) {
      auto v = hodge_invariants(p, d);
      auto o = cover_oracle(p, d);
      EXPECT_EQ(v.h01, 0);
      EXPECT_EQ(v.b2, o.b2) << p << " " << d;
      EXPECT_EQ(v.h20, o.h20) << p << " " << d;
      EXPECT_EQ((v.b2 - 1) % (p - 1), 0);
      EXPECT_EQ(v.b2, 1 + (p - 1) * (1 + (p * d - 1) * (p * d - 2)));
    }
}

TEST(Invariants, TwoTorsionBudget) {
  auto a = two_torsion_budget(3, 1);
  EXPECT_EQ(std::tuple(a.source, a.kernel, a.image), std::tuple(21, 0, 21));
  auto b = two_torsion_budget(3, 22);
  EXPECT_EQ(std::tuple(b.source, b.kernel, b.image), std::tuple(21, 21, 0));
  auto c = two_torsion_budget(1, 1);
  EXPECT_EQ(std::tuple(c.source, c.kernel, c.image), std::tuple(1, 0, 1));
  for (int d = 1; d <= 6; ++d)
    for (int rho = 1; rho <= 2 + 2 * int(choose2(2 * d - 1)); ++rho) {
      auto t = two_torsion_budget(d, rho);
      EXPECT_EQ(t.source, t.kernel + t.image);
    }
}

TEST(Moduli, TableCounts) {
  const std::vector<std::pair<std::string, std::int64_t>> rows{
      {"6", 19}, {"4,2", 18}, {"2,2,2", 19}, {"5,1", 18}, {"3,3", 18}, {"3,1,1,1", 19}, {"1,1,1,1,1,1", 19}};
  for (auto& [s, n] : rows) {
    std::vector<int> parts;
    for (char ch : s)
      if (ch != ',') parts.push_back(ch - '0');
    auto r = moduli_dim(6, parts);
    EXPECT_EQ(r.dim_l, n) << s;
    EXPECT_EQ(r.generic, n == 19) << s;
  }
  EXPECT_EQ(curve_moduli_dim(6), 19);
  EXPECT_THROW(moduli_dim(6, {4, 1, 1}), domain_error);
  EXPECT_THROW(moduli_dim(6, {3, 2, 1}), domain_error);
}

TEST(Moduli, EnumerationMatchesNaive) {
  std::int64_t total = 0;
  for (int e = 1; e <= 24; ++e) {
    std::set<std::vector<int>> mine;
    for_each_parity_partition(e, [&](const std::vector<int>& p) { EXPECT_TRUE(mine.insert(p).second); });
    auto naive = naive_partitions(e);
    EXPECT_EQ(mine, std::set<std::vector<int>>(naive.begin(), naive.end())) << e;
    total += std::int64_t(naive.size());
  }
  EXPECT_EQ(verify_combinatorics(24).partitions, total);
}

TEST(Moduli, BoundAndEqualityCases) {
  for (int e = 1; e <= 16; ++e)
    for (auto& p : naive_partitions(e)) {
      auto r = moduli_dim(e, p);
      EXPECT_LE(r.dim_l, curve_moduli_dim(e)) << e << " " << partition_string(p);
      EXPECT_EQ(r.dim_l == curve_moduli_dim(e), in_listed_family(p)) << e << " " << partition_string(p);
    }
  auto rep = verify_combinatorics(6);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(std::set<std::string>(rep.equality_sets[6].begin(), rep.equality_sets[6].end()),
            (std::set<std::string>{"6", "3+1+1+1", "2+2+2", "1+1+1+1+1+1"}));
  auto one = verify_combinatorics(1);
  EXPECT_EQ(one.partitions, 1);
  EXPECT_EQ(one.equality_cases, 1);
  EXPECT_EQ(one.overlaps, 1);
  EXPECT_TRUE(verify_combinatorics(24).ok());
}

TEST(Moduli, BracketIdentityOnRandomPartitions) {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const int e = 1 + int(rng() % 30);
    auto all = naive_partitions(e);
    auto& p = all[rng() % all.size()];
    auto b = bracket_terms(e, p);
    EXPECT_TRUE(b.consistent()) << e << " " << partition_string(p);
    EXPECT_EQ(b.gap, curve_moduli_dim(e) - moduli_dim(e, p).dim_l);
    EXPECT_GE(b.multiplicity, 0);
  }
}

TEST(Moduli, EpsilonCases) {
  auto a = epsilon_case(6, 0);
  EXPECT_EQ(a.bundles, "Jac(C)[2]");
  EXPECT_EQ(a.generic_partitions, std::vector<std::string>{"2+2+2"});
  auto b = epsilon_case(6, 1);
  EXPECT_EQ(b.bundles, "theta characteristics");
  ASSERT_EQ(b.generic_partitions.size(), 2u);
  EXPECT_EQ(b.generic_partitions[0].rfind("1+1+1+1+1+1", 0), 0u);
  EXPECT_EQ(b.generic_partitions[1].rfind("3+1+1+1", 0), 0u);
  EXPECT_EQ(epsilon_case(5, 0).bundles, "theta characteristics");
  EXPECT_THROW(epsilon_case(5, 1), domain_error);
  EXPECT_THROW(epsilon_case(6, 2), domain_error);
}

TEST(Moduli, CatalogRows) {
  auto rows = k3_catalog();
  ASSERT_EQ(rows.size(), 7u);
  for (auto& r : rows) EXPECT_EQ(r.count, moduli_dim(6, r.parts).dim_l);
  auto find = [&](const std::string& s) {
    for (auto& r : rows)
      if (partition_string(r.parts) == s) return r;
    return CatalogRow{};
  };
  auto ones = find("1+1+1+1+1+1");
  EXPECT_EQ(ones.count, 19);
  EXPECT_EQ(ones.square, "𝓞_C(1)");
  EXPECT_EQ(ones.bundle, "(2,1) ⊂ ℙ⁵×ℙ²");
  auto five = find("5+1");
  EXPECT_EQ(five.count, 18);
  EXPECT_EQ(five.square, "𝓞_C(1)");
  EXPECT_EQ(five.bundle, "X");
}
