#include <gtest/gtest.h>

#include "dblbrauer/clifford.hpp"

using namespace dblbrauer;

namespace {

using R = RatFn<PrimeField>;
using FM = FormMatrix<PrimeField>;

struct Clifford : ::testing::Test {
  PrimeField F{13};
  Rng rng{5};

  MPoly<PrimeField> P(const char* s) { return parse_poly(s, F); }
  R Rf(const char* n, const char* d = "1") { return R(P(n), P(d)); }

  MPoly<PrimeField> random_linear(bool only_x) {
    MPoly<PrimeField> e(F);
    for (Var v : {Var::x, Var::y, Var::z}) {
      if (only_x && v != Var::x) continue;
      e += MPoly<PrimeField>::variable(F, v).scaled(F.random(rng));
    }
    return e;
  }

  // linear symmetric matrix whose first k rows vanish along V(x), then a
  // random constant congruence; nullopt when singular
  std::optional<FM> valued_matrix(std::size_t n) {
    const std::size_t k = rng() % n;
    FM m(F, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.set(i, j, random_linear(i < k || j < k));
    ConstMatrix<PrimeField> p(n);
    for (auto& r : p)
      for (std::size_t j = 0; j < n; ++j) r.push_back(F.random(rng));
    m = m.congruent(p);
    if (determinant(m).is_zero()) return std::nullopt;
    return m;
  }
};

}  // namespace

TEST_F(Clifford, HyperbolicPlaneNeedsBasisChange) {
  FM h({{P("0"), P("1")}, {P("1"), P("0")}}, F);
  auto l = ensure_principal_minors(h, rng);
  EXPECT_FALSE(l.identity_change());
  ASSERT_EQ(l.minors.size(), 2u);
  EXPECT_FALSE(l.minors[0].is_zero());
  // det changes by a square, so M_2 = -1 times a square; the change
  // e1 -> e1 + e2 is the one worked by hand
  ConstMatrix<PrimeField> p{{F.one(), F.zero()}, {F.one(), F.one()}};
  auto l2 = ensure_principal_minors(h.congruent(p), rng);
  EXPECT_TRUE(l2.identity_change());
  EXPECT_EQ(l2.minors[0], R::constant(F, F.from_int(2)));
  EXPECT_EQ(l2.minors[1], R::constant(F, -F.one()));
  auto d = diagonalize(l2);
  EXPECT_EQ(d[0], R::constant(F, F.from_int(2)));
  EXPECT_EQ(d[1], R::constant(F, -F.one() / F.from_int(2)));
}

TEST_F(Clifford, GoodMatricesKeepTheirBasis) {
  FM a({{P("1"), P("1")}, {P("1"), P("2")}}, F);
  auto la = ensure_principal_minors(a, rng);
  EXPECT_TRUE(la.identity_change());
  EXPECT_EQ(diagonalize(la), (DiagonalForm<PrimeField>{R::one(F), R::one(F)}));
  FM id({{P("1"), P("0"), P("0")}, {P("0"), P("1"), P("0")}, {P("0"), P("0"), P("1")}}, F);
  EXPECT_EQ(diagonalize(ensure_principal_minors(id, rng)), (DiagonalForm<PrimeField>(3, R::one(F))));
  FM uv({{P("x"), P("0")}, {P("0"), P("y")}}, F);
  auto lu = ensure_principal_minors(uv, rng);
  EXPECT_TRUE(lu.identity_change());
  EXPECT_EQ(lu.minors[1], lu.minors[0] * (diagonalize(lu)[1]));
  EXPECT_EQ(determinant(lu.matrix), P("x*y"));
}

TEST_F(Clifford, SingularRejected) {
  FM s({{P("x^2"), P("x*y")}, {P("x*y"), P("y^2")}}, F);
  EXPECT_THROW(ensure_principal_minors(s, rng), domain_error);
}

TEST_F(Clifford, SymbolsOfDiagonalForms) {
  R a = Rf("x", "z"), b = Rf("y", "z"), c = Rf("x+y", "z");
  EXPECT_EQ(clifford_symbols(DiagonalForm<PrimeField>{a, b}).terms().size(), 1u);
  EXPECT_EQ(clifford_symbols(DiagonalForm<PrimeField>{a, b, c}).terms().size(), 3u);
  EXPECT_TRUE(simplify(clifford_symbols(DiagonalForm<PrimeField>{R::one(F), R::one(F)})).empty());
  EXPECT_THROW(clifford_symbols(DiagonalForm<PrimeField>{a, R(F)}), domain_error);
}

TEST_F(Clifford, ResidueOfUnitTimesUniformizer) {
  auto lx = PlaneCurve<PrimeField>::certify(P("x"), rng);
  FM m({{P("y+z"), P("0")}, {P("0"), P("x*(y+2*z)")}}, F);
  auto l = ensure_principal_minors(m, rng);
  ASSERT_TRUE(l.identity_change());
  auto r = clifford_residue(l, lx);
  auto direct = residue_symbol(clifford_symbols(diagonalize(l)), lx);
  EXPECT_EQ(compare_residues(r, direct, rng), Verdict::trivial);
  EXPECT_EQ(compare_residues(r, ResidueClass<PrimeField>(lx, strip_curve(l.minors[0], lx), 2), rng), Verdict::trivial);
  auto ly = PlaneCurve<PrimeField>::certify(P("y - 3*z"), rng);
  EXPECT_TRUE(clifford_residue(l, ly).is_one());
}

TEST_F(Clifford, PairwiseSymbolOracle) {
  auto lx = PlaneCurve<PrimeField>::certify(P("x"), rng);
  int total = 0, nontrivial = 0;
  for (int t = 0; total < 200; ++t) {
    auto m = valued_matrix(2 + std::size_t(t % 4));
    if (!m) continue;
    auto lad = ensure_principal_minors(*m, rng);
    auto r1 = clifford_residue(lad, lx);
    auto r2 = residue_symbol(clifford_symbols(diagonalize(lad)), lx);
    ++total;
    if (classify_residue(r1, rng) == Verdict::nontrivial) ++nontrivial;
    ASSERT_EQ(compare_residues(r1, r2, rng), Verdict::trivial) << "trial " << t;
  }
  EXPECT_GT(nontrivial, 20);
}

TEST_F(Clifford, AlternateEvenCliffordConstruction) {
  auto lx = PlaneCurve<PrimeField>::certify(P("x"), rng);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = t % 2 ? 5 : 3;
    auto m = valued_matrix(n);
    if (!m) continue;
    auto d = diagonalize(ensure_principal_minors(*m, rng));
    auto a = residue_symbol(clifford_symbols(d), lx), b = residue_symbol(clifford_symbols_alternate(d), lx);
    ASSERT_EQ(compare_residues(a, b, rng), Verdict::trivial) << "trial " << t;
  }
}

TEST_F(Clifford, CongruenceInvariance) {
  auto lx = PlaneCurve<PrimeField>::certify(P("x"), rng);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + std::size_t(t % 4);
    auto m = valued_matrix(n);
    if (!m) continue;
    ConstMatrix<PrimeField> p(n);
    for (auto& r : p)
      for (std::size_t j = 0; j < n; ++j) r.push_back(F.random(rng));
    auto m2 = m->congruent(p);
    if (determinant(m2).is_zero()) continue;
    auto a = residue_symbol(clifford_symbols(diagonalize(ensure_principal_minors(*m, rng))), lx);
    auto b = residue_symbol(clifford_symbols(diagonalize(ensure_principal_minors(m2, rng))), lx);
    ASSERT_EQ(compare_residues(a, b, rng), Verdict::trivial) << "trial " << t;
  }
}

TEST_F(Clifford, NeedsSquareRootOfMinusOne) {
  RationalField Q;
  DiagonalForm<RationalField> d{RatFn<RationalField>(parse_poly("x", Q), parse_poly("z", Q)),
                                RatFn<RationalField>(parse_poly("y", Q), parse_poly("z", Q))};
  EXPECT_THROW(clifford_symbols(d), domain_error);
  GaussianRationalField G;
  DiagonalForm<GaussianRationalField> dg{RatFn<GaussianRationalField>(parse_poly("x", G), parse_poly("z", G)),
                                         RatFn<GaussianRationalField>(parse_poly("y", G), parse_poly("z", G))};
  EXPECT_EQ(clifford_symbols(dg).terms().size(), 1u);
}
