#include <gtest/gtest.h>

#include "dblbrauer/dblcover.hpp"

using namespace dblbrauer;

namespace {

using FM = FormMatrix<PrimeField>;

struct Cover : ::testing::Test {
  PrimeField F{13};
  Rng rng{11};
  MPoly<PrimeField> P(const char* s) { return parse_poly(s, F); }

  // singular F_13-points of f, by exhaustion
  bool has_rational_singular_point(const MPoly<PrimeField>& f) {
    std::vector<MPoly<PrimeField>> g{f, f.derivative(Var::x), f.derivative(Var::y), f.derivative(Var::z)};
    for (int a = 0; a < 13; ++a)
      for (int b = 0; b < 13; ++b)
        for (int c = 0; c < 13; ++c) {
          if (!(a == 1 || (a == 0 && (b == 1 || (b == 0 && c == 1))))) continue;
          std::array<Fp, 4> pt{F.from_int(a), F.from_int(b), F.from_int(c), F.zero()};
          bool all = true;
          for (auto& h : g) all = all && is_zero(h.evaluate(pt));
          if (all) return true;
        }
    return false;
  }

  // returns how many Schur checks applied
  int check_fixture(const char* part, int count) {
    int schur = 0;
    for (int i = 0; i < count; ++i) {
      auto fx = generate_fixture(F, parse_partition(part), rng);
      const auto& r = fx.resolution;
      if (fx.branch.smooth != Smoothness::smooth) {
        ADD_FAILURE() << "fixture is not smooth";
        continue;
      }
      const auto& c = *fx.branch.curve;
      auto au = brauer_class_AU(r, rng);
      auto res = residues_AU(r, c, au, rng);
      EXPECT_TRUE(res.pass()) << part << " #" << i;
      for (auto& v : res.violations) ADD_FAILURE() << v;
      auto cmp = compatibility_check(r, c, rng);
      EXPECT_TRUE(cmp.pass()) << part << " #" << i << ": " << cmp.message;
      if (r.n() > 1) {
        auto neg = compatibility_check(r, c, rng, ResidueMode::tame, std::size_t(1));
        EXPECT_FALSE(neg.divisor_identity) << part << " #" << i;
      }
      for (std::size_t j = 1; j <= r.n(); ++j) EXPECT_TRUE(tangency_check(r, c, j, rng).pass()) << part << " col " << j;
      for (std::size_t k = 1; k < r.n(); ++k) {
        auto mk = au.ladder.poly_minors[k - 1];
        while (auto q = mk.try_exact_div(r.ell)) mk = *q;
        if (mk.is_constant() || !is_squarefree(mk)) continue;
        auto fs = factor_form(mk, rng);
        for (auto& g : fs) {
          auto w = PlaneCurve<PrimeField>::certified_by(g, "factor");
          if (w == c || g.make_monic() == r.ell.make_monic()) continue;
          auto v = minor_valuations(au.ladder, w);
          if (v[k - 1] != 1 || (k >= 2 && v[k - 2] != 0) || v[k] != 0) continue;
          EXPECT_TRUE(schur_square_check(au.ladder, k, w, rng));
          ++schur;
        }
      }
    }
    return schur;
  }
};

}  // namespace

TEST(Worked, DeterminantMinorAndPointOverQ) {
  RationalField Q;
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}}) {
    const mpq_class A(a), B(b);
    auto r = worked_example_resolution(Q, A, B);
    EXPECT_EQ(r.e, 3);
    EXPECT_EQ(r.partition, (std::vector<int>{1, 1, 1}));
    auto x = parse_poly("x", Q), y = parse_poly("y", Q), z = parse_poly("z", Q);
    auto want = (x * y * z).scaled(A * A * A + 2 * B * B * B) - (x.pow(3) + y.pow(3) + z.pow(3)).scaled(A * B * B);
    EXPECT_EQ(r.det(), want);
    EXPECT_EQ(minor(r.matrix, 3, 3), (x * y).scaled(A * A) - z.pow(2).scaled(B * B));
    std::array<mpq_class, 4> p1{B, B, A, mpq_class(0)};
    EXPECT_EQ(r.det().evaluate(p1), 0);
    EXPECT_EQ(minor(r.matrix, 3, 3).evaluate(p1), 0);
  }
}

TEST_F(Cover, WorkedExampleOverF13) {
  auto ones = worked_example_resolution(F, F.one(), F.one());
  auto b1 = branch_curve(ones, rng);
  EXPECT_EQ(b1.det, P("3*x*y*z - x^3 - y^3 - z^3"));
  // x^3 + y^3 + z^3 - 3xyz is a product of three lines once cube roots of unity exist
  EXPECT_EQ(b1.smooth, Smoothness::singular);
  auto r = worked_example_resolution(F, F.from_int(2), F.one());
  auto b2 = branch_curve(r, rng);
  ASSERT_EQ(b2.smooth, Smoothness::smooth);
  const auto& c = *b2.curve;
  EXPECT_TRUE(compatibility_check(r, c, rng).pass());
  EXPECT_TRUE(tangency_check(r, c, 3, rng).pass());
  auto md = divisor_on_curve(RatFn<PrimeField>(minor(r.matrix, 3, 3), r.ell.pow(2)), c, rng);
  EXPECT_TRUE(md.divisible_by(2));
  // P1 = [1:1:2] is one of the points of D
  auto w = weil_divisor(r, c, rng);
  bool found = false;
  for (auto& cl : w.d.clusters()) {
    if (cl.factor.degree() != 1) continue;
    auto X = cl.point[0].eval(F.zero()), Y = cl.point[1].eval(F.zero()), Z = cl.point[2].eval(F.zero());
    if (X == Y && Z == X * F.from_int(2) && !is_zero(X)) found = true;
  }
  EXPECT_TRUE(found);
}

TEST_F(Cover, ResolutionValidation) {
  FM wrong({{P("x^2"), P("x")}, {P("x"), P("y^2")}}, F);
  EXPECT_THROW(new_resolution(wrong, {2, 2}, 0), invalid_resolution);
  FM sing({{P("x^2"), P("x*y")}, {P("x*y"), P("y^2")}}, F);
  EXPECT_THROW(new_resolution(sing, {1, 1}, 0), invalid_resolution);
  EXPECT_THROW(new_resolution(FM({{P("x")}}, F), {0}, 2), invalid_resolution);
  auto ok = new_resolution(FM({{P("x^2+y^2"), P("x*z")}, {P("x*z"), P("y^2-z^2")}}, F), {1, 1}, 0);
  EXPECT_EQ(ok.e, 4);
  EXPECT_EQ(ok.partition, (std::vector<int>{2, 2}));
}

TEST_F(Cover, GeneratedFixtureShapes) {
  auto f = generate_fixture(F, parse_partition("2,2,2"), rng);
  EXPECT_EQ(f.resolution.e, 6);
  EXPECT_EQ(f.resolution.epsilon, 0);
  EXPECT_EQ(f.resolution.partition, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(brauer_class_AU(f.resolution, rng).symbols.terms().size(), 3u);
  auto g = generate_fixture(F, parse_partition("4+2"), rng);
  auto ax = brauer_class_AX(g.resolution, rng);
  EXPECT_EQ(ax.base.symbols.terms().size(), 1u);
  ASSERT_TRUE(ax.pullback_trivial().has_value());
  EXPECT_TRUE(*ax.pullback_trivial());
  auto h = generate_fixture(F, parse_partition("6"), rng);
  EXPECT_TRUE(brauer_class_AU(h.resolution, rng).symbols.empty());
  auto odd = generate_fixture(F, parse_partition("3,1,1,1"), rng);
  EXPECT_EQ(odd.resolution.epsilon, 1);
  EXPECT_THROW(parse_partition("2,x"), parse_error);
  EXPECT_THROW(generate_fixture(F, {2, 1}, rng), domain_error);
}

TEST_F(Cover, SmoothnessMatchesExhaustiveSearch) {
  EXPECT_EQ(plane_curve_smoothness(P("x^6 + y^6 + z^6"), rng).status, Smoothness::smooth);
  auto s = P("(x^3 + y^3 + z^3)^2 + x^6");
  EXPECT_TRUE(has_rational_singular_point(s));
  EXPECT_EQ(plane_curve_smoothness(s, rng).status, Smoothness::singular);
  for (int t = 0; t < 30; ++t) {
    FM m(F, 3);
    for (std::size_t i = 0; i < 3; ++i) m.set(i, i, random_form(F, 2, rng));
    auto d = determinant(m);
    if (d.is_zero()) continue;
    auto st = plane_curve_smoothness(d, rng).status;
    if (has_rational_singular_point(d)) {
      EXPECT_EQ(st, Smoothness::singular);
    }
    // a product of three conics always meets itself
    EXPECT_NE(st, Smoothness::smooth);
  }
}

TEST_F(Cover, FixtureSuite222) { EXPECT_GT(check_fixture("2,2,2", 6), 0); }
TEST_F(Cover, FixtureSuite42) { EXPECT_GT(check_fixture("4,2", 6), 0); }
TEST_F(Cover, FixtureSuite3111) { check_fixture("3,1,1,1", 3); }
TEST_F(Cover, FixtureSuite111111) { check_fixture("1,1,1,1,1,1", 2); }
TEST_F(Cover, FixtureSuite51) { check_fixture("5,1", 3); }
