#include <gtest/gtest.h>

#include "dblbrauer/polycore.hpp"
#include "dblbrauer/valuation/factor_form.hpp"

using namespace dblbrauer;

namespace {

template <class K>
MPoly<K> P(const char* s, const K& k) {
  return parse_poly(s, k);
}

// Cofactor expansion along the first row; the oracle for Bareiss.
template <class K>
MPoly<K> cofactor_det(const PolyMatrix<K>& m, const K& k) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly<K>::constant(k, 1);
  MPoly<K> s(k);
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix<K> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly<K>> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(row);
    }
    MPoly<K> t = m[0][c] * cofactor_det(sub, k);
    s = c % 2 ? s - t : s + t;
  }
  return s;
}

MPoly<PrimeField> random_poly(const PrimeField& k, Rng& rng, int terms, unsigned deg) {
  MPoly<PrimeField> p(k);
  for (int i = 0; i < terms; ++i) {
    std::array<unsigned, 4> e{unsigned(rng() % (deg + 1)), unsigned(rng() % (deg + 1)), unsigned(rng() % (deg + 1)), 0};
    p += MPoly<PrimeField>::monomial(k, Monomial::from_exponents(e), k.random(rng));
  }
  return p;
}

}  // namespace

TEST(Parse, CubicHasFourTerms) {
  RationalField Q;
  auto p = P("3*x*y*z - x^3 - y^3 - z^3", Q);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.total_degree(), 3);
}

TEST(Parse, ZeroAndCancellation) {
  RationalField Q;
  EXPECT_TRUE(P("0", Q).is_zero());
  EXPECT_EQ(P("x^2 - (x^2 - y)", Q), P("y", Q));
}

TEST(Parse, RoundTrip) {
  PrimeField F(13);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(F, rng, 5, 3);
    EXPECT_EQ(parse_poly(to_string(p), F), p);
  }
  GaussianRationalField G;
  auto g = P("(3+2*i)*x - (1-1*i)*1/3*y", G);
  EXPECT_EQ(parse_poly(to_string(g), G), g);
}

TEST(Parse, SyntaxErrorThrows) {
  RationalField Q;
  EXPECT_THROW(P("3*x +* y", Q), parse_error);
  EXPECT_THROW(P("x^", Q), parse_error);
}

TEST(Arith, GcdAndExactDiv) {
  RationalField Q;
  EXPECT_EQ(gcd(P("x^2-y^2", Q), P("x-y", Q)).make_monic(), P("x-y", Q));
  auto a = P("x^3 + y^3 + z^3 - 3*x*y*z", Q), b = P("x+y+z", Q);
  auto q = a.exact_div(b);
  EXPECT_EQ(q, P("x^2+y^2+z^2-x*y-y*z-x*z", Q));
  EXPECT_EQ(q * b, a);
  EXPECT_FALSE(P("x^2+1", Q).try_exact_div(P("x+y", Q)).has_value());
  EXPECT_EQ(P("x^2*y", Q).derivative(Var::x), P("2*x*y", Q));
}

TEST(Arith, ExactDivProperty) {
  PrimeField F(13);
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    auto a = random_poly(F, rng, 4, 2), b = random_poly(F, rng, 3, 2);
    if (b.is_zero()) continue;
    EXPECT_EQ((a * b).exact_div(b), a);
  }
}

TEST(Arith, GcdOverFp) {
  PrimeField F(13);
  auto g = gcd(P("(x+y)*(x^2+z^2)*(y-z)", F), P("(x+y)*(y-z)*(x^3+z*y^2)", F));
  EXPECT_EQ(g.make_monic(), P("(x+y)*(y-z)", F).make_monic());
}

TEST(Determinant, WorkedMatrix) {
  RationalField Q;
  PolyMatrix<RationalField> m{{P("x", Q), P("z", Q), P("y", Q)}, {P("z", Q), P("y", Q), P("x", Q)}, {P("y", Q), P("x", Q), P("z", Q)}};
  EXPECT_EQ(determinant(m, Q), P("3*x*y*z - x^3 - y^3 - z^3", Q));
  FormMatrix<RationalField> f(m, Q);
  EXPECT_EQ(minor(f, 3, 3), P("x*y - z^2", Q));
  EXPECT_EQ(principal_minor(f, 1), P("x", Q));
  EXPECT_EQ(principal_minor(f, 3), determinant(f));
}

TEST(Determinant, TrivialCases) {
  PrimeField F(13);
  PolyMatrix<PrimeField> id{{P("1", F), P("0", F)}, {P("0", F), P("1", F)}};
  EXPECT_TRUE(determinant(id, F).is_one());
  PolyMatrix<PrimeField> zr{{P("x", F), P("y", F)}, {P("0", F), P("0", F)}};
  EXPECT_TRUE(determinant(zr, F).is_zero());
  FormMatrix<PrimeField> one({{P("x", F)}}, F);
  EXPECT_TRUE(minor(one, 1, 1).is_one());
  FormMatrix<PrimeField> d({{P("x", F), P("0", F), P("0", F)}, {P("0", F), P("y", F), P("0", F)}, {P("0", F), P("0", F), P("z", F)}}, F);
  EXPECT_EQ(minor(d, 3, 3), P("x*y", F));
  FormMatrix<PrimeField> q({{P("1", F), P("1", F)}, {P("1", F), P("2", F)}}, F);
  EXPECT_TRUE(principal_minor(q, 2).is_one());
}

TEST(Determinant, NonSymmetricRejected) {
  PrimeField F(13);
  EXPECT_THROW((FormMatrix<PrimeField>({{P("x", F), P("y", F)}, {P("z", F), P("x", F)}}, F)), domain_error);
}

TEST(Determinant, BareissMatchesCofactorExpansion) {
  PrimeField F(13);
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 4;
    PolyMatrix<PrimeField> m(n);
    for (auto& r : m)
      for (std::size_t j = 0; j < n; ++j) r.push_back(random_poly(F, rng, 2, 1));
    ASSERT_EQ(determinant(m, F), cofactor_det(m, F)) << "trial " << t;
  }
}

TEST(Resultant, Examples) {
  RationalField Q;
  auto r = resultant(P("y-x", Q), P("y+x", Q), Var::y);
  EXPECT_EQ(r.make_monic(), P("x", Q));
  EXPECT_EQ(r.total_degree(), 1);
  EXPECT_TRUE(resultant(P("y-x^2", Q), P("y-x^2", Q), Var::y).is_zero());
  auto f = P("y-x^2", Q), g = P("y", Q), h = P("y-1", Q);
  auto lhs = resultant(f, g * h, Var::y), rhs = resultant(f, g, Var::y) * resultant(f, h, Var::y);
  EXPECT_TRUE(lhs == rhs || lhs == -rhs);
}

TEST(Resultant, MultiplicativeProperty) {
  PrimeField F(13);
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    auto f = random_poly(F, rng, 3, 2) + P("y^2", F);
    auto g = random_poly(F, rng, 3, 1) + P("y", F);
    auto h = random_poly(F, rng, 3, 1) + P("y", F);
    auto lhs = resultant(f, g * h, Var::y), rhs = resultant(f, g, Var::y) * resultant(f, h, Var::y);
    EXPECT_TRUE(lhs == rhs || lhs == -rhs) << to_string(f) << " ; " << to_string(g) << " ; " << to_string(h);
  }
}

TEST(Factor, UnivariateExamples) {
  PrimeField F(13);
  auto fac = [&](const char* s) { return univariate_factor(UPoly<PrimeField>::from_mpoly(P(s, F), Var::t)); };
  auto a = fac("t^2+1");
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(to_string(a[0].poly, 't'), "t + 5");
  EXPECT_EQ(to_string(a[1].poly, 't'), "t - 5");
  auto b = fac("t^2-1");
  ASSERT_EQ(b.size(), 2u);
  auto c = fac("t^4");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].multiplicity, 4);
}

TEST(Factor, UnivariateProductProperty) {
  PrimeField F(13);
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    UPoly<PrimeField> f = UPoly<PrimeField>::monomial(F, 6, F.one());
    for (int d = 0; d < 6; ++d) f = f + UPoly<PrimeField>::monomial(F, d, F.random(rng));
    auto fs = univariate_factor(f);
    UPoly<PrimeField> prod = UPoly<PrimeField>::constant(F, F.one());
    for (auto& x : fs) {
      EXPECT_TRUE(is_irreducible(x.poly));
      prod = prod * x.poly.pow(unsigned(x.multiplicity));
    }
    EXPECT_EQ(prod, f.monic());
  }
}

TEST(Factor, PlaneFormsOverFp) {
  PrimeField F(13);
  Rng rng(3);
  auto fs = factor_form(P("x^2+y^2", F), rng);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].total_degree(), 1);
  for (int t = 0; t < 25; ++t) {
    MPoly<PrimeField> a(F), b(F);
    for (Var v : {Var::x, Var::y, Var::z}) {
      a += MPoly<PrimeField>::variable(F, v).scaled(F.random(rng));
      b += (MPoly<PrimeField>::variable(F, v) * MPoly<PrimeField>::variable(F, Var::z)).scaled(F.random(rng));
    }
    b += P("x^2+2*y^2", F);
    if (a.is_zero()) continue;
    auto g = factor_form(a * b, rng);
    MPoly<PrimeField> prod = MPoly<PrimeField>::constant(F, 1);
    for (auto& h : g) prod = prod * h;
    EXPECT_EQ(prod.make_monic(), (a * b).make_monic());
    EXPECT_GE(g.size(), 2u);
  }
}
