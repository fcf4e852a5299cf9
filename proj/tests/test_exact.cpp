#include <gtest/gtest.h>

#include "pvi/exact.hpp"

using namespace pvi;

namespace {

ExactScalar q(long n, long d = 1) {
  ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

UniPoly up(std::initializer_list<long> c) {
  std::vector<ExactScalar> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(v);
}

}  // namespace

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(parse_scalar("3/6"), q(1, 2));
  EXPECT_EQ(parse_scalar("-4"), q(-4));
  EXPECT_EQ(to_string(q(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(q(5)), "5");
  EXPECT_THROW(parse_scalar("1/0"), Error);
  EXPECT_THROW(parse_scalar("abc"), Error);
  EXPECT_THROW(parse_scalar(""), Error);
}

TEST(Scalar, Power) {
  EXPECT_EQ(pow(q(2, 3), 3L), q(8, 27));
  EXPECT_EQ(pow(q(2, 3), -2L), q(9, 4));
  EXPECT_EQ(pow(q(0), 0L), q(1));
  EXPECT_THROW(pow(q(0), -1L), Error);
}

TEST(UniPoly, RingExamples) {
  UniPoly t = UniPoly::t();
  EXPECT_EQ((t + UniPoly(1)) * (t - UniPoly(1)), up({-1, 0, 1}));
  UniPoly p = up({3, 0, -2, 7});
  EXPECT_EQ(UniPoly() + p, p);
  EXPECT_EQ(UniPoly::monomial(q(1, 2), 1) * UniPoly(q(2, 3)), UniPoly::monomial(q(1, 3), 1));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
}

TEST(UniPoly, Derivative) {
  EXPECT_EQ(UniPoly::monomial(1, 3).derivative(), UniPoly::monomial(3, 2));
  EXPECT_TRUE(UniPoly(7).derivative().is_zero());
}

TEST(UniPoly, DivmodReconstructs) {
  UniPoly a = up({5, -1, 0, 3, 2}), d = up({1, 0, 3});
  UniPoly qq, r;
  UniPoly::divmod(a, d, qq, r);
  EXPECT_EQ(qq * d + r, a);
  EXPECT_LT(r.degree(), d.degree());
  EXPECT_THROW(UniPoly::divmod(a, UniPoly(), qq, r), Error);
}

TEST(UniPoly, GcdIsMonicCommonFactor) {
  UniPoly f = up({-1, 1}) * up({2, 1});  // (t-1)(t+2)
  UniPoly g = up({-1, 1}) * up({5, 0, 1});
  EXPECT_EQ(gcd(f * UniPoly(3), g), up({-1, 1}));
  EXPECT_TRUE(gcd(UniPoly(), UniPoly()).is_zero());
  EXPECT_EQ(gcd(up({2, 1}), up({3, 1})), UniPoly(1));
}

TEST(UniPoly, Eval) { EXPECT_EQ(up({1, 2, 3}).eval(q(1, 2)), q(11, 4)); }

TEST(Laurent, DerivativeOfInverse) {
  LaurentPoly inv = LaurentPoly::monomial(1, -1);
  EXPECT_EQ(inv.derivative(), LaurentPoly::monomial(-1, -2));
}

TEST(Laurent, TrimmedStorage) {
  LaurentPoly p(-2, {q(0), q(1), q(0), q(2), q(0)});
  EXPECT_EQ(p.min_degree(), -1);
  EXPECT_EQ(p.max_degree(), 1);
  EXPECT_EQ(p.term_count(), 2u);
  EXPECT_EQ(p.coeff(0), 0);
  EXPECT_EQ(p.coeff(1), 2);
  LaurentPoly z(3, {q(0), q(0)});
  EXPECT_TRUE(z.is_zero());
}

TEST(Laurent, ExactDivide) {
  LaurentPoly t2m1(0, {q(-1), q(0), q(1)});
  LaurentPoly tm1(0, {q(-1), q(1)});
  EXPECT_EQ(exact_divide(t2m1, tm1), LaurentPoly(0, {q(1), q(1)}));
  LaurentPoly t2p1(0, {q(1), q(0), q(1)});
  EXPECT_EQ(exact_divide(t2p1, LaurentPoly::monomial(1, 1)), LaurentPoly(-1, {q(1), q(0), q(1)}));
  try {
    exact_divide(t2p1, tm1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
  }
  EXPECT_THROW(exact_divide(t2p1, LaurentPoly()), Error);
}

TEST(Laurent, ProductMatchesTermwise) {
  LaurentPoly a(-2, {q(1), q(-3), q(0), q(1, 2)});
  LaurentPoly b(1, {q(2), q(5)});
  LaurentPoly c = a * b;
  for (int k = -3; k <= 5; ++k) {
    ExactScalar s = 0;
    for (int i = -2; i <= 1; ++i) s += a.coeff(i) * b.coeff(k - i);
    EXPECT_EQ(c.coeff(k), s) << k;
  }
}

TEST(Rational, Canonical) {
  UniPoly t = UniPoly::t();
  RationalFunction f(UniPoly(2) * (t * t - UniPoly(1)), UniPoly(4) * (t - UniPoly(1)));
  EXPECT_EQ(f.num(), up({1, 1}) * UniPoly(q(1, 2)));
  EXPECT_EQ(f.den(), UniPoly(1));
  EXPECT_EQ(RationalFunction(UniPoly(), t).den(), UniPoly(1));
  EXPECT_THROW(RationalFunction(t, UniPoly()), Error);
}

TEST(Rational, FieldOperations) {
  UniPoly t = UniPoly::t();
  RationalFunction a(UniPoly(1), t), b(t, t + UniPoly(1));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.derivative(), RationalFunction(UniPoly(-1), t * t));
  EXPECT_THROW(a / RationalFunction(), Error);
}

TEST(Rational, QuotientRuleAgainstDefinition) {
  UniPoly t = UniPoly::t();
  UniPoly n = up({1, -2, 0, 3}), d = up({2, 1, 1});
  RationalFunction f(n, d);
  RationalFunction expected(n.derivative() * d - n * d.derivative(), d * d);
  EXPECT_EQ(f.derivative(), expected);
}

TEST(Rational, ComposeMobius) {
  // p(t) = t^2 + t^-1 at t -> 1 - t
  LaurentPoly p(-1, {q(1), q(0), q(0), q(1)});
  RationalFunction got = compose_mobius(p, -1, 1, 0, 1);
  UniPoly s = up({1, -1});
  RationalFunction expected = RationalFunction(s * s) + RationalFunction(UniPoly(1), s);
  EXPECT_EQ(got, expected);
}

TEST(TriPoly, ProductAndPartials) {
  TriPoly x = TriPoly::variable(0), y = TriPoly::variable(1), z = TriPoly::variable(2);
  TriPoly p = x * x * y + TriPoly(3) * z;
  EXPECT_EQ(p.partial(0), TriPoly(2) * x * y);
  EXPECT_EQ(p.partial(2), TriPoly(3));
  EXPECT_EQ(p.euler(), TriPoly(3) * x * x * y + TriPoly(3) * z);
  EXPECT_EQ(p.permuted({1, 0, 2}), y * y * x + TriPoly(3) * z);
  EXPECT_TRUE((p - p).is_zero());
}
