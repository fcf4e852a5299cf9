#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pvi/lattice.hpp"

using namespace pvi;

namespace {

ExactScalar q(long n, long d = 1) {
  ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

LatticePoint P(std::array<int, 6> a) { return LatticePoint(a); }

}  // namespace

TEST(LatticePoint, ZeroSumEnforced) {
  EXPECT_THROW(P({1, 0, 0, 0, 0, 0}), Error);
  EXPECT_EQ(LatticePoint::root(4, 1), P({-1, 0, 0, 1, 0, 0}));
  EXPECT_EQ(P({1, 2, -3, 0, 0, 0})[3], -3);
  EXPECT_EQ(LatticePoint::from_parts({1, 0, 0}, {0, 0, -1}), P({1, 0, 0, 0, 0, -1}));
}

TEST(Ball, MatchesBruteForceEnumeration) {
  for (int r = 0; r <= 2; ++r) {
    auto b = ball(r);
    auto brute = oracle::ball_brute(r);
    ASSERT_EQ(b.size(), brute.size()) << r;
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(b[i].data(), brute[i]);
  }
  EXPECT_EQ(ball(0).size(), 1u);
  EXPECT_EQ(ball(1).size(), 31u);
  EXPECT_EQ(ball(2).size(), 271u);
  EXPECT_THROW(ball(-1), Error);
}

TEST(Moves, CountAndValidity) {
  EXPECT_EQ(all_moves().size(), 60u);  // 3 choices of j, then ordered i != k from the other 5
  EXPECT_THROW(MoveIJK(4, 1, 1), Error);
  EXPECT_THROW(MoveIJK(4, 4, 1), Error);
  EXPECT_NO_THROW(MoveIJK(4, 2, 1));
}

TEST(Weight, Examples) {
  EXPECT_EQ(r_weight(P({0, 0, 0, 0, 0, 0})), 0);
  EXPECT_EQ(r_weight(LatticePoint::root(1, 2)), -1);
  EXPECT_EQ(r_weight(LatticePoint::root(4, 1)), 0);
  EXPECT_EQ(r_weight(P({-2, 0, 0, 0, 0, 2})), 0);
  EXPECT_EQ(r_weight(P({-1, -1, 0, 1, 1, 0})), 0);
}

TEST(Weight, IntegralOnLattice) {
  for (const auto& p : ball(2)) EXPECT_EQ(r_weight(p).get_den(), 1) << p.to_string();
}

TEST(C5C6, Examples) {
  EXPECT_EQ(c5_c6(P({0, 0, 0, 0, 0, 0})), std::make_pair(q(0), q(0)));
  auto [c5, c6] = c5_c6(P({1, 0, -1, 0, 0, 0}));
  EXPECT_EQ(c5, -1);
  EXPECT_EQ(c6, 0);
  for (const auto& p : ball(2))
    if (p[1] == p[3]) EXPECT_EQ(c5_c6(p).first, 0);
}

TEST(NCoeff, Examples) {
  LatticePoint zero;
  EXPECT_EQ(n_coeff(zero, MoveIJK(4, 2, 1)), 0);
  for (const auto& p : ball(1))
    for (int i = 1; i <= 6; ++i)
      for (int k = 1; k <= 6; ++k)
        if (MoveIJK::valid(i, 3, k)) EXPECT_EQ(n_coeff(p, MoveIJK(i, 3, k)), 0);
  LatticePoint p = LatticePoint::root(4, 5);
  EXPECT_EQ(n_coeff(p, MoveIJK(4, 1, 2)), r_weight(p + LatticePoint::root(4, 2)) - r_weight(p));
}

TEST(GH, Rows) {
  UniPoly t = UniPoly::t();
  EXPECT_EQ(gh_polys(MoveIJK(4, 1, 5), 2), std::make_pair(UniPoly(), UniPoly(2)));
  EXPECT_EQ(gh_polys(MoveIJK(4, 2, 5), 0), std::make_pair(-t, UniPoly()));
  EXPECT_EQ(gh_polys(MoveIJK(4, 2, 5), 3), std::make_pair(-t, UniPoly(3) * (t - UniPoly(1))));
  EXPECT_EQ(gh_polys(MoveIJK(4, 3, 5), 7).second, UniPoly());
  // g_j = t(t-1) d/dt log(b_j/(t(t-1))) with b = t(t-1), t, -t^2.
  EXPECT_EQ(gh_polys(MoveIJK(4, 3, 5), 7).first, UniPoly(-1));
}

TEST(GH, FirstOrderOnBall) {
  for (const auto& p : ball(2))
    for (const auto& m : all_moves()) {
      auto [G, H] = big_GH(p, m);
      EXPECT_LE(G.degree(), 1);
      EXPECT_LE(H.degree(), 1);
    }
}

TEST(GH, AtOriginAgainstDirectEvaluation) {
  MoveIJK m(4, 1, 5);
  LatticePoint a;
  auto c = [](const LatticePoint& p) { return c5_c6(p); };
  auto ca = c(a), cik = c(a.moved(4, 5)), cij = c(a.moved(4, 1)), cjk = c(a.moved(1, 5));
  auto [g, h] = gh_polys(m, n_coeff(a, m));
  UniPoly omt = UniPoly(1) - UniPoly::t();
  UniPoly G = g - UniPoly(ExactScalar(cij.first + cjk.first - cik.first - ca.first)) * omt -
              UniPoly(ExactScalar((cij.second + cjk.second - cik.second - ca.second) / 2));
  UniPoly H = UniPoly(ExactScalar(ca.first - cik.first)) * omt + UniPoly(ExactScalar((ca.second - cik.second) / 2)) + h;
  EXPECT_EQ(big_GH(a, m), std::make_pair(G, H));
}

TEST(SignEps, Examples) {
  EXPECT_EQ(sign_eps(1, {5, 3, 1}), 1);
  EXPECT_EQ(sign_eps(2, {1, 0, 0}), -1);
  EXPECT_EQ(sign_eps(3, {1, 1, 0}), 1);
  EXPECT_EQ(sign_eps(3, {1, 0, 0}), -1);
}

TEST(E0, Translate) {
  auto [p0, s0] = e0_translate(LatticePoint());
  EXPECT_EQ(p0, P({1, 1, 1, -1, -1, -1}));
  EXPECT_EQ(s0, 1);
  auto [p1, s1] = e0_translate(P({0, 1, -1, 0, 0, 0}));
  EXPECT_EQ(p1, P({1, 2, 0, -1, -1, -1}));
  EXPECT_EQ(s1, -1);
  for (const auto& p : ball(2)) EXPECT_EQ(r_weight(e0_translate(p).first), r_weight(p));
}
