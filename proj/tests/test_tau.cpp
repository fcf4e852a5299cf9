#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pvi/tau.hpp"

using namespace pvi;

namespace {

ExactScalar q(long n, long d = 1) {
  ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

Mat3 mat(std::array<std::array<long, 3>, 3> a) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = a[i][j];
  return m;
}

FrameMatrix skew_frame() {
  Mat3 m = mat({{{2, -1, 3}, {0, 5, 1}, {1, 1, -4}}});
  m[1][2] = q(1, 2);
  return FrameMatrix(m);
}

std::vector<MuVector> small_mus() {
  std::vector<MuVector> out;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        if (std::abs(a) + std::abs(b) + std::abs(c) <= 4) out.push_back({a, b, c});
  return out;
}

}  // namespace

TEST(Frame, DualIsInverseByCofactors) {
  for (const auto& w : {FrameMatrix::vandermonde(), FrameMatrix::identity(), skew_frame()}) {
    oracle::M3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = w.rows()[i][j];
    auto inv = oracle::inverse3(m);
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a) EXPECT_EQ(w.dual()[j][a], inv[a][j]);
    EXPECT_EQ(w.determinant(), det3(w.rows()));
  }
  EXPECT_EQ(FrameMatrix::vandermonde().determinant(), 2);
}

TEST(Frame, IdentityIsSelfDual) {
  FrameMatrix d = dual_basis(FrameMatrix::identity());
  EXPECT_EQ(d.rows(), FrameMatrix::identity().rows());
}

TEST(Frame, SingularRejected) {
  try {
    FrameMatrix(mat({{{1, 2, 3}, {1, 2, 3}, {0, 0, 1}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularFrame);
  }
}

TEST(Det, EliminationMatchesCofactors) {
  std::vector<std::vector<ExactScalar>> m{{q(2), q(-1), q(0), q(1, 3)},
                                          {q(1), q(4), q(2), q(0)},
                                          {q(0), q(1), q(1), q(5)},
                                          {q(3), q(0), q(-2), q(1)}};
  // Laplace expansion along the first row.
  ExactScalar expect = 0;
  for (int c = 0; c < 4; ++c) {
    oracle::M3 minor;
    for (int i = 1; i < 4; ++i) {
      int cc = 0;
      for (int j = 0; j < 4; ++j)
        if (j != c) minor[i - 1][cc++] = m[i][j];
    }
    Mat3 mm;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mm[i][j] = minor[i][j];
    expect += (c % 2 ? -1 : 1) * m[0][c] * det3(mm);
  }
  EXPECT_EQ(det(m), expect);
}

TEST(Wedge, VacuumIsOne) {
  auto terms = expand_wedge({0, 0, 0}, FrameMatrix::vandermonde());
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].charges, (std::array<int, 3>{0, 0, 0}));
  EXPECT_EQ(terms[0].sign, 1);
  EXPECT_EQ(terms[0].coefficient, 1);
  for (const auto& p : terms[0].partitions) EXPECT_TRUE(p.empty());
}

TEST(Wedge, SingleShiftGivesTwoByTwoMinors) {
  // W(1,0,0): degree 0 is spanned by rows 2 and 3 of the frame; dropping
  // column a leaves charge -1 in component a.
  for (const auto& w : {FrameMatrix::vandermonde(), skew_frame()}) {
    const auto& r = w.rows();
    auto sectors = tau_sectors({1, 0, 0}, w);
    for (int a = 0; a < 3; ++a) {
      int c0 = a == 0 ? 1 : 0, c1 = a == 2 ? 1 : 2;
      ExactScalar minor = oracle::det2(r[1][c0], r[1][c1], r[2][c0], r[2][c1]);
      std::array<int, 3> ch{0, 0, 0};
      ch[a] = -1;
      ASSERT_TRUE(sectors.count(ch));
      TriPoly got = sectors[ch];
      EXPECT_TRUE(got == TriPoly(minor) || got == TriPoly(ExactScalar(-minor))) << a;
    }
    EXPECT_EQ(sectors.size(), 3u);
  }
  auto v = tau_sectors({1, 0, 0}, FrameMatrix::vandermonde());
  EXPECT_EQ(v[(std::array<int, 3>{-1, 0, 0})], TriPoly(6));
}

TEST(Wedge, DoubleShiftGivesFrameEntries) {
  auto w = FrameMatrix::vandermonde();
  auto sectors = tau_sectors({1, 1, 0}, w);
  EXPECT_EQ(sectors.size(), 3u);
  for (int a = 0; a < 3; ++a) {
    std::array<int, 3> ch{-1, -1, -1};
    ch[a] = 0;
    ExactScalar e = w.rows()[2][a];
    EXPECT_TRUE(sectors[ch] == TriPoly(e) || sectors[ch] == TriPoly(ExactScalar(-e)));
  }
}

TEST(Wedge, FullShiftIsSingleConstant) {
  auto terms = expand_wedge({1, 1, 1}, FrameMatrix::vandermonde());
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].charges, (std::array<int, 3>{-1, -1, -1}));
  for (const auto& p : terms[0].partitions) EXPECT_TRUE(p.empty());
  EXPECT_EQ(terms[0].coefficient, 1);
}

TEST(Schur, HookLengthAgreement) {
  std::vector<Partition> parts{{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}, {3, 1}, {2, 2}, {3, 2, 1}, {4, 2, 2, 1}};
  for (const auto& l : parts) EXPECT_EQ(schur_first_times(l), oracle::hook_coefficient(l));
  EXPECT_EQ(schur_first_times({1, 1}), q(1, 2));
  EXPECT_EQ(schur_first_times({4}), q(1, 24));
}

TEST(Bosonize, EmptyPartitionsGiveConstant) {
  WedgeTerm t{{0, 0, 0}, {Partition{}, Partition{}, Partition{}}, -1, q(7)};
  EXPECT_EQ(bosonize(t), TriPoly(-7));
  WedgeTerm u{{0, 0, 0}, {Partition{2}, Partition{}, Partition{1, 1}}, 1, q(3)};
  EXPECT_EQ(bosonize(u), TriPoly::monomial(q(3, 4), {2, 0, 2}));
}

TEST(TauInX, Examples) {
  auto w = FrameMatrix::vandermonde();
  EXPECT_EQ(tau_in_x({0, 0, 0}, {0, 0, 0}, w).poly, TriPoly(1));
  EXPECT_TRUE(tau_in_x({0, 0, 0}, {1, -1, 0}, w).poly.is_zero());
  EXPECT_EQ(tau_in_x({1, 0, 0}, {-1, 0, 0}, w).poly, TriPoly(6));
}

TEST(TauInX, ChargeConstraintAndInvariants) {
  for (const auto& w : {FrameMatrix::vandermonde(), skew_frame()})
    for (const auto& mu : small_mus()) {
      long smu = mu[0] + mu[1] + mu[2];
      for (const auto& [c, poly] : tau_sectors(mu, w)) {
        EXPECT_EQ(c[0] + c[1] + c[2] + smu, 0);
        long R = r_weight_int(LatticePoint::from_parts(c, mu));
        EXPECT_GE(R, 0);
        EXPECT_TRUE(is_homogeneous(poly, R));
        EXPECT_TRUE(is_translation_invariant(poly));
      }
    }
}

TEST(Specialize, Examples) {
  TauPolynomial one{{0, 0, 0}, {0, 0, 0}, TriPoly(1)};
  EXPECT_EQ(specialize_to_t(one).T, LaurentPoly(1));
  TriPoly x1 = TriPoly::variable(0), x2 = TriPoly::variable(1), x3 = TriPoly::variable(2);
  TauPolynomial a{{1, -1, 0}, {0, 0, 0}, x2 - x1};
  TauT ta = specialize_to_t(a);
  EXPECT_EQ(ta.weight, 1);
  EXPECT_EQ(ta.T, LaurentPoly(1));
  TauPolynomial b{{1, -1, 0}, {0, 0, 0}, x3 - x1};
  EXPECT_EQ(specialize_to_t(b).T, LaurentPoly::monomial(1, -1));
  TauPolynomial gauge{{1, -1, 0}, {0, 0, 0}, x1};
  try {
    specialize_to_t(gauge);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GaugeDependence);
  }
  TauPolynomial wrong{{1, -1, 0}, {0, 0, 0}, (x2 - x1) * (x2 - x1)};
  try {
    specialize_to_t(wrong);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HomogeneityViolation);
  }
}

TEST(SeedTable, VacuumAndSingleShift) {
  auto w = FrameMatrix::vandermonde();
  auto v = seed_table({0, 0, 0}, w);
  std::size_t nonzero = 0;
  for (const auto& e : v)
    if (!e.T.is_zero()) {
      ++nonzero;
      EXPECT_EQ(e.point, LatticePoint());
      EXPECT_EQ(e.T, LaurentPoly(1));
    }
  EXPECT_EQ(nonzero, 1u);
  std::set<ExactScalar> mags;
  for (const auto& e : seed_table({1, 0, 0}, w))
    if (!e.T.is_zero()) {
      EXPECT_EQ(e.weight, 0);
      EXPECT_EQ(e.T.term_count(), 1u);
      mags.insert(abs(e.T.coeff(0)));
    }
  EXPECT_EQ(mags, (std::set<ExactScalar>{q(1), q(5), q(6)}));
}

TEST(Generator, AgreesWithSeedTable) {
  auto w = FrameMatrix::vandermonde();
  TauGenerator gen(w);
  for (const MuVector& mu : {MuVector{1, 1, 0}, MuVector{2, -1, 0}, MuVector{0, 1, -1}})
    for (const auto& e : seed_table(mu, w)) {
      const LaurentPoly* T = gen.find(e.point);
      ASSERT_NE(T, nullptr);
      EXPECT_EQ(*T, e.T) << e.point.to_string();
    }
  EXPECT_EQ(gen.at(LatticePoint()), LaurentPoly(1));
}

TEST(Generator, NegativeWeightVanishes) {
  TauGenerator gen(FrameMatrix::vandermonde());
  for (const auto& p : ball(2))
    if (r_weight(p) < 0) EXPECT_TRUE(gen.at(p).is_zero()) << p.to_string();
}

TEST(Table, MissingTau) {
  TauTable t;
  t.insert(LatticePoint(), LaurentPoly(1));
  EXPECT_EQ(t.find(LatticePoint::root(1, 2)), nullptr);
  try {
    t.at(LatticePoint::root(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingTau);
  }
}

TEST(Table, GenerateBallIsLexicographic) {
  TauTable t = generate_ball(FrameMatrix::vandermonde(), 1);
  auto pts = t.points();
  EXPECT_EQ(pts, ball(1));
}
