#include <gtest/gtest.h>

#include "pvi/f4.hpp"

using namespace pvi;

namespace {

ExactScalar q(long n, long d = 1) {
  ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

LatticePoint P(std::array<int, 6> a) { return LatticePoint(a); }

F4Vector V(long v0, std::array<ExactScalar, 4> v) { return F4Vector{v0, v}; }

ExactScalar sq_norm(const F4Vector& f) {
  ExactScalar s = 0;
  for (const auto& x : f.v) s += x * x;
  return s;
}

}  // namespace

TEST(F4Map, Examples) {
  EXPECT_EQ(a5_to_f4(LatticePoint()), F4Vector{});
  EXPECT_EQ(a5_to_f4(LatticePoint::root(5, 6)), V(0, {0, 1, -1, 0}));
  EXPECT_EQ(a5_to_f4(P({0, 1, 1, 0, -1, -1})), V(0, {q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)}));
}

TEST(F4Map, E0) {
  LatticePoint e = e0_in_a5();
  EXPECT_EQ(a5_to_f4(e), F4Vector::e(0));
  EXPECT_EQ(r_weight(e), 0);
  for (const auto& p : ball(1)) EXPECT_EQ(a5_to_f4(e0_translate(p).first), a5_to_f4(p) + F4Vector::e(0));
}

TEST(F4Map, Additive) {
  auto b = ball(1);
  for (const auto& p : b)
    for (const auto& r : b) EXPECT_EQ(a5_to_f4(p + r), a5_to_f4(p) + a5_to_f4(r));
}

TEST(F4Map, LatticeMembership) {
  EXPECT_TRUE(V(0, {q(1, 2), q(1, 2), q(-1, 2), q(1, 2)}).in_lattice());
  EXPECT_FALSE(V(0, {q(1, 2), 1, 0, 0}).in_lattice());
  EXPECT_FALSE(V(0, {q(1, 3), 0, 0, 0}).in_lattice());
  for (const auto& p : ball(2)) EXPECT_TRUE(a5_to_f4(p).in_lattice()) << p.to_string();
}

TEST(F4Map, SimpleRoots) {
  auto rows = simple_roots_check();
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.match) << r.name;
    EXPECT_EQ(a5_to_f4(r.a5), r.expected) << r.name;
  }
  EXPECT_EQ(a5_to_f4(P({0, 0, 2, -1, -1, 0})), V(0, {0, 0, 1, -1}));
  EXPECT_EQ(a5_to_f4(P({0, -1, -2, 1, 1, 1})), F4Vector::e(4));
}

TEST(ShortRoots, Membership) {
  auto sets = short_sets();
  auto has = [&](int j, const F4Vector& g) {
    for (const auto& e : sets[static_cast<std::size_t>(j - 1)].elements)
      if (e == g) return true;
    return false;
  };
  EXPECT_TRUE(has(2, F4Vector::e(1)));
  EXPECT_TRUE(has(2, F4Vector::e(2)));
  EXPECT_TRUE(has(2, F4Vector::e(3)));
  EXPECT_TRUE(has(3, F4Vector::e(0) + F4Vector::e(4)));
  EXPECT_TRUE(has(3, F4Vector::half(0, {-1, -1, -1, 1})));
  for (const auto& s : sets)
    for (const auto& g : s.elements) EXPECT_EQ(sq_norm(g), 1) << g.to_string();
}

TEST(ShortRoots, PreimagesUpToE0) {
  for (const auto& c : short_sets_report()) {
    ASSERT_TRUE(c.preimage.has_value()) << c.element.to_string();
    F4Vector img = a5_to_f4(c.preimage->root());
    EXPECT_TRUE(img.same_mod_e0(c.element));
    EXPECT_EQ(img.v0 + c.preimage->e0_shift, c.element.v0);
  }
}

TEST(ShortRoots, OneElementOfS1LacksOwnPreimage) {
  int missing = 0;
  for (const auto& c : short_sets_report())
    if (!c.labelled_preimage) {
      ++missing;
      EXPECT_EQ(c.label, 1);
      EXPECT_EQ(c.element, V(-1, {q(1, 2), q(-1, 2), q(-1, 2), q(1, 2)}));
    }
  EXPECT_EQ(missing, 1);
}

TEST(SigmaStep, RejectsMixedSets) {
  auto sets = short_sets();
  SigmaFn s{LatticePoint(), RationalFunction()};
  try {
    sigma_step(s, s, s, 1, sets[0].elements[0], sets[1].elements[2], SigmaUnknown::PlusGamma1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
  try {
    sigma_step(s, s, s, 1, sets[0].elements[2], sets[0].elements[0], SigmaUnknown::PlusGamma1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingPreimage);
  }
}

TEST(SigmaStep, RecoversGeneratedSigma) {
  TauGenerator gen(FrameMatrix::vandermonde());
  auto sets = short_sets();
  auto sig = [&](const LatticePoint& p) -> std::optional<SigmaFn> {
    const LaurentPoly& T = gen.at(p);
    if (T.is_zero()) return std::nullopt;
    return sigma_of({p, T, r_weight_int(p)});
  };
  int n = 0;
  const auto& S2 = sets[1].elements;
  for (const auto& beta : ball(1))
    for (std::size_t x = 2; x < 5; ++x)
      for (std::size_t y = 2; y < 5; ++y) {
        if (x == y) continue;
        auto p1 = short_root_preimage(S2[x], 2), p2 = short_root_preimage(S2[y], 2);
        ASSERT_TRUE(p1 && p2);
        LatticePoint g1 = p1->root(), g2 = p2->root();
        auto sb = sig(beta), sd = sig(beta + g1 - g2), sk = sig(beta - g2), su = sig(beta + g1);
        if (!sb || !sd || !sk || !su) continue;
        if (backlund_K(*sb, *sd, MoveIJK(p1->a, 2, p2->a)).is_zero()) continue;
        SigmaFn got = sigma_step(*sb, *sd, *sk, 2, S2[x], S2[y], SigmaUnknown::PlusGamma1);
        EXPECT_EQ(got.point, su->point);
        EXPECT_EQ(got.sigma, su->sigma) << beta.to_string();
        ++n;
      }
  EXPECT_GT(n, 10);
}

TEST(TodaF4, GammaTable) {
  auto rows = toda_gamma_table();
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(a5_to_f4(LatticePoint::root(r.a, r.b)), r.image);
    F4Vector g = r.sign == 1 ? r.gamma : -r.gamma;
    EXPECT_TRUE(g.same_mod_e0(r.image));
  }
}

TEST(TodaF4, VacuumForcesZero) {
  // The Toda product at the vacuum vanishes, so a nonzero tau on one side
  // forces zero on the other.
  TauT one{LatticePoint(), LaurentPoly(1), 0};
  for (const auto& r : toda_gamma_table()) {
    LatticePoint near = LatticePoint::root(r.a, r.b);
    TauT n{near, LaurentPoly::monomial(3, -1), r_weight_int(near)};
    EXPECT_TRUE(toda_step_f4(one, n, r.gamma).T.is_zero());
  }
}

TEST(D4, Action) {
  VQuad v{1, 2, 3, 4};
  EXPECT_EQ(d4_action(v, {0, 1, 2, 3}, {1, 1, 1, 1}), v);
  EXPECT_EQ(d4_action(v, {1, 0, 2, 3}, {-1, -1, 1, 1}), (VQuad{-2, -1, 3, 4}));
  try {
    d4_action(v, {0, 1, 2, 3}, {-1, 1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OddSignCount);
  }
}

TEST(D4, ResidualUnchanged) {
  UniPoly t = UniPoly::t();
  RationalFunction s(UniPoly({q(1), q(-2), q(3)}), t - UniPoly(5));
  VQuad v{q(1, 2), 2, q(-3, 2), q(1, 3)};
  RationalFunction base = jmo_residual(s, v);
  EXPECT_EQ(jmo_residual(s, d4_action(v, {3, 1, 0, 2}, {-1, 1, -1, 1})), base);
  EXPECT_EQ(jmo_residual(s, d4_action(v, {2, 3, 1, 0}, {-1, -1, -1, -1})), base);
  EXPECT_NE(jmo_residual(s, {q(-1, 2), 2, q(-3, 2), q(1, 3)}), base);
}

TEST(Permute, InducedTMaps) {
  auto id = induced_tmap({0, 1, 2});
  EXPECT_EQ(id.b, 0);
  EXPECT_EQ(id.c, 0);
  EXPECT_EQ(id.a, id.d);
  auto swap13 = induced_tmap({2, 1, 0});
  // t -> 1 - t
  EXPECT_EQ(swap13.a / swap13.d, -1);
  EXPECT_EQ(swap13.b / swap13.d, 1);
  EXPECT_EQ(swap13.c, 0);
}

TEST(Permute, IdentityIsTrivial) {
  auto r = component_permute({0, 1, 2}, FrameMatrix::vandermonde(), ball(1));
  EXPECT_TRUE(r.mismatches.empty());
  TauGenerator gen(FrameMatrix::vandermonde());
  for (const auto& [p, T] : r.table.entries()) EXPECT_EQ(T, gen.at(p));
  for (const auto& [p, f] : r.factor) EXPECT_TRUE(f == 1 || (f == 0 && gen.at(p).is_zero()));
}

TEST(Permute, SwapTwoThreeOnBall) {
  auto r = component_permute({0, 2, 1}, FrameMatrix::vandermonde(), ball(2));
  EXPECT_TRUE(r.mismatches.empty());
  for (const auto& [p, f] : r.factor) EXPECT_TRUE(f == 0 || f == 1 || f == -1) << p.to_string();
}

TEST(Permute, PointRelabelling) {
  LatticePoint p = P({1, 0, -2, 0, 3, -2});
  EXPECT_EQ(permute_point(p, {0, 1, 2}), p);
  EXPECT_EQ(permute_point(permute_point(p, {1, 2, 0}), {2, 0, 1}), p);
}
