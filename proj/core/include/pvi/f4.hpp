// The map from the sl6 root lattice to the affine F4 root lattice, its
// short-root sets, the lattice-level propositions run on A5 preimages, and
// the D4 and coordinate-permutation symmetries.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pvi/exact.hpp"
#include "pvi/identities.hpp"
#include "pvi/lattice.hpp"
#include "pvi/tau.hpp"

namespace pvi {

// v0 e0 + v1 e1 + ... + v4 e4; (v, w) = v1 w1 + ... + v4 w4.
struct F4Vector {
  long v0 = 0;
  std::array<ExactScalar, 4> v{};

  static F4Vector e(int k);  // basis vector, k in 0..4
  static F4Vector half(long v0, std::array<int, 4> twice);  // v0 e0 + (twice/2) . e
  F4Vector operator+(const F4Vector& o) const;
  F4Vector operator-(const F4Vector& o) const;
  F4Vector operator-() const;
  friend bool operator==(const F4Vector&, const F4Vector&) = default;

  ExactScalar norm2() const;  // e0 component ignored
  // v0 integral and v1..v4 all integers or all half-odd integers.
  bool in_lattice() const;
  bool same_mod_e0(const F4Vector& o) const;
  std::string to_string() const;
};

F4Vector a5_to_f4(const LatticePoint& p);
LatticePoint e0_in_a5();

struct SimpleRootRow {
  std::string name;
  F4Vector expected;
  LatticePoint a5;
  F4Vector image;
  bool match;
};
std::vector<SimpleRootRow> simple_roots_check();

struct ShortRootSet {
  int label;
  std::array<F4Vector, 5> elements;
};

// An element g of a short-root set written as sign * a5_to_f4(d_a - d_j) + shift e0.
struct ShortRootPreimage {
  int a, j, sign;
  long e0_shift;
  LatticePoint root() const { return LatticePoint::root(a, j).scaled(sign); }
};

// Any preimage +-(d_i - d_j), 1 <= j <= 3, up to e0.
std::optional<ShortRootPreimage> short_root_preimage(const F4Vector& g);
// Preimage with the fixed second index j.
std::optional<ShortRootPreimage> short_root_preimage(const F4Vector& g, int j);

struct ShortRootCheck {
  int label;
  F4Vector element;
  bool short_length;
  std::optional<ShortRootPreimage> preimage;          // any j
  std::optional<ShortRootPreimage> labelled_preimage;  // j = label
};
std::array<ShortRootSet, 3> short_sets_raw();
std::vector<ShortRootCheck> short_sets_report();
// The three sets after validation; ValidationFailure names the offending element.
std::array<ShortRootSet, 3> short_sets();

enum class SigmaUnknown { PlusGamma1, MinusGamma2 };

// Given sigma at beta, beta + g1 - g2 and the known one of beta - g2 /
// beta + g1, returns the other one. g1, g2 must lie in the same set S_j.
SigmaFn sigma_step(const SigmaFn& s_beta, const SigmaFn& s_diag, const SigmaFn& s_known, int j, const F4Vector& g1,
                   const F4Vector& g2, SigmaUnknown unknown);

// The Toda pair (a, b) whose difference d_a - d_b maps to +-gamma up to e0,
// for the three vectors e0 + (e1+e2+e3+e4)/2, (e1+e2+e3-e4)/2, e0 + e4.
struct TodaGammaRow {
  int a, b;
  F4Vector image;  // a5_to_f4(d_a - d_b)
  F4Vector gamma;
  int sign;        // image = sign * gamma + shift e0
  long e0_shift;
};
std::array<F4Vector, 3> toda_gammas();
std::vector<TodaGammaRow> toda_gamma_table();

// T at 2 beta - near, from T at beta and at near = beta +- (d_a - d_b).
TauT toda_step_f4(const TauT& T_beta, const TauT& T_near, const F4Vector& gamma);

using VQuad = std::array<ExactScalar, 4>;
// result[k] = signs[k] * v[perm[k]]; OddSignCount unless prod(signs) = 1.
VQuad d4_action(const VQuad& v, const std::array<int, 4>& perm, const std::array<int, 4>& signs);

// Coordinate interchange x'_a = x_perm[a] seen on (t, h):
// t -> (a t + b)/(c t + d) and h -> h * h_factor(t).
struct TMap {
  ExactScalar a, b, c, d;
  RationalFunction h_factor;
  std::string to_string() const;
};
TMap induced_tmap(const std::array<int, 3>& perm);

LatticePoint permute_point(const LatticePoint& p, const std::array<int, 3>& perm);

struct PermuteResult {
  std::array<int, 3> perm;
  TMap tmap;
  TauTable table;                               // keyed by permuted points
  std::map<LatticePoint, ExactScalar> factor;   // keyed by original points; 0 when both vanish
  std::vector<LatticePoint> mismatches;         // points where no constant relates the two
};

// Table for the frame with rows and columns permuted, compared point by point
// with the original frame: T'(t) = factor * h_factor(t)^R * T(tmap(t)).
PermuteResult component_permute(const std::array<int, 3>& perm, const FrameMatrix& w,
                                const std::vector<LatticePoint>& points);

// Sweeps
void check_f4(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep);
void check_symmetry(const FrameMatrix& w, const std::vector<LatticePoint>& domain, Report& rep);

}  // namespace pvi
