// The sl6 root lattice: points, weights, moves and the closed-form constants
// attached to them.
#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pvi/exact.hpp"

namespace pvi {

// (a1..a6) with zero sum. The first three entries are charges, the last three
// are the mu part.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::array<int, 6> a);
  static LatticePoint from_parts(const std::array<int, 3>& charge, const std::array<int, 3>& mu);
  // delta_i - delta_j, 1-based.
  static LatticePoint root(int i, int j);

  int operator[](int i) const { return a_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  const std::array<int, 6>& data() const { return a_; }
  std::array<int, 3> charge() const { return {a_[0], a_[1], a_[2]}; }
  std::array<int, 3> mu() const { return {a_[3], a_[4], a_[5]}; }
  int l1_norm() const;

  LatticePoint operator+(const LatticePoint& o) const;
  LatticePoint operator-(const LatticePoint& o) const;
  LatticePoint operator-() const;
  LatticePoint scaled(int k) const;
  // this + delta_i - delta_j
  LatticePoint moved(int i, int j) const;
  auto operator<=>(const LatticePoint&) const = default;

  std::string to_string() const;

 private:
  std::array<int, 6> a_{};
};

struct MoveIJK {
  int i, j, k;
  MoveIJK(int i, int j, int k);
  static bool valid(int i, int j, int k);
  friend auto operator<=>(const MoveIJK&, const MoveIJK&) = default;
};

// All valid (i, j, k): i, k in 1..6, j in 1..3, pairwise distinct.
std::vector<MoveIJK> all_moves();

// Points with sum |a_i| <= 2r (reachable in r moves), lexicographic order.
std::vector<LatticePoint> ball(int radius);

ExactScalar r_weight(const LatticePoint& p);
long r_weight_int(const LatticePoint& p);  // InvalidArgument for half-integers
std::pair<ExactScalar, ExactScalar> c5_c6(const LatticePoint& p);
ExactScalar n_coeff(const LatticePoint& p, const MoveIJK& m);
// g_j = t(t-1) d/dt log(b_j / (t(t-1))), i.e. 0, -t, -1; h_j = n, n(t-1), 0.
std::pair<UniPoly, UniPoly> gh_polys(const MoveIJK& m, const ExactScalar& n);
// G and H of the sigma-level Baecklund relation; both of degree <= 1.
std::pair<UniPoly, UniPoly> big_GH(const LatticePoint& p, const MoveIJK& m);

// eps(e_j, charge): 1, (-1)^a1, (-1)^(a1+a2) for j = 1, 2, 3.
int sign_eps(int j, const std::array<int, 3>& charge);

LatticePoint e0_vector();  // (1,1,1,-1,-1,-1)
std::pair<LatticePoint, int> e0_translate(const LatticePoint& p);

}  // namespace pvi
