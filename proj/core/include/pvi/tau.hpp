// Tau functions from the homogeneous points W(mu) of the 3-component
// polynomial Grassmannian: wedge expansion, Schur bosonization in the first
// times, and the reduction to one-variable functions T(t).
#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "pvi/exact.hpp"
#include "pvi/lattice.hpp"

namespace pvi {

using Vec3 = std::array<ExactScalar, 3>;
using Mat3 = std::array<Vec3, 3>;
using MuVector = std::array<int, 3>;
using Partition = std::vector<int>;

ExactScalar det3(const Mat3& m);
// Determinant of a square matrix by Gaussian elimination.
ExactScalar det(std::vector<std::vector<ExactScalar>> m);

class FrameMatrix {
 public:
  // SingularFrame if the rows are linearly dependent.
  explicit FrameMatrix(const Mat3& rows);
  static FrameMatrix vandermonde();  // rows (1,1,1), (1,2,4), (1,3,9)
  static FrameMatrix identity();

  const Mat3& rows() const { return rows_; }
  const Mat3& dual() const { return dual_; }
  const ExactScalar& determinant() const { return det_; }
  // Rows and columns both relabelled: result[j][a] = rows[perm[j]][perm[a]].
  FrameMatrix permuted(const std::array<int, 3>& perm) const;

 private:
  Mat3 rows_;
  Mat3 dual_;
  ExactScalar det_;
};

FrameMatrix dual_basis(const FrameMatrix& w);

struct WedgeTerm {
  std::array<int, 3> charges;
  std::array<Partition, 3> partitions;
  int sign;
  ExactScalar coefficient;
};

std::vector<WedgeTerm> expand_wedge(const MuVector& mu, const FrameMatrix& w);

// Schur function of one component at first times only: det[1/(l_i - i + j)!] x^|l|.
ExactScalar schur_first_times(const Partition& lambda);
TriPoly bosonize(const WedgeTerm& term);

// Sign and frame-power normalisation applied on top of the raw expansion.
ExactScalar point_normalization(const MuVector& mu, const FrameMatrix& w);

struct TauPolynomial {
  MuVector mu;
  std::array<int, 3> charge;
  TriPoly poly;
  LatticePoint point() const { return LatticePoint::from_parts(charge, mu); }
};

// All nonzero charge sectors of W(mu), normalised.
std::map<std::array<int, 3>, TriPoly> tau_sectors(const MuVector& mu, const FrameMatrix& w);
TauPolynomial tau_in_x(const MuVector& mu, const std::array<int, 3>& charge, const FrameMatrix& w);

bool is_homogeneous(const TriPoly& p, long degree);  // Euler identity
bool is_translation_invariant(const TriPoly& p);     // (d1 + d2 + d3) p = 0

struct TauT {
  LatticePoint point;
  LaurentPoly T;
  long weight = 0;
};

// x1 = u, x2 = u + h, x3 = u + h/t; asserts u drops out and h enters as h^R.
TauT specialize_to_t(const TauPolynomial& tp);
// Every charge of W(mu) with R >= 0, zero functions included.
std::vector<TauT> seed_table(const MuVector& mu, const FrameMatrix& w);

// Read access to tau functions by lattice point; nullptr when unavailable.
class TauSource {
 public:
  virtual ~TauSource() = default;
  virtual const LaurentPoly* find(const LatticePoint& p) const = 0;
  const LaurentPoly& at(const LatticePoint& p) const;  // MissingTau when absent
};

// Finite table, e.g. loaded from disk.
class TauTable : public TauSource {
 public:
  const LaurentPoly* find(const LatticePoint& p) const override;
  void insert(const LatticePoint& p, LaurentPoly T);
  const std::map<LatticePoint, LaurentPoly>& entries() const { return entries_; }
  std::vector<LatticePoint> points() const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<LatticePoint, LaurentPoly> entries_;
};

// Computes any lattice point on demand from a frame and caches the result.
// Not thread-safe.
class TauGenerator : public TauSource {
 public:
  explicit TauGenerator(FrameMatrix w) : w_(std::move(w)) {}
  const LaurentPoly* find(const LatticePoint& p) const override;
  const FrameMatrix& frame() const { return w_; }
  TauTable table(const std::vector<LatticePoint>& points) const;

 private:
  FrameMatrix w_;
  mutable std::map<MuVector, std::map<std::array<int, 3>, TriPoly>> sectors_;
  mutable std::map<LatticePoint, LaurentPoly> cache_;
};

TauTable generate_ball(const FrameMatrix& w, int radius);

}  // namespace pvi
