// Identity engine: Toda recursions, bilinear Baecklund relations, Hirota-Miwa
// relations, sigma functions, the sigma-form residual and the sigma-level
// Baecklund relation. Every residual is exact; zero means the identity holds.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvi/exact.hpp"
#include "pvi/lattice.hpp"
#include "pvi/tau.hpp"

namespace pvi {

// b_1 = t(t-1), b_2 = t, b_3 = -t^2.
UniPoly b_poly(int j);
LaurentPoly directional(int j, const LaurentPoly& T);  // b_j dT/dt

// Left side of the Toda line for the pair (a, b) in {(1,2), (1,3), (2,3)};
// equals T(p + d_a - d_b) T(p + d_b - d_a).
LaurentPoly toda_product(const TauT& T, int a, int b);

// Tik d_j Ta - Ta d_j Tik + n_j Ta Tik
LaurentPoly bilinear_lhs(const TauT& Ta, const TauT& Tik, const MoveIJK& m);
LaurentPoly bilinear_residual(const TauT& Ta, const TauT& Tik, const TauT& Tij, const TauT& Tjk, const MoveIJK& m,
                              int eps);
// Solves the bilinear relation for T(a + d_j - d_k).
TauT solve_fourth(const TauT& Ta, const TauT& Tik, const TauT& Tij, const MoveIJK& m, int eps);

// The four points a, a+d_i-d_k, a+d_i-d_j, a+d_j-d_k of a move.
std::array<LatticePoint, 4> move_points(const LatticePoint& a, const MoveIJK& m);

// beta has entry sum -2; every point involved is beta + d_a + d_b.
// First relation: l in 4..6. Second: k != l in 1..3, i != j in 4..6.
LaurentPoly miwa_first(const TauSource& src, const std::array<int, 6>& beta, int l);
LaurentPoly miwa_second(const TauSource& src, const std::array<int, 6>& beta, int k, int l, int i, int j);
struct MiwaIndices {
  int l1;           // first relation
  int k, l, i, j;   // second relation
};
std::pair<LaurentPoly, LaurentPoly> miwa_residuals(const TauSource& src, const std::array<int, 6>& beta,
                                                   const MiwaIndices& idx);
std::array<LatticePoint, 6> miwa_first_points(const std::array<int, 6>& beta, int l);
std::array<LatticePoint, 6> miwa_second_points(const std::array<int, 6>& beta, int k, int l, int i, int j);

struct SigmaFn {
  LatticePoint point;
  RationalFunction sigma;
};

// t(t-1) T'/T + c5 (t-1) - c6/2
SigmaFn sigma_of(const TauT& T);

using VQuad = std::array<ExactScalar, 4>;
VQuad v_of_point(const LatticePoint& p);

struct PVIParams {
  ExactScalar alpha, beta, gamma, delta;
  friend bool operator==(const PVIParams&, const PVIParams&) = default;
};
PVIParams via_params(const VQuad& v);

// The residual depends on v only through these: v1 v2 v3 v4 and the
// elementary symmetric functions of v_k^2.
std::array<ExactScalar, 5> jmo_invariants(const VQuad& v);
RationalFunction jmo_residual(const RationalFunction& sigma, const VQuad& v);
RationalFunction jmo_residual(const SigmaFn& s);

// (s_ij + s_jk - s_ik - s_a - G) K - t(t-1) K' with K = s_a - s_ik + H.
RationalFunction sigma_backlund_residual(const SigmaFn& sa, const SigmaFn& sik, const SigmaFn& sij,
                                         const SigmaFn& sjk, const MoveIJK& m);
RationalFunction backlund_K(const SigmaFn& sa, const SigmaFn& sik, const MoveIJK& m);

using EpsTable = std::map<std::array<int, 3>, int>;

// Unique sign per move making the bilinear relation hold on every
// configuration fully inside `domain`. InsufficientData when some move has no
// configuration with a nonzero side, unless `uninformative` is given: such
// moves are then listed there and set to +1.
EpsTable calibrate_eps(const TauSource& src, const std::vector<LatticePoint>& domain,
                       std::vector<std::array<int, 3>>* uninformative = nullptr);
// Most frequent sign per move, +1 on ties; for reporting on damaged tables.
EpsTable majority_eps(const TauSource& src, const std::vector<LatticePoint>& domain);

// ------------------------------------------------------------- sweeps

struct CheckRecord {
  std::string identity;
  std::string config;
  bool ok;
  std::size_t residual_terms;  // 0 when ok
};

struct Report {
  std::vector<CheckRecord> records;
  std::vector<std::string> warnings;
  void add(std::string identity, std::string config, bool ok, std::size_t terms = 0);
  bool ok() const;
  std::size_t failures() const;
  std::size_t count(const std::string& identity) const;
  std::vector<CheckRecord> failing() const;
};

std::size_t residual_terms(const LaurentPoly& p);
std::size_t residual_terms(const RationalFunction& f);

// Base points come from `domain`; neighbours are looked up in `src` and
// configurations with a missing neighbour are skipped.
void check_toda(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep);
void check_translation(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep);
void check_jmo(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep);

// Every point of a configuration must lie in `domain`.
void check_bilinear(const TauSource& src, const std::vector<LatticePoint>& domain, const EpsTable& eps,
                    Report& rep);
void check_solve_fourth(const TauSource& src, const std::vector<LatticePoint>& domain, const EpsTable& eps,
                        Report& rep);
void check_miwa(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep);
// Also records, per configuration, that a vanishing bilinear residual with
// K != 0 is accompanied by a vanishing sigma-level residual.
void check_sigma_backlund(const TauSource& src, const std::vector<LatticePoint>& domain, const EpsTable& eps,
                          Report& rep);

std::string move_string(const MoveIJK& m);

}  // namespace pvi
