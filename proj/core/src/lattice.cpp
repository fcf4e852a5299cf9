#include "pvi/lattice.hpp"

#include <cstdlib>
#include <numeric>

namespace pvi {

LatticePoint::LatticePoint(std::array<int, 6> a) : a_(a) {
  if (std::accumulate(a.begin(), a.end(), 0) != 0)
    throw Error(ErrorKind::InvalidArgument, "lattice point entries must sum to zero: " + to_string());
}

LatticePoint LatticePoint::from_parts(const std::array<int, 3>& charge, const std::array<int, 3>& mu) {
  return LatticePoint({charge[0], charge[1], charge[2], mu[0], mu[1], mu[2]});
}

LatticePoint LatticePoint::root(int i, int j) {
  if (i < 1 || i > 6 || j < 1 || j > 6)
    throw Error(ErrorKind::InvalidArgument, "root index out of range");
  std::array<int, 6> a{};
  a[static_cast<std::size_t>(i - 1)] += 1;
  a[static_cast<std::size_t>(j - 1)] -= 1;
  return LatticePoint(a);
}

int LatticePoint::l1_norm() const {
  int s = 0;
  for (int x : a_) s += std::abs(x);
  return s;
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
  std::array<int, 6> r{};
  for (std::size_t i = 0; i < 6; ++i) r[i] = a_[i] + o.a_[i];
  return LatticePoint(r);
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const { return *this + (-o); }

LatticePoint LatticePoint::operator-() const { return scaled(-1); }

LatticePoint LatticePoint::scaled(int k) const {
  std::array<int, 6> r{};
  for (std::size_t i = 0; i < 6; ++i) r[i] = k * a_[i];
  return LatticePoint(r);
}

LatticePoint LatticePoint::moved(int i, int j) const { return *this + root(i, j); }

std::string LatticePoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(a_[i]);
  return s + "]";
}

bool MoveIJK::valid(int i, int j, int k) {
  return i >= 1 && i <= 6 && k >= 1 && k <= 6 && j >= 1 && j <= 3 && i != j && j != k && i != k;
}

MoveIJK::MoveIJK(int i_, int j_, int k_) : i(i_), j(j_), k(k_) {
  if (!valid(i, j, k))
    throw Error(ErrorKind::InvalidArgument,
                "invalid move (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
}

std::vector<MoveIJK> all_moves() {
  std::vector<MoveIJK> r;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 6; ++k)
        if (MoveIJK::valid(i, j, k)) r.emplace_back(i, j, k);
  return r;
}

namespace {

void ball_rec(std::array<int, 6>& a, int pos, int budget, int sum, std::vector<LatticePoint>& out) {
  if (pos == 5) {
    int last = -sum;
    if (std::abs(last) <= budget) {
      a[5] = last;
      out.emplace_back(a);
    }
    return;
  }
  for (int x = -budget; x <= budget; ++x) {
    a[static_cast<std::size_t>(pos)] = x;
    ball_rec(a, pos + 1, budget - std::abs(x), sum + x, out);
  }
}

}  // namespace

std::vector<LatticePoint> ball(int radius) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "negative radius");
  std::vector<LatticePoint> out;
  std::array<int, 6> a{};
  ball_rec(a, 0, 2 * radius, 0, out);
  return out;
}

ExactScalar r_weight(const LatticePoint& p) {
  long s = 0;
  for (int i = 1; i <= 3; ++i) s -= static_cast<long>(p[i]) * p[i];
  for (int i = 4; i <= 6; ++i) s += static_cast<long>(p[i]) * p[i];
  ExactScalar r(s, 2);
  r.canonicalize();
  return r;
}

long r_weight_int(const LatticePoint& p) {
  ExactScalar r = r_weight(p);
  if (r.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "half-integer weight at " + p.to_string());
  return r.get_num().get_si();
}

std::pair<ExactScalar, ExactScalar> c5_c6(const LatticePoint& p) {
  ExactScalar c5(-static_cast<long>(p[1] - p[3]) * (p[1] - p[3]), 4);
  c5.canonicalize();
  ExactScalar cross(static_cast<long>(p[1] - p[2]) * (p[1] - p[3]), 2);
  cross.canonicalize();
  ExactScalar c6 = r_weight(p) + cross;
  return {c5, c6};
}

ExactScalar n_coeff(const LatticePoint& p, const MoveIJK& m) {
  ExactScalar n1 = r_weight(p.moved(m.i, m.k)) - r_weight(p);
  switch (m.j) {
    case 1: return n1;
    case 2: return -n1;
    default: return 0;
  }
}

std::pair<UniPoly, UniPoly> gh_polys(const MoveIJK& m, const ExactScalar& n) {
  const UniPoly t = UniPoly::t();
  switch (m.j) {
    case 1: return {UniPoly(), UniPoly(n)};
    case 2: return {-t, UniPoly(n) * (t - UniPoly(1))};
    default: return {UniPoly(-1), UniPoly()};
  }
}

std::pair<UniPoly, UniPoly> big_GH(const LatticePoint& p, const MoveIJK& m) {
  auto [g, h] = gh_polys(m, n_coeff(p, m));
  auto ca = c5_c6(p);
  auto cik = c5_c6(p.moved(m.i, m.k));
  auto cij = c5_c6(p.moved(m.i, m.j));
  auto cjk = c5_c6(p.moved(m.j, m.k));
  const UniPoly one_minus_t({ExactScalar(1), ExactScalar(-1)});
  ExactScalar d5 = cij.first + cjk.first - cik.first - ca.first;
  ExactScalar d6 = cij.second + cjk.second - cik.second - ca.second;
  UniPoly G = g - UniPoly(d5) * one_minus_t - UniPoly(ExactScalar(d6 / 2));
  UniPoly H = UniPoly(ExactScalar(ca.first - cik.first)) * one_minus_t +
              UniPoly(ExactScalar((ca.second - cik.second) / 2)) + h;
  return {G, H};
}

int sign_eps(int j, const std::array<int, 3>& charge) {
  int e = 0;
  if (j >= 2) e += charge[0];
  if (j >= 3) e += charge[1];
  return (e % 2 == 0) ? 1 : -1;
}

LatticePoint e0_vector() { return LatticePoint({1, 1, 1, -1, -1, -1}); }

std::pair<LatticePoint, int> e0_translate(const LatticePoint& p) {
  return {p + e0_vector(), (p[2] % 2 == 0) ? 1 : -1};
}

}  // namespace pvi
