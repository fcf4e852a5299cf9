#include "pvi/tau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pvi {

ExactScalar det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ExactScalar det(std::vector<std::vector<ExactScalar>> m) {
  const std::size_t n = m.size();
  ExactScalar d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      ExactScalar f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// ------------------------------------------------------------------ frame

FrameMatrix::FrameMatrix(const Mat3& rows) : rows_(rows), det_(det3(rows)) {
  if (det_ == 0) {
    std::string msg = "rows";
    for (const auto& r : rows) msg += " (" + to_string(r[0]) + "," + to_string(r[1]) + "," + to_string(r[2]) + ")";
    throw Error(ErrorKind::SingularFrame, msg + " are linearly dependent");
  }
  // dual[j] is column j of the inverse, so that (rows[i], dual[j]) = delta_ij.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      ExactScalar cof = rows_[j1][i1] * rows_[j2][i2] - rows_[j1][i2] * rows_[j2][i1];
      dual_[j][i] = cof / det_;
    }
  }
}

FrameMatrix FrameMatrix::vandermonde() {
  return FrameMatrix(Mat3{Vec3{1, 1, 1}, Vec3{1, 2, 4}, Vec3{1, 3, 9}});
}

FrameMatrix FrameMatrix::identity() { return FrameMatrix(Mat3{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}); }

FrameMatrix FrameMatrix::permuted(const std::array<int, 3>& perm) const {
  Mat3 m;
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t a = 0; a < 3; ++a)
      m[j][a] = rows_[static_cast<std::size_t>(perm[j])][static_cast<std::size_t>(perm[a])];
  return FrameMatrix(m);
}

FrameMatrix dual_basis(const FrameMatrix& w) { return FrameMatrix(w.dual()); }

// ---------------------------------------------------------- wedge expansion

namespace {

struct Slot {
  int comp;  // frame row j, or basis component a
  int deg;
};

int parity_sign(long inversions) { return inversions % 2 == 0 ? 1 : -1; }

int mod2(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

// Charge and partition of one component whose occupied degrees are
// `below` (all < M) together with every degree in [M, N).
std::pair<int, Partition> decode_component(const std::vector<int>& below, int M, int N) {
  std::vector<int> occ = below;
  for (int d = M; d < N; ++d) occ.push_back(d);
  std::sort(occ.begin(), occ.end());
  int negative = static_cast<int>(std::count_if(occ.begin(), occ.end(), [](int d) { return d < 0; }));
  int vacant = 0;
  for (int d = 0; d < M; ++d)
    if (std::find(below.begin(), below.end(), d) == below.end()) ++vacant;
  int c = negative - vacant;
  Partition lam;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    int part = (static_cast<int>(i) - c) - occ[i];
    if (part < 0) throw Error(ErrorKind::InvalidArgument, "malformed Maya diagram");
    if (part == 0) break;
    lam.push_back(part);
  }
  return {c, lam};
}

std::vector<std::vector<int>> subsets_of_three(std::size_t size) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < 8; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask))) != size) continue;
    std::vector<int> s;
    for (int a = 0; a < 3; ++a)
      if (mask & (1 << a)) s.push_back(a);
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<WedgeTerm> expand_wedge(const MuVector& mu, const FrameMatrix& w) {
  const int M = *std::max_element(mu.begin(), mu.end());
  const int lo = *std::min_element(mu.begin(), mu.end());
  const int N = std::max(M, 0) + 1;

  // Slot order is row-major (all degrees of w1, then w2, then w3); the
  // expansion is done degree by degree, so record the reordering sign.
  std::vector<Slot> slots;
  for (int j = 0; j < 3; ++j)
    for (int k = mu[static_cast<std::size_t>(j)]; k < M; ++k) slots.push_back({j, k});
  long inv = 0;
  for (std::size_t x = 0; x < slots.size(); ++x)
    for (std::size_t y = x + 1; y < slots.size(); ++y)
      if (std::pair(slots[x].deg, slots[x].comp) > std::pair(slots[y].deg, slots[y].comp)) ++inv;
  const int s0 = parity_sign(inv);

  struct Choice {
    ExactScalar minor;
    std::vector<int> cols;
  };
  std::vector<std::vector<Choice>> per_degree;
  for (int k = lo; k < M; ++k) {
    std::vector<int> J;
    for (int j = 0; j < 3; ++j)
      if (mu[static_cast<std::size_t>(j)] <= k) J.push_back(j);
    std::vector<Choice> cs;
    for (auto& S : subsets_of_three(J.size())) {
      std::vector<std::vector<ExactScalar>> sub(J.size(), std::vector<ExactScalar>(S.size()));
      for (std::size_t r = 0; r < J.size(); ++r)
        for (std::size_t c = 0; c < S.size(); ++c)
          sub[r][c] = w.rows()[static_cast<std::size_t>(J[r])][static_cast<std::size_t>(S[c])];
      ExactScalar m = det(sub);
      if (m != 0) cs.push_back({m, S});
    }
    per_degree.push_back(std::move(cs));
  }

  std::vector<WedgeTerm> out;
  std::vector<std::size_t> idx(per_degree.size(), 0);
  for (const auto& cs : per_degree)
    if (cs.empty()) return out;
  while (true) {
    ExactScalar coef = 1;
    std::vector<Slot> occ;  // sorted by (degree, component)
    for (std::size_t d = 0; d < per_degree.size(); ++d) {
      const Choice& ch = per_degree[d][idx[d]];
      coef *= ch.minor;
      for (int a : ch.cols) occ.push_back({a, lo + static_cast<int>(d)});
    }
    for (int k = M; k < N; ++k)
      for (int a = 0; a < 3; ++a) occ.push_back({a, k});
    long inv2 = 0;
    for (std::size_t x = 0; x < occ.size(); ++x)
      for (std::size_t y = x + 1; y < occ.size(); ++y)
        if (occ[x].comp > occ[y].comp) ++inv2;

    WedgeTerm term;
    for (int a = 0; a < 3; ++a) {
      std::vector<int> below;
      for (const auto& s : occ)
        if (s.comp == a && s.deg < M) below.push_back(s.deg);
      auto [c, lam] = decode_component(below, M, N);
      term.charges[static_cast<std::size_t>(a)] = c;
      term.partitions[static_cast<std::size_t>(a)] = std::move(lam);
    }
    int norm = parity_sign(static_cast<long>(N) * (N - 1) / 2 + static_cast<long>(N) * term.charges[1]);
    term.sign = s0 * parity_sign(inv2) * norm;
    term.coefficient = coef;
    out.push_back(std::move(term));

    std::size_t d = 0;
    while (d < idx.size() && ++idx[d] == per_degree[d].size()) idx[d++] = 0;
    if (d == idx.size()) break;
  }
  return out;
}

ExactScalar schur_first_times(const Partition& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) return 1;
  int top = lambda.front() + static_cast<int>(n);
  std::vector<ExactScalar> inv_fact(static_cast<std::size_t>(top) + 1);
  mpz_class f = 1;
  for (int k = 0; k <= top; ++k) {
    if (k > 0) f *= k;
    inv_fact[static_cast<std::size_t>(k)] = ExactScalar(mpz_class(1), f);
  }
  std::vector<std::vector<ExactScalar>> m(n, std::vector<ExactScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int k = lambda[i] - static_cast<int>(i) + static_cast<int>(j);
      m[i][j] = k >= 0 ? inv_fact[static_cast<std::size_t>(k)] : ExactScalar(0);
    }
  return det(std::move(m));
}

TriPoly bosonize(const WedgeTerm& term) {
  ExactScalar c = term.coefficient * term.sign;
  TriPoly::Exponent e{};
  for (std::size_t a = 0; a < 3; ++a) {
    const auto& lam = term.partitions[a];
    c *= schur_first_times(lam);
    e[a] = std::accumulate(lam.begin(), lam.end(), 0);
  }
  return TriPoly::monomial(c, e);
}

ExactScalar point_normalization(const MuVector& mu, const FrameMatrix& w) {
  const long M = *std::max_element(mu.begin(), mu.end());
  const long m2 = mu[1];
  int s = mod2(M * (M - 1) / 2 + M * m2 + m2 * (m2 + 1) / 2) ? -1 : 1;
  return pow(w.determinant(), mu[0] - M) * s;
}

std::map<std::array<int, 3>, TriPoly> tau_sectors(const MuVector& mu, const FrameMatrix& w) {
  std::map<std::array<int, 3>, TriPoly> out;
  for (const auto& term : expand_wedge(mu, w)) out[term.charges] += bosonize(term);
  ExactScalar kappa = point_normalization(mu, w);
  for (auto it = out.begin(); it != out.end();) {
    it->second *= kappa;
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

TauPolynomial tau_in_x(const MuVector& mu, const std::array<int, 3>& charge, const FrameMatrix& w) {
  TauPolynomial tp{mu, charge, {}};
  if (charge[0] + charge[1] + charge[2] + mu[0] + mu[1] + mu[2] != 0) return tp;
  auto sectors = tau_sectors(mu, w);
  auto it = sectors.find(charge);
  if (it != sectors.end()) tp.poly = it->second;
  return tp;
}

bool is_homogeneous(const TriPoly& p, long degree) { return p.euler() == p * ExactScalar(degree); }

bool is_translation_invariant(const TriPoly& p) { return (p.partial(0) + p.partial(1) + p.partial(2)).is_zero(); }

// ------------------------------------------------------------ specialization

namespace {

std::vector<mpz_class> binomial_row(int n) {
  std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) mpz_bin_uiui(row[static_cast<std::size_t>(k)].get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return row;
}

}  // namespace

TauT specialize_to_t(const TauPolynomial& tp) {
  TauT out;
  out.point = tp.point();
  const ExactScalar R = r_weight(out.point);
  // Expand in (u, h, s) with s = 1/t: x1 = u, x2 = u + h, x3 = u + h s.
  std::map<std::array<int, 3>, ExactScalar> uhs;
  for (const auto& [e, c] : tp.poly.terms()) {
    auto b2 = binomial_row(e[1]);
    auto b3 = binomial_row(e[2]);
    for (int p = 0; p <= e[1]; ++p)
      for (int q = 0; q <= e[2]; ++q) {
        ExactScalar v = c * ExactScalar(b2[static_cast<std::size_t>(p)] * b3[static_cast<std::size_t>(q)]);
        std::array<int, 3> key{e[0] + (e[1] - p) + (e[2] - q), p + q, q};
        uhs[key] += v;
      }
  }
  std::map<int, ExactScalar> tcoef;
  for (const auto& [k, c] : uhs) {
    if (c == 0) continue;
    if (k[0] != 0)
      throw Error(ErrorKind::GaugeDependence, "u survives at " + out.point.to_string());
    if (R.get_den() != 1 || k[1] != R)
      throw Error(ErrorKind::HomogeneityViolation,
                  "h^" + std::to_string(k[1]) + " at weight " + R.get_str() + " at " + out.point.to_string());
    tcoef[-k[2]] += c;
  }
  if (R.get_den() != 1) throw Error(ErrorKind::HomogeneityViolation, "half-integer weight at " + out.point.to_string());
  out.weight = R.get_num().get_si();
  if (!tcoef.empty()) {
    int lo = tcoef.begin()->first, hi = tcoef.rbegin()->first;
    std::vector<ExactScalar> v(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [d, c] : tcoef) v[static_cast<std::size_t>(d - lo)] = c;
    out.T = LaurentPoly(lo, std::move(v));
  }
  return out;
}

std::vector<TauT> seed_table(const MuVector& mu, const FrameMatrix& w) {
  auto sectors = tau_sectors(mu, w);
  const int total = -(mu[0] + mu[1] + mu[2]);
  const int mu2 = mu[0] * mu[0] + mu[1] * mu[1] + mu[2] * mu[2];
  int bound = 0;
  while ((bound + 1) * (bound + 1) <= mu2) ++bound;
  std::vector<TauT> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b) {
      int c = total - a - b;
      if (a * a + b * b + c * c > mu2) continue;
      std::array<int, 3> ch{a, b, c};
      TauPolynomial tp{mu, ch, {}};
      auto it = sectors.find(ch);
      if (it != sectors.end()) tp.poly = it->second;
      out.push_back(specialize_to_t(tp));
    }
  return out;
}

// ------------------------------------------------------------------ sources

const LaurentPoly& TauSource::at(const LatticePoint& p) const {
  const LaurentPoly* T = find(p);
  if (!T) throw Error(ErrorKind::MissingTau, p.to_string());
  return *T;
}

const LaurentPoly* TauTable::find(const LatticePoint& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? nullptr : &it->second;
}

void TauTable::insert(const LatticePoint& p, LaurentPoly T) { entries_[p] = std::move(T); }

std::vector<LatticePoint> TauTable::points() const {
  std::vector<LatticePoint> r;
  r.reserve(entries_.size());
  for (const auto& [p, T] : entries_) r.push_back(p);
  return r;
}

const LaurentPoly* TauGenerator::find(const LatticePoint& p) const {
  auto it = cache_.find(p);
  if (it != cache_.end()) return &it->second;
  MuVector mu = p.mu();
  auto sit = sectors_.find(mu);
  if (sit == sectors_.end()) sit = sectors_.emplace(mu, tau_sectors(mu, w_)).first;
  TauPolynomial tp{mu, p.charge(), {}};
  auto pit = sit->second.find(p.charge());
  if (pit != sit->second.end()) tp.poly = pit->second;
  return &cache_.emplace(p, specialize_to_t(tp).T).first->second;
}

TauTable TauGenerator::table(const std::vector<LatticePoint>& points) const {
  TauTable t;
  for (const auto& p : points) t.insert(p, *find(p));
  return t;
}

TauTable generate_ball(const FrameMatrix& w, int radius) { return TauGenerator(w).table(ball(radius)); }

}  // namespace pvi
