#include "pvi/f4.hpp"

#include <algorithm>
#include <set>

namespace pvi {

// ------------------------------------------------------------- F4Vector

F4Vector F4Vector::e(int k) {
  F4Vector r;
  if (k == 0)
    r.v0 = 1;
  else
    r.v[static_cast<std::size_t>(k - 1)] = 1;
  return r;
}

F4Vector F4Vector::half(long v0, std::array<int, 4> twice) {
  F4Vector r;
  r.v0 = v0;
  for (std::size_t k = 0; k < 4; ++k) {
    r.v[k] = ExactScalar(twice[k], 2);
    r.v[k].canonicalize();
  }
  return r;
}

F4Vector F4Vector::operator+(const F4Vector& o) const {
  F4Vector r;
  r.v0 = v0 + o.v0;
  for (std::size_t k = 0; k < 4; ++k) r.v[k] = v[k] + o.v[k];
  return r;
}

F4Vector F4Vector::operator-() const {
  F4Vector r;
  r.v0 = -v0;
  for (std::size_t k = 0; k < 4; ++k) r.v[k] = -v[k];
  return r;
}

F4Vector F4Vector::operator-(const F4Vector& o) const { return *this + (-o); }

ExactScalar F4Vector::norm2() const {
  ExactScalar s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

bool F4Vector::in_lattice() const {
  bool all_int = std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x.get_den() == 1; });
  bool all_half = std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x.get_den() == 2; });
  return all_int || all_half;
}

bool F4Vector::same_mod_e0(const F4Vector& o) const { return v == o.v; }

std::string F4Vector::to_string() const {
  std::string s = "[" + std::to_string(v0);
  for (const auto& x : v) s += "," + x.get_str();
  return s + "]";
}

F4Vector a5_to_f4(const LatticePoint& p) {
  F4Vector r;
  r.v0 = p[1];
  ExactScalar h(p[1] + p[3], 2);
  h.canonicalize();
  for (int i = 1; i <= 3; ++i) r.v[static_cast<std::size_t>(i - 1)] = h + p[3 + i];
  r.v[3] = ExactScalar(p[1] - p[3], 2);
  r.v[3].canonicalize();
  return r;
}

LatticePoint e0_in_a5() { return e0_vector(); }

std::vector<SimpleRootRow> simple_roots_check() {
  struct Row {
    const char* name;
    F4Vector f4;
    std::array<int, 6> a5;
  };
  const std::vector<Row> rows{
      {"e0-e1-e2", F4Vector::e(0) - F4Vector::e(1) - F4Vector::e(2), {1, 3, 1, -2, -2, -1}},
      {"e2-e3", F4Vector::e(2) - F4Vector::e(3), {0, 0, 0, 0, 1, -1}},
      {"e3-e4", F4Vector::e(3) - F4Vector::e(4), {0, 0, 2, -1, -1, 0}},
      {"e4", F4Vector::e(4), {0, -1, -2, 1, 1, 1}},
      {"(e1-e2-e3-e4)/2", F4Vector::half(0, {1, -1, -1, -1}), {0, 1, 1, 0, -1, -1}},
  };
  std::vector<SimpleRootRow> out;
  for (const auto& r : rows) {
    LatticePoint p(r.a5);
    F4Vector img = a5_to_f4(p);
    out.push_back({r.name, r.f4, p, img, img == r.f4});
  }
  return out;
}

std::array<ShortRootSet, 3> short_sets_raw() {
  const F4Vector e0 = F4Vector::e(0);
  return {ShortRootSet{1,
                       {e0 + F4Vector::e(4), F4Vector::half(1, {1, 1, 1, 1}), F4Vector::half(-1, {1, -1, -1, 1}),
                        F4Vector::half(1, {1, -1, 1, 1}), F4Vector::half(1, {1, 1, -1, 1})}},
          ShortRootSet{2,
                       {F4Vector::half(1, {1, 1, 1, 1}), F4Vector::half(0, {1, 1, 1, -1}), F4Vector::e(1),
                        F4Vector::e(2), F4Vector::e(3)}},
          ShortRootSet{3,
                       {e0 + F4Vector::e(4), F4Vector::half(0, {-1, -1, -1, 1}), F4Vector::half(0, {1, -1, -1, 1}),
                        F4Vector::half(0, {-1, 1, -1, 1}), F4Vector::half(0, {-1, -1, 1, 1})}}};
}

std::optional<ShortRootPreimage> short_root_preimage(const F4Vector& g, int j) {
  for (int a = 1; a <= 6; ++a) {
    if (a == j) continue;
    F4Vector img = a5_to_f4(LatticePoint::root(a, j));
    for (int s : {1, -1}) {
      F4Vector cand = s == 1 ? img : -img;
      if (cand.same_mod_e0(g)) return ShortRootPreimage{a, j, s, g.v0 - cand.v0};
    }
  }
  return std::nullopt;
}

std::optional<ShortRootPreimage> short_root_preimage(const F4Vector& g) {
  for (int j = 1; j <= 3; ++j)
    if (auto p = short_root_preimage(g, j)) return p;
  return std::nullopt;
}

std::vector<ShortRootCheck> short_sets_report() {
  std::vector<ShortRootCheck> out;
  for (const auto& set : short_sets_raw())
    for (const auto& g : set.elements)
      out.push_back({set.label, g, g.norm2() == 1, short_root_preimage(g), short_root_preimage(g, set.label)});
  return out;
}

std::array<ShortRootSet, 3> short_sets() {
  for (const auto& c : short_sets_report())
    if (!c.short_length || !c.preimage)
      throw Error(ErrorKind::ValidationFailure,
                  "element " + c.element.to_string() + " of S" + std::to_string(c.label));
  return short_sets_raw();
}

// ------------------------------------------------------------ sigma_step

namespace {

bool in_set(const F4Vector& g, int j) {
  if (j < 1 || j > 3) return false;
  const auto sets = short_sets_raw();
  const auto& el = sets[static_cast<std::size_t>(j - 1)].elements;
  return std::find(el.begin(), el.end(), g) != el.end();
}

bool same_mod_e0(const LatticePoint& p, const LatticePoint& q) {
  LatticePoint d = p - q;
  int k = d[1];
  return d == e0_vector().scaled(k);
}

}  // namespace

SigmaFn sigma_step(const SigmaFn& s_beta, const SigmaFn& s_diag, const SigmaFn& s_known, int j, const F4Vector& g1,
                   const F4Vector& g2, SigmaUnknown unknown) {
  if (!in_set(g1, j) || !in_set(g2, j))
    throw Error(ErrorKind::InvalidArgument, "gamma1 and gamma2 must both lie in S" + std::to_string(j));
  if (g1 == g2) throw Error(ErrorKind::InvalidArgument, "gamma1 = gamma2");
  auto p1 = short_root_preimage(g1, j);
  auto p2 = short_root_preimage(g2, j);
  if (!p1) throw Error(ErrorKind::MissingPreimage, g1.to_string() + " in S" + std::to_string(j));
  if (!p2) throw Error(ErrorKind::MissingPreimage, g2.to_string() + " in S" + std::to_string(j));
  if (p1->sign != p2->sign)
    throw Error(ErrorKind::ConfigurationMismatch, "preimages of gamma1 and gamma2 have opposite orientation");
  // sign +1: g1 = d_i - d_j, g2 = d_k - d_j; sign -1: g1 = d_j - d_k, g2 = d_j - d_i.
  const MoveIJK m = p1->sign == 1 ? MoveIJK(p1->a, j, p2->a) : MoveIJK(p2->a, j, p1->a);
  const LatticePoint& alpha = s_beta.point;
  auto pts = move_points(alpha, m);
  const LatticePoint plus_g1 = p1->sign == 1 ? pts[2] : pts[3];
  const LatticePoint minus_g2 = p1->sign == 1 ? pts[3] : pts[2];
  const LatticePoint& target = unknown == SigmaUnknown::PlusGamma1 ? plus_g1 : minus_g2;
  const LatticePoint& other = unknown == SigmaUnknown::PlusGamma1 ? minus_g2 : plus_g1;
  if (!same_mod_e0(s_diag.point, pts[1]))
    throw Error(ErrorKind::ConfigurationMismatch, "sigma at beta+g1-g2 expected at " + pts[1].to_string());
  if (!same_mod_e0(s_known.point, other))
    throw Error(ErrorKind::ConfigurationMismatch, "known sigma expected at " + other.to_string());

  auto [G, H] = big_GH(alpha, m);
  RationalFunction K = s_beta.sigma - s_diag.sigma + RationalFunction(H);
  if (K.is_zero()) throw Error(ErrorKind::DegenerateK, alpha.to_string() + " " + move_string(m));
  const UniPoly t = UniPoly::t();
  RationalFunction s = RationalFunction(G) + s_diag.sigma + s_beta.sigma - s_known.sigma +
                       RationalFunction(t * (t - UniPoly(1))) * K.derivative() / K;
  return {target, s};
}

// ------------------------------------------------------------- Toda in F4

std::array<F4Vector, 3> toda_gammas() {
  return {F4Vector::half(1, {1, 1, 1, 1}), F4Vector::half(0, {1, 1, 1, -1}), F4Vector::e(0) + F4Vector::e(4)};
}

std::vector<TodaGammaRow> toda_gamma_table() {
  std::vector<TodaGammaRow> out;
  for (auto [a, b] : std::array<std::pair<int, int>, 3>{{{1, 2}, {1, 3}, {2, 3}}}) {
    F4Vector img = a5_to_f4(LatticePoint::root(a, b));
    for (const auto& g : toda_gammas())
      for (int s : {1, -1}) {
        F4Vector sg = s == 1 ? g : -g;
        if (img.same_mod_e0(sg)) out.push_back({a, b, img, g, s, img.v0 - sg.v0});
      }
  }
  return out;
}

TauT toda_step_f4(const TauT& T_beta, const TauT& T_near, const F4Vector& gamma) {
  const LatticePoint step = T_near.point - T_beta.point;
  for (const auto& row : toda_gamma_table()) {
    if (!(row.gamma == gamma)) continue;
    LatticePoint r = LatticePoint::root(row.a, row.b);
    if (step != r && step != -r) continue;
    TauT out;
    out.point = T_beta.point - step;
    out.weight = r_weight_int(out.point);
    out.T = exact_divide(toda_product(T_beta, row.a, row.b), T_near.T);
    return out;
  }
  const auto g = toda_gammas();
  if (std::find(g.begin(), g.end(), gamma) == g.end())
    throw Error(ErrorKind::InvalidArgument, "gamma " + gamma.to_string() + " is not one of the three Toda vectors");
  throw Error(ErrorKind::ConfigurationMismatch,
              "neighbour " + T_near.point.to_string() + " is not beta +- the preimage of " + gamma.to_string());
}

// --------------------------------------------------------------- symmetry

VQuad d4_action(const VQuad& v, const std::array<int, 4>& perm, const std::array<int, 4>& signs) {
  int prod = 1;
  std::array<int, 4> seen{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (signs[k] != 1 && signs[k] != -1) throw Error(ErrorKind::InvalidArgument, "signs must be +-1");
    if (perm[k] < 0 || perm[k] > 3 || seen[static_cast<std::size_t>(perm[k])]++)
      throw Error(ErrorKind::InvalidArgument, "not a permutation of 4");
    prod *= signs[k];
  }
  if (prod != 1) throw Error(ErrorKind::OddSignCount, "odd number of sign changes");
  VQuad r;
  for (std::size_t k = 0; k < 4; ++k) r[k] = v[static_cast<std::size_t>(perm[k])] * signs[k];
  return r;
}

namespace {

std::array<int, 3> inverse(const std::array<int, 3>& p) {
  std::array<int, 3> q{};
  for (int a = 0; a < 3; ++a) q[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])] = a;
  return q;
}

void check_perm(const std::array<int, 3>& p) {
  std::array<int, 3> s = p;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 3>{0, 1, 2}) throw Error(ErrorKind::InvalidArgument, "not a permutation of 3");
}

bool is_signed_power(ExactScalar c, const ExactScalar& base) {
  if (c < 0) c = -c;
  if (c == 1) return true;
  if (base == 1 || base == -1 || base == 0) return false;
  ExactScalar b = base < 0 ? ExactScalar(-base) : base;
  for (int e = 1; e <= 64; ++e) {
    if (c == pow(b, static_cast<long>(e)) || c == pow(b, static_cast<long>(-e))) return true;
  }
  return false;
}

}  // namespace

std::string TMap::to_string() const {
  RationalFunction m(UniPoly({b, a}), UniPoly({d, c}));
  return "t -> " + m.to_string() + ", h -> h*" + h_factor.to_string();
}

TMap induced_tmap(const std::array<int, 3>& perm) {
  check_perm(perm);
  // With x = (u, u+h, u+h/t) and y_a = x_perm[a], the original variables are
  // x_b = y_inv[b]. Scaled by t/h after removing u: Y = (0, t, 1).
  const auto inv = inverse(perm);
  auto Y = [](int idx) -> std::pair<ExactScalar, ExactScalar> {  // coefficient of t, constant
    if (idx == 0) return {0, 0};
    if (idx == 1) return {1, 0};
    return {0, 1};
  };
  auto [p0t, p0c] = Y(inv[0]);
  auto [p1t, p1c] = Y(inv[1]);
  auto [p2t, p2c] = Y(inv[2]);
  TMap m;
  m.a = p1t - p0t;
  m.b = p1c - p0c;
  m.c = p2t - p0t;
  m.d = p2c - p0c;
  m.h_factor = RationalFunction(UniPoly({m.b, m.a}), UniPoly::t());
  return m;
}

LatticePoint permute_point(const LatticePoint& p, const std::array<int, 3>& perm) {
  check_perm(perm);
  std::array<int, 3> ch{}, mu{};
  for (std::size_t a = 0; a < 3; ++a) {
    ch[a] = p.charge()[static_cast<std::size_t>(perm[a])];
    mu[a] = p.mu()[static_cast<std::size_t>(perm[a])];
  }
  return LatticePoint::from_parts(ch, mu);
}

PermuteResult component_permute(const std::array<int, 3>& perm, const FrameMatrix& w,
                                const std::vector<LatticePoint>& points) {
  PermuteResult out;
  out.perm = perm;
  out.tmap = induced_tmap(perm);
  TauGenerator orig(w), moved(w.permuted(perm));
  // Points are related by p' = perm(p) and the taus by y_a = x_perm[a], so
  // the original variables are x_b = y_inv[b].
  for (const auto& p : points) {
    LatticePoint q = permute_point(p, perm);
    const LaurentPoly& T = orig.at(p);
    const LaurentPoly& Tq = moved.at(q);
    out.table.insert(q, Tq);
    long R = r_weight_int(p);
    RationalFunction rhs =
        compose_mobius(T, out.tmap.a, out.tmap.b, out.tmap.c, out.tmap.d) * pow(out.tmap.h_factor, static_cast<int>(R));
    RationalFunction lhs = RationalFunction::from_laurent(Tq);
    if (lhs.is_zero() && rhs.is_zero()) {
      out.factor[p] = 0;
      continue;
    }
    if (lhs.is_zero() || rhs.is_zero()) {
      out.mismatches.push_back(p);
      continue;
    }
    RationalFunction ratio = lhs / rhs;
    if (!ratio.num().is_constant() || !(ratio.den() == UniPoly(1))) {
      out.mismatches.push_back(p);
      continue;
    }
    out.factor[p] = ratio.num().coeff(0);
  }
  return out;
}

// ----------------------------------------------------------------- sweeps

void check_f4(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep) {
  std::set<std::string> images;
  for (const auto& p : domain) {
    F4Vector f = a5_to_f4(p);
    rep.add("f4-membership", p.to_string(), f.in_lattice(), 1);
    bool fresh = images.insert(f.to_string()).second;
    rep.add("f4-injective", p.to_string(), fresh, 1);
  }
  for (const auto& r : simple_roots_check()) rep.add("f4-simple-root", r.name, r.match, 1);
  for (const auto& c : short_sets_report())
    rep.add("f4-short-root", "S" + std::to_string(c.label) + " " + c.element.to_string(),
            c.short_length && c.preimage.has_value(), 1);
  rep.add("f4-e0", "a5_to_f4(e0)", a5_to_f4(e0_in_a5()) == F4Vector::e(0), 1);

  const std::set<LatticePoint> inside(domain.begin(), domain.end());
  auto nonzero = [&](const LatticePoint& p) {
    const LaurentPoly* T = src.find(p);
    return inside.count(p) && T && !T->is_zero();
  };
  auto sig = [&](const LatticePoint& p) { return sigma_of(TauT{p, src.at(p), r_weight_int(p)}); };

  const auto sets = short_sets_raw();
  for (const auto& beta : domain) {
    if (!nonzero(beta)) continue;
    for (int j = 1; j <= 3; ++j) {
      const auto& el = sets[static_cast<std::size_t>(j - 1)].elements;
      for (const auto& g1 : el)
        for (const auto& g2 : el) {
          if (g1 == g2) continue;
          auto p1 = short_root_preimage(g1, j), p2 = short_root_preimage(g2, j);
          if (!p1 || !p2 || p1->sign != p2->sign) continue;
          MoveIJK m = p1->sign == 1 ? MoveIJK(p1->a, j, p2->a) : MoveIJK(p2->a, j, p1->a);
          auto pts = move_points(beta, m);
          if (!std::all_of(pts.begin(), pts.end(), nonzero)) continue;
          SigmaFn sb = sig(pts[0]), sd = sig(pts[1]);
          if (backlund_K(sb, sd, m).is_zero()) continue;
          const LatticePoint plus_g1 = p1->sign == 1 ? pts[2] : pts[3];
          const LatticePoint minus_g2 = p1->sign == 1 ? pts[3] : pts[2];
          std::string cfg = beta.to_string() + " S" + std::to_string(j) + " " + g1.to_string() + " " + g2.to_string();
          SigmaFn a = sigma_step(sb, sd, sig(minus_g2), j, g1, g2, SigmaUnknown::PlusGamma1);
          RationalFunction da = a.sigma - sig(plus_g1).sigma;
          rep.add("f4-sigma-step", cfg + " +g1", a.point == plus_g1 && da.is_zero(), residual_terms(da));
          SigmaFn b = sigma_step(sb, sd, sig(plus_g1), j, g1, g2, SigmaUnknown::MinusGamma2);
          RationalFunction db = b.sigma - sig(minus_g2).sigma;
          rep.add("f4-sigma-step", cfg + " -g2", b.point == minus_g2 && db.is_zero(), residual_terms(db));
        }
    }
    for (const auto& row : toda_gamma_table()) {
      LatticePoint r = LatticePoint::root(row.a, row.b);
      for (int s : {1, -1}) {
        LatticePoint near = beta + r.scaled(s), far = beta - r.scaled(s);
        if (!nonzero(near) || !inside.count(far) || !src.find(far)) continue;
        TauT got = toda_step_f4(TauT{beta, src.at(beta), r_weight_int(beta)},
                                TauT{near, src.at(near), r_weight_int(near)}, row.gamma);
        LaurentPoly diff = got.T - src.at(far);
        rep.add("f4-toda-step", beta.to_string() + " towards " + far.to_string(), got.point == far && diff.is_zero(),
                residual_terms(diff));
      }
    }
  }
}

void check_symmetry(const FrameMatrix& w, const std::vector<LatticePoint>& domain, Report& rep) {
  // D4: every permutation with an even number of sign changes fixes the
  // data through which v enters the sigma form.
  std::array<int, 4> perm{0, 1, 2, 3};
  std::vector<std::array<int, 4>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::array<int, 4>> signs;
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
    std::array<int, 4> s{};
    for (int k = 0; k < 4; ++k) s[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? -1 : 1;
    signs.push_back(s);
  }
  std::set<VQuad> seen;
  for (const auto& p : domain) {
    VQuad v = v_of_point(p);
    if (!seen.insert(v).second) continue;
    auto inv = jmo_invariants(v);
    bool ok = true;
    for (const auto& pm : perms)
      for (const auto& s : signs) ok = ok && jmo_invariants(d4_action(v, pm, s)) == inv;
    rep.add("d4-invariance", p.to_string(), ok, 1);
  }

  for (const auto& pm : std::array<std::array<int, 3>, 6>{
           {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}}) {
    PermuteResult res = component_permute(pm, w, domain);
    std::string tag = "perm (" + std::to_string(pm[0] + 1) + std::to_string(pm[1] + 1) + std::to_string(pm[2] + 1) + ")";
    std::set<LatticePoint> bad(res.mismatches.begin(), res.mismatches.end());
    TauGenerator orig(w);
    FrameMatrix wp = w.permuted(pm);
    for (const auto& p : domain) {
      bool ok = !bad.count(p);
      if (ok && res.factor.at(p) != 0) ok = is_signed_power(res.factor.at(p), w.determinant());
      if (ok) {
        // Tau level: tau'(perm p; y) = factor * tau(p; x) with x_b = y_inv[b].
        TriPoly a = tau_in_x(p.mu(), p.charge(), w).poly.permuted(pm);
        LatticePoint q = permute_point(p, pm);
        TriPoly b = tau_in_x(q.mu(), q.charge(), wp).poly;
        ok = b == a * res.factor.at(p);
      }
      rep.add("component-permute", tag + " " + p.to_string(), ok, 1);
    }
  }
}

}  // namespace pvi
