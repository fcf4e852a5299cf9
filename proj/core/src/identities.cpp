#include "pvi/identities.hpp"

#include <set>

namespace pvi {

namespace {

const UniPoly kT = UniPoly::t();
const LaurentPoly kTL = LaurentPoly::monomial(1, 1);

TauT tau_at(const TauSource& src, const LatticePoint& p) {
  TauT r;
  r.point = p;
  r.T = src.at(p);
  r.weight = r_weight_int(p);
  return r;
}

const LaurentPoly* lookup(const TauSource& src, const LatticePoint& p) {
  return src.find(p);
}

std::set<LatticePoint> as_set(const std::vector<LatticePoint>& v) { return {v.begin(), v.end()}; }

}  // namespace

UniPoly b_poly(int j) {
  switch (j) {
    case 1: return kT * (kT - UniPoly(1));
    case 2: return kT;
    case 3: return -(kT * kT);
    default: throw Error(ErrorKind::InvalidArgument, "direction index must be 1..3");
  }
}

LaurentPoly directional(int j, const LaurentPoly& T) { return LaurentPoly(b_poly(j)) * T.derivative(); }

LaurentPoly toda_product(const TauT& T, int a, int b) {
  const LaurentPoly& f = T.T;
  const LaurentPoly d = f.derivative();
  const LaurentPoly dd = d.derivative();
  const LaurentPoly t = kTL, one(1), t2 = kTL * kTL;
  if (a == 1 && b == 2)
    return LaurentPoly(ExactScalar(T.weight)) * f * f - (t - one) * t2 * d * d + t2 * f * (d + (t - one) * dd);
  if (a == 1 && b == 3)
    return t2 * (t * (t - one) * d * d + f * ((one - LaurentPoly(2) * t) * d - t * (t - one) * dd));
  if (a == 2 && b == 3) return t2 * (t * d * d - f * (d + t * dd));
  throw Error(ErrorKind::InvalidArgument, "Toda pair must be (1,2), (1,3) or (2,3)");
}

std::array<LatticePoint, 4> move_points(const LatticePoint& a, const MoveIJK& m) {
  return {a, a.moved(m.i, m.k), a.moved(m.i, m.j), a.moved(m.j, m.k)};
}

namespace {

void check_config(const TauT& Ta, const TauT& Tik, const TauT* Tij, const TauT* Tjk, const MoveIJK& m) {
  auto pts = move_points(Ta.point, m);
  bool ok = Tik.point == pts[1] && (!Tij || Tij->point == pts[2]) && (!Tjk || Tjk->point == pts[3]);
  if (!ok) throw Error(ErrorKind::ConfigurationMismatch, "points do not match move " + move_string(m) + " at " + Ta.point.to_string());
}

}  // namespace

LaurentPoly bilinear_lhs(const TauT& Ta, const TauT& Tik, const MoveIJK& m) {
  ExactScalar n = n_coeff(Ta.point, m);
  return Tik.T * directional(m.j, Ta.T) - Ta.T * directional(m.j, Tik.T) + LaurentPoly(n) * Ta.T * Tik.T;
}

LaurentPoly bilinear_residual(const TauT& Ta, const TauT& Tik, const TauT& Tij, const TauT& Tjk, const MoveIJK& m,
                              int eps) {
  check_config(Ta, Tik, &Tij, &Tjk, m);
  return bilinear_lhs(Ta, Tik, m) - LaurentPoly(ExactScalar(eps)) * Tij.T * Tjk.T;
}

TauT solve_fourth(const TauT& Ta, const TauT& Tik, const TauT& Tij, const MoveIJK& m, int eps) {
  check_config(Ta, Tik, &Tij, nullptr, m);
  TauT out;
  out.point = Ta.point.moved(m.j, m.k);
  out.weight = r_weight_int(out.point);
  out.T = exact_divide(bilinear_lhs(Ta, Tik, m), LaurentPoly(ExactScalar(eps)) * Tij.T);
  return out;
}

namespace {

LatticePoint plus2(const std::array<int, 6>& beta, int a, int b) {
  std::array<int, 6> x = beta;
  x[static_cast<std::size_t>(a - 1)] += 1;
  x[static_cast<std::size_t>(b - 1)] += 1;
  return LatticePoint(x);
}

std::string beta_string(const std::array<int, 6>& b) {
  std::string s = "[";
  for (std::size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + "]";
}

}  // namespace

std::array<LatticePoint, 6> miwa_first_points(const std::array<int, 6>& beta, int l) {
  return {plus2(beta, 2, 3), plus2(beta, 1, l), plus2(beta, 1, 3),
          plus2(beta, 2, l), plus2(beta, 1, 2), plus2(beta, 3, l)};
}

std::array<LatticePoint, 6> miwa_second_points(const std::array<int, 6>& beta, int k, int l, int i, int j) {
  return {plus2(beta, l, i), plus2(beta, k, j), plus2(beta, k, i),
          plus2(beta, l, j), plus2(beta, k, l), plus2(beta, i, j)};
}

LaurentPoly miwa_first(const TauSource& src, const std::array<int, 6>& beta, int l) {
  if (l < 4 || l > 6) throw Error(ErrorKind::InvalidArgument, "first relation needs l in 4..6");
  auto p = miwa_first_points(beta, l);
  return src.at(p[0]) * src.at(p[1]) - src.at(p[2]) * src.at(p[3]) + src.at(p[4]) * src.at(p[5]);
}

LaurentPoly miwa_second(const TauSource& src, const std::array<int, 6>& beta, int k, int l, int i, int j) {
  if (k < 1 || k > 3 || l < 1 || l > 3 || k == l || i < 4 || i > 6 || j < 4 || j > 6 || i == j)
    throw Error(ErrorKind::InvalidArgument, "second relation needs k != l in 1..3 and i != j in 4..6");
  auto p = miwa_second_points(beta, k, l, i, j);
  auto e = [](int a, int b) {
    std::array<int, 3> unit{0, 0, 0};
    unit[static_cast<std::size_t>(b - 1)] = 1;
    return LaurentPoly(ExactScalar(sign_eps(a, unit)));
  };
  return e(k, l) * src.at(p[0]) * src.at(p[1]) + e(l, k) * src.at(p[2]) * src.at(p[3]) +
         e(j - 3, i - 3) * src.at(p[4]) * src.at(p[5]);
}

std::pair<LaurentPoly, LaurentPoly> miwa_residuals(const TauSource& src, const std::array<int, 6>& beta,
                                                   const MiwaIndices& idx) {
  return {miwa_first(src, beta, idx.l1), miwa_second(src, beta, idx.k, idx.l, idx.i, idx.j)};
}

SigmaFn sigma_of(const TauT& T) {
  if (T.T.is_zero()) throw Error(ErrorKind::ZeroTau, T.point.to_string());
  auto [c5, c6] = c5_c6(T.point);
  RationalFunction logd = RationalFunction::from_laurent(T.T.derivative()) / RationalFunction::from_laurent(T.T);
  RationalFunction s = RationalFunction(kT * (kT - UniPoly(1))) * logd +
                       RationalFunction(UniPoly(c5) * (kT - UniPoly(1)) - UniPoly(ExactScalar(c6 / 2)));
  return {T.point, s};
}

VQuad v_of_point(const LatticePoint& p) {
  ExactScalar h(p[1] + p[3], 2);
  h.canonicalize();
  ExactScalar v4(p[1] - p[3], 2);
  v4.canonicalize();
  return {h + p[4], h + p[5], h + p[6], v4};
}

PVIParams via_params(const VQuad& v) {
  auto sq = [](const ExactScalar& x) { return ExactScalar(x * x); };
  PVIParams r;
  r.alpha = sq(v[2] - v[3]) / 2;
  r.beta = -sq(v[0] + v[1]) / 2;
  r.gamma = sq(v[0] - v[1]) / 2;
  r.delta = (1 - sq(v[2] + v[3] + 1)) / 2;
  return r;
}

std::array<ExactScalar, 5> jmo_invariants(const VQuad& v) {
  std::array<ExactScalar, 4> s;
  for (std::size_t k = 0; k < 4; ++k) s[k] = v[k] * v[k];
  ExactScalar e1 = s[0] + s[1] + s[2] + s[3];
  ExactScalar e2 = s[0] * s[1] + s[0] * s[2] + s[0] * s[3] + s[1] * s[2] + s[1] * s[3] + s[2] * s[3];
  ExactScalar e3 = s[0] * s[1] * s[2] + s[0] * s[1] * s[3] + s[0] * s[2] * s[3] + s[1] * s[2] * s[3];
  ExactScalar e4 = s[0] * s[1] * s[2] * s[3];
  return {v[0] * v[1] * v[2] * v[3], e1, e2, e3, e4};
}

RationalFunction jmo_residual(const RationalFunction& sigma, const VQuad& v) {
  // With sigma = A/B: sigma' = C/B^2, sigma'' = E/B^3, and the residual is
  // Q/B^8 for a polynomial Q assembled below.
  const UniPoly& A = sigma.num();
  const UniPoly& B = sigma.den();
  const UniPoly C = A.derivative() * B - A * B.derivative();
  const UniPoly E = C.derivative() * B - UniPoly(2) * C * B.derivative();
  const UniPoly tt = kT * (kT - UniPoly(1));
  const UniPoly B2 = B * B;
  const UniPoly B4 = B2 * B2;
  auto inv = jmo_invariants(v);
  UniPoly inner = C * (UniPoly(2) * A * B - (UniPoly(2) * kT - UniPoly(1)) * C) + UniPoly(inv[0]) * B4;
  UniPoly lhs = C * tt * tt * E * E + inner * inner;
  // prod_k (C + v_k^2 B^2) = C^4 + e1 C^3 B^2 + e2 C^2 B^4 + e3 C B^6 + e4 B^8
  UniPoly rhs;
  UniPoly cp = UniPoly(1), bp = UniPoly(1);
  std::array<UniPoly, 5> Cpow, Bpow;
  for (int k = 0; k <= 4; ++k) {
    Cpow[static_cast<std::size_t>(k)] = cp;
    Bpow[static_cast<std::size_t>(k)] = bp;
    cp *= C;
    bp *= B2;
  }
  const ExactScalar one = 1;
  const std::array<ExactScalar, 5> e{one, inv[1], inv[2], inv[3], inv[4]};
  for (std::size_t k = 0; k <= 4; ++k) rhs += UniPoly(e[k]) * Cpow[4 - k] * Bpow[k];
  return RationalFunction(lhs - rhs, Bpow[4]);
}

RationalFunction jmo_residual(const SigmaFn& s) { return jmo_residual(s.sigma, v_of_point(s.point)); }

RationalFunction backlund_K(const SigmaFn& sa, const SigmaFn& sik, const MoveIJK& m) {
  auto [G, H] = big_GH(sa.point, m);
  return sa.sigma - sik.sigma + RationalFunction(H);
}

RationalFunction sigma_backlund_residual(const SigmaFn& sa, const SigmaFn& sik, const SigmaFn& sij,
                                         const SigmaFn& sjk, const MoveIJK& m) {
  auto pts = move_points(sa.point, m);
  if (sik.point != pts[1] || sij.point != pts[2] || sjk.point != pts[3])
    throw Error(ErrorKind::ConfigurationMismatch, "sigma points do not match move " + move_string(m));
  auto [G, H] = big_GH(sa.point, m);
  RationalFunction K = sa.sigma - sik.sigma + RationalFunction(H);
  if (K.is_zero()) throw Error(ErrorKind::DegenerateK, sa.point.to_string() + " " + move_string(m));
  RationalFunction lhs = sij.sigma + sjk.sigma - sik.sigma - sa.sigma - RationalFunction(G);
  return lhs * K - RationalFunction(kT * (kT - UniPoly(1))) * K.derivative();
}

EpsTable calibrate_eps(const TauSource& src, const std::vector<LatticePoint>& domain,
                       std::vector<std::array<int, 3>>* uninformative) {
  const auto inside = as_set(domain);
  std::map<std::array<int, 3>, std::optional<int>> found;
  for (const auto& m : all_moves()) found[{m.i, m.j, m.k}] = std::nullopt;
  for (const auto& a : domain) {
    for (const auto& m : all_moves()) {
      auto pts = move_points(a, m);
      bool all = true;
      for (const auto& p : pts) all = all && inside.count(p) && lookup(src, p);
      if (!all) continue;
      TauT Ta = tau_at(src, pts[0]), Tik = tau_at(src, pts[1]);
      LaurentPoly lhs = bilinear_lhs(Ta, Tik, m);
      LaurentPoly rhs = src.at(pts[2]) * src.at(pts[3]);
      if (lhs.is_zero() && rhs.is_zero()) continue;
      int s;
      if (lhs == rhs) {
        s = 1;
      } else if (lhs == -rhs) {
        s = -1;
      } else {
        throw Error(ErrorKind::NoConsistentSign, "no sign fits move " + move_string(m) + " at " + a.to_string());
      }
      auto& slot = found[{m.i, m.j, m.k}];
      if (slot && *slot != s)
        throw Error(ErrorKind::NoConsistentSign, "sign of move " + move_string(m) + " changes at " + a.to_string());
      slot = s;
    }
  }
  EpsTable out;
  for (const auto& [key, s] : found) {
    if (!s && uninformative) {
      uninformative->push_back(key);
      out[key] = 1;
      continue;
    }
    if (!s)
      throw Error(ErrorKind::InsufficientData, "no informative configuration for move (" + std::to_string(key[0]) +
                                                   "," + std::to_string(key[1]) + "," + std::to_string(key[2]) + ")");
    out[key] = *s;
  }
  return out;
}

EpsTable majority_eps(const TauSource& src, const std::vector<LatticePoint>& domain) {
  const auto inside = as_set(domain);
  std::map<std::array<int, 3>, long> votes;
  for (const auto& m : all_moves()) votes[{m.i, m.j, m.k}] = 0;
  for (const auto& a : domain)
    for (const auto& m : all_moves()) {
      auto pts = move_points(a, m);
      bool all = true;
      for (const auto& p : pts) all = all && inside.count(p) && lookup(src, p);
      if (!all) continue;
      LaurentPoly lhs = bilinear_lhs(tau_at(src, pts[0]), tau_at(src, pts[1]), m);
      LaurentPoly rhs = src.at(pts[2]) * src.at(pts[3]);
      if (lhs.is_zero() && rhs.is_zero()) continue;
      if (lhs == rhs) ++votes[{m.i, m.j, m.k}];
      if (lhs == -rhs) --votes[{m.i, m.j, m.k}];
    }
  EpsTable out;
  for (const auto& [k, v] : votes) out[k] = v < 0 ? -1 : 1;
  return out;
}

// ------------------------------------------------------------------ sweeps

void Report::add(std::string identity, std::string config, bool ok, std::size_t terms) {
  records.push_back({std::move(identity), std::move(config), ok, ok ? 0 : terms});
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.ok ? 0 : 1;
  return n;
}

std::size_t Report::count(const std::string& identity) const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.identity == identity ? 1 : 0;
  return n;
}

std::vector<CheckRecord> Report::failing() const {
  std::vector<CheckRecord> out;
  for (const auto& r : records)
    if (!r.ok) out.push_back(r);
  return out;
}

std::size_t residual_terms(const LaurentPoly& p) { return p.term_count(); }

std::size_t residual_terms(const RationalFunction& f) {
  std::size_t n = 0;
  for (const auto& c : f.num().coeffs()) n += c != 0 ? 1 : 0;
  return n;
}

std::string move_string(const MoveIJK& m) {
  return "(" + std::to_string(m.i) + "," + std::to_string(m.j) + "," + std::to_string(m.k) + ")";
}

void check_toda(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep) {
  static constexpr std::array<std::array<int, 2>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& p : domain) {
    if (r_weight(p) < 0) continue;
    const LaurentPoly* T = lookup(src, p);
    if (!T) continue;
    for (auto [a, b] : pairs) {
      const LaurentPoly* f = lookup(src, p.moved(a, b));
      const LaurentPoly* g = lookup(src, p.moved(b, a));
      if (!f || !g) continue;
      TauT tt{p, *T, r_weight_int(p)};
      LaurentPoly res = toda_product(tt, a, b) - (*f) * (*g);
      rep.add("toda", p.to_string() + " pair (" + std::to_string(a) + "," + std::to_string(b) + ")", res.is_zero(),
              residual_terms(res));
    }
  }
}

void check_translation(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep) {
  for (const auto& p : domain) {
    auto [q, s] = e0_translate(p);
    const LaurentPoly* a = lookup(src, p);
    const LaurentPoly* b = lookup(src, q);
    if (!a || !b) continue;
    LaurentPoly res = *a - LaurentPoly(ExactScalar(s)) * (*b);
    rep.add("translation", p.to_string(), res.is_zero(), residual_terms(res));
  }
}

void check_jmo(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep) {
  for (const auto& p : domain) {
    const LaurentPoly* T = lookup(src, p);
    if (!T || T->is_zero()) continue;
    RationalFunction res = jmo_residual(sigma_of(TauT{p, *T, r_weight_int(p)}));
    rep.add("jmo", p.to_string(), res.is_zero(), residual_terms(res));
  }
}

namespace {

template <class F>
void for_each_move_config(const TauSource& src, const std::vector<LatticePoint>& domain, F&& f) {
  const auto inside = as_set(domain);
  for (const auto& a : domain)
    for (const auto& m : all_moves()) {
      auto pts = move_points(a, m);
      bool all = true;
      for (const auto& p : pts) all = all && inside.count(p) && lookup(src, p);
      if (all) f(a, m, pts);
    }
}

int eps_for(const EpsTable& eps, const MoveIJK& m) {
  auto it = eps.find({m.i, m.j, m.k});
  if (it == eps.end()) throw Error(ErrorKind::InsufficientData, "no sign for move " + move_string(m));
  return it->second;
}

}  // namespace

void check_bilinear(const TauSource& src, const std::vector<LatticePoint>& domain, const EpsTable& eps,
                    Report& rep) {
  for_each_move_config(src, domain, [&](const LatticePoint& a, const MoveIJK& m, const auto& pts) {
    LaurentPoly res = bilinear_residual(tau_at(src, pts[0]), tau_at(src, pts[1]), tau_at(src, pts[2]),
                                        tau_at(src, pts[3]), m, eps_for(eps, m));
    rep.add("bilinear", a.to_string() + " move " + move_string(m), res.is_zero(), residual_terms(res));
  });
}

void check_solve_fourth(const TauSource& src, const std::vector<LatticePoint>& domain, const EpsTable& eps,
                        Report& rep) {
  for_each_move_config(src, domain, [&](const LatticePoint& a, const MoveIJK& m, const auto& pts) {
    if (src.at(pts[2]).is_zero()) return;
    std::string cfg = a.to_string() + " move " + move_string(m);
    try {
      TauT got = solve_fourth(tau_at(src, pts[0]), tau_at(src, pts[1]), tau_at(src, pts[2]), m, eps_for(eps, m));
      LaurentPoly diff = got.T - src.at(pts[3]);
      rep.add("solve-fourth", cfg, diff.is_zero(), residual_terms(diff));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotDivisible) throw;
      rep.add("solve-fourth", cfg + " not divisible", false, 1);
    }
  });
}

void check_miwa(const TauSource& src, const std::vector<LatticePoint>& domain, Report& rep) {
  const auto inside = as_set(domain);
  std::set<std::array<int, 6>> bases;
  for (const auto& p : domain)
    for (int x = 1; x <= 6; ++x)
      for (int y = x + 1; y <= 6; ++y) {
        std::array<int, 6> b = p.data();
        b[static_cast<std::size_t>(x - 1)] -= 1;
        b[static_cast<std::size_t>(y - 1)] -= 1;
        bases.insert(b);
      }
  auto present = [&](const auto& pts) {
    for (const auto& q : pts)
      if (!inside.count(q) || !lookup(src, q)) return false;
    return true;
  };
  for (const auto& beta : bases) {
    for (int l = 4; l <= 6; ++l) {
      if (!present(miwa_first_points(beta, l))) continue;
      LaurentPoly res = miwa_first(src, beta, l);
      rep.add("miwa-first", beta_string(beta) + " l=" + std::to_string(l), res.is_zero(), residual_terms(res));
    }
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l)
        for (int i = 4; i <= 6; ++i)
          for (int j = 4; j <= 6; ++j) {
            if (k == l || i == j) continue;
            if (!present(miwa_second_points(beta, k, l, i, j))) continue;
            LaurentPoly res = miwa_second(src, beta, k, l, i, j);
            rep.add("miwa-second",
                    beta_string(beta) + " k,l,i,j=" + std::to_string(k) + "," + std::to_string(l) + "," +
                        std::to_string(i) + "," + std::to_string(j),
                    res.is_zero(), residual_terms(res));
          }
  }
}

void check_sigma_backlund(const TauSource& src, const std::vector<LatticePoint>& domain, const EpsTable& eps,
                          Report& rep) {
  for_each_move_config(src, domain, [&](const LatticePoint& a, const MoveIJK& m, const auto& pts) {
    for (const auto& p : pts)
      if (src.at(p).is_zero()) return;
    std::array<SigmaFn, 4> s{sigma_of(tau_at(src, pts[0])), sigma_of(tau_at(src, pts[1])),
                             sigma_of(tau_at(src, pts[2])), sigma_of(tau_at(src, pts[3]))};
    if (backlund_K(s[0], s[1], m).is_zero()) return;
    std::string cfg = a.to_string() + " move " + move_string(m);
    RationalFunction res = sigma_backlund_residual(s[0], s[1], s[2], s[3], m);
    rep.add("sigma-backlund", cfg, res.is_zero(), residual_terms(res));
    bool bil = bilinear_residual(tau_at(src, pts[0]), tau_at(src, pts[1]), tau_at(src, pts[2]), tau_at(src, pts[3]),
                                 m, eps_for(eps, m))
                   .is_zero();
    rep.add("bilinear-implies-sigma", cfg, !bil || res.is_zero(), 1);
  });
}

}  // namespace pvi
