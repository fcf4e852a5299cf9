#include "pvi/io.hpp"

#include <json.hpp>
#include <sstream>

namespace pvi {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

template <class F>
auto parse_guard(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

ordered uni_j(const UniPoly& p) {
  ordered o = ordered::object();
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) o[std::to_string(i)] = to_string(p.coeff(i));
  return o;
}

UniPoly uni_from(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "polynomial must be a degree -> coefficient object");
  UniPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int d = std::stoi(it.key());
    if (d < 0) throw Error(ErrorKind::ParseError, "negative degree in polynomial");
    p += UniPoly::monomial(parse_scalar(it.value().get<std::string>()), d);
  }
  return p;
}

ordered laurent_j(const LaurentPoly& p) {
  ordered o;
  o["min_degree"] = p.min_degree();
  ordered c = ordered::array();
  for (const auto& x : p.coeffs()) c.push_back(to_string(x));
  o["coeffs"] = c;
  return o;
}

LaurentPoly laurent_from(const json& j) {
  std::vector<ExactScalar> c;
  for (const auto& x : j.at("coeffs")) c.push_back(parse_scalar(x.get<std::string>()));
  return LaurentPoly(j.at("min_degree").get<int>(), std::move(c));
}

ordered point_j(const LatticePoint& p) {
  ordered a = ordered::array();
  for (int x : p.data()) a.push_back(x);
  return a;
}

LatticePoint point_from(const json& j) {
  if (!j.is_array() || j.size() != 6) throw Error(ErrorKind::ParseError, "lattice point must be 6 integers");
  std::array<int, 6> a{};
  for (std::size_t i = 0; i < 6; ++i) a[i] = j[i].get<int>();
  return LatticePoint(a);
}

ordered f4_j(const F4Vector& v) {
  ordered a = ordered::array();
  a.push_back(v.v0);
  for (const auto& x : v.v) a.push_back(to_string(x));
  return a;
}

std::string coeff_list(const LaurentPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? ";" : "") + to_string(p.coeffs()[i]);
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

}  // namespace

std::string to_json(const UniPoly& p) { return uni_j(p).dump(); }
std::string to_json(const LaurentPoly& p) { return laurent_j(p).dump(); }

std::string to_json(const RationalFunction& f) {
  ordered o;
  o["num"] = uni_j(f.num());
  o["den"] = uni_j(f.den());
  return o.dump();
}

std::string to_json(const LatticePoint& p) { return point_j(p).dump(); }
std::string to_json(const F4Vector& v) { return f4_j(v).dump(); }

std::string to_json(const FrameMatrix& w) {
  ordered a = ordered::array();
  for (const auto& r : w.rows()) a.push_back({to_string(r[0]), to_string(r[1]), to_string(r[2])});
  return a.dump();
}

std::string to_json(const TauTable& t) {
  ordered a = ordered::array();
  for (const auto& [p, T] : t.entries()) {
    ordered e;
    e["point"] = point_j(p);
    e["weight"] = r_weight_int(p);
    e["T"] = laurent_j(T);
    a.push_back(e);
  }
  return a.dump(1);
}

std::string to_json(const EpsTable& e) {
  ordered o = ordered::object();
  for (const auto& [k, s] : e) o[std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2])] = s;
  return o.dump(1);
}

std::string to_json(const Report& r) {
  ordered o;
  o["ok"] = r.ok();
  o["checks"] = r.records.size();
  o["failures"] = r.failures();
  o["warnings"] = r.warnings;
  ordered ids = ordered::object();
  for (const auto& c : r.records) {
    ordered e;
    e["config"] = c.config;
    e["ok"] = c.ok;
    if (!c.ok) e["residual_terms"] = c.residual_terms;
    if (!ids.contains(c.identity)) ids[c.identity] = ordered::array();
    ids[c.identity].push_back(e);
  }
  o["identities"] = ids;
  return o.dump(1);
}

UniPoly unipoly_from_json(const std::string& s) {
  return parse_guard("polynomial", [&] { return uni_from(json::parse(s)); });
}

LaurentPoly laurent_from_json(const std::string& s) {
  return parse_guard("Laurent polynomial", [&] { return laurent_from(json::parse(s)); });
}

LatticePoint point_from_json(const std::string& s) {
  return parse_guard("lattice point", [&] { return point_from(json::parse(s)); });
}

F4Vector f4_from_json(const std::string& s) {
  return parse_guard("F4 vector", [&] {
    json j = json::parse(s);
    if (!j.is_array() || j.size() != 5) throw Error(ErrorKind::ParseError, "F4 vector must have 5 entries");
    F4Vector v;
    v.v0 = j[0].get<long>();
    for (std::size_t k = 0; k < 4; ++k) v.v[k] = parse_scalar(j[k + 1].get<std::string>());
    return v;
  });
}

FrameMatrix frame_from_json(const std::string& s) {
  return parse_guard("frame", [&] {
    json j = json::parse(s);
    if (!j.is_array() || j.size() != 3) throw Error(ErrorKind::ParseError, "frame must be a 3x3 array");
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
      if (!j[r].is_array() || j[r].size() != 3) throw Error(ErrorKind::ParseError, "frame must be a 3x3 array");
      for (std::size_t c = 0; c < 3; ++c) {
        const auto& x = j[r][c];
        m[r][c] = x.is_string() ? parse_scalar(x.get<std::string>()) : ExactScalar(x.get<long>());
      }
    }
    return FrameMatrix(m);
  });
}

TauTable tau_table_from_json(const std::string& s) {
  return parse_guard("tau table", [&] {
    TauTable t;
    for (const auto& e : json::parse(s)) {
      LatticePoint p = point_from(e.at("point"));
      if (e.contains("weight") && e.at("weight").get<long>() != r_weight_int(p))
        throw Error(ErrorKind::ParseError, "weight mismatch at " + p.to_string());
      t.insert(p, laurent_from(e.at("T")));
    }
    return t;
  });
}

EpsTable eps_table_from_json(const std::string& s) {
  return parse_guard("sign table", [&] {
    EpsTable e;
    json j = json::parse(s);
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::array<int, 3> k{};
      char c1 = 0, c2 = 0;
      std::istringstream is(it.key());
      is >> k[0] >> c1 >> k[1] >> c2 >> k[2];
      if (!is || c1 != ',' || c2 != ',' || !MoveIJK::valid(k[0], k[1], k[2]))
        throw Error(ErrorKind::ParseError, "bad sign-table key '" + it.key() + "'");
      int v = it.value().get<int>();
      if (v != 1 && v != -1) throw Error(ErrorKind::ParseError, "signs must be +-1");
      e[k] = v;
    }
    return e;
  });
}

std::string to_csv(const TauTable& t) {
  std::ostringstream os;
  os << "point,weight,min_degree,coeffs\n";
  for (const auto& [p, T] : t.entries())
    os << csv_field(p.to_string()) << "," << r_weight_int(p) << "," << T.min_degree() << "," << coeff_list(T) << "\n";
  return os.str();
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "identity,config,ok,residual_terms\n";
  for (const auto& c : r.records)
    os << csv_field(c.identity) << "," << csv_field(c.config) << "," << (c.ok ? "true" : "false") << ","
       << c.residual_terms << "\n";
  return os.str();
}

std::string correspondence_json(const std::vector<LatticePoint>& points) {
  ordered o;
  ordered rows = ordered::array();
  for (const auto& r : simple_roots_check()) {
    ordered e;
    e["root"] = r.name;
    e["expected"] = f4_j(r.expected);
    e["a5"] = point_j(r.a5);
    e["image"] = f4_j(r.image);
    e["match"] = r.match;
    rows.push_back(e);
  }
  o["simple_roots"] = rows;
  ordered sets = ordered::array();
  for (const auto& c : short_sets_report()) {
    ordered e;
    e["set"] = c.label;
    e["element"] = f4_j(c.element);
    e["short"] = c.short_length;
    auto pre = [](const std::optional<ShortRootPreimage>& p) -> ordered {
      if (!p) return nullptr;
      ordered q;
      q["root"] = point_j(p->root());
      q["e0_shift"] = p->e0_shift;
      return q;
    };
    e["preimage"] = pre(c.preimage);
    e["preimage_in_own_set"] = pre(c.labelled_preimage);
    sets.push_back(e);
  }
  o["short_roots"] = sets;
  ordered toda = ordered::array();
  for (const auto& r : toda_gamma_table()) {
    ordered e;
    e["pair"] = {r.a, r.b};
    e["image"] = f4_j(r.image);
    e["gamma"] = f4_j(r.gamma);
    e["sign"] = r.sign;
    e["e0_shift"] = r.e0_shift;
    toda.push_back(e);
  }
  o["toda_gamma"] = toda;
  ordered pts = ordered::array();
  for (const auto& p : points) {
    F4Vector f = a5_to_f4(p);
    pts.push_back({{"point", point_j(p)}, {"f4", f4_j(f)}, {"in_lattice", f.in_lattice()}});
  }
  o["points"] = pts;
  return o.dump(1);
}

}  // namespace pvi
