#include "pvi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pvi/f4.hpp"
#include "pvi/io.hpp"

namespace pvi::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<LatticePoint> domain_of(const RunConfig& cfg, const TauSource& src) {
  std::vector<LatticePoint> d;
  for (const auto& p : ball(cfg.radius))
    if (src.find(p)) d.push_back(p);
  return d;
}

}  // namespace

void RunConfig::validate() const {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "radius must be nonnegative");
  if (radius > radius_limit)
    throw Error(ErrorKind::InvalidArgument,
                "radius " + std::to_string(radius) + " exceeds limit " + std::to_string(radius_limit));
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw Error(ErrorKind::InvalidArgument, "unknown suite '" + s + "'");
}

FrameMatrix load_frame(const std::string& path) { return frame_from_json(read_file(path)); }

FrameMatrix preset_frame(const std::string& name) {
  if (name == "vandermonde") return FrameMatrix::vandermonde();
  if (name == "identity") return FrameMatrix::identity();
  throw Error(ErrorKind::InvalidArgument, "unknown preset '" + name + "'");
}

std::set<std::string> parse_suites(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

LatticePoint parse_point(const std::string& text) {
  std::string s = text;
  if (s.empty() || s.front() != '[') s = "[" + s + "]";
  return point_from_json(s);
}

TauTable load_table(const std::string& path) { return tau_table_from_json(read_file(path)); }

Report run_suites(const RunConfig& cfg, const TauSource& src) {
  cfg.validate();
  Report rep;
  if (cfg.suites.empty()) {
    rep.warnings.push_back("no suites selected; nothing was checked");
    return rep;
  }
  const auto domain = domain_of(cfg, src);
  auto has = [&](const char* s) { return cfg.suites.count(s) > 0; };

  std::optional<EpsTable> eps;
  if (has("bilinear") || has("sigma-backlund")) {
    try {
      std::vector<std::array<int, 3>> loose;
      eps = calibrate_eps(src, domain, &loose);
      if (!loose.empty())
        rep.warnings.push_back(std::to_string(loose.size()) +
                               " moves have no configuration with a nonzero side; their sign is immaterial");
    } catch (const Error& e) {
      rep.add("calibrate-eps", e.what(), false, 1);
      eps = majority_eps(src, domain);
    }
  }

  auto guarded = [&](const std::string& suite, auto&& body) {
    if (!has(suite.c_str())) return;
    try {
      body();
    } catch (const Error& e) {
      rep.add(suite, e.what(), false, 1);
    }
  };
  guarded("toda", [&] { check_toda(src, domain, rep); });
  guarded("bilinear", [&] {
    if (!eps) return;
    check_bilinear(src, domain, *eps, rep);
    check_solve_fourth(src, domain, *eps, rep);
  });
  guarded("miwa", [&] { check_miwa(src, domain, rep); });
  guarded("jmo", [&] { check_jmo(src, domain, rep); });
  guarded("sigma-backlund", [&] {
    if (eps) check_sigma_backlund(src, domain, *eps, rep);
  });
  guarded("f4", [&] { check_f4(src, domain, rep); });
  guarded("symmetry", [&] {
    check_translation(src, domain, rep);
    check_symmetry(cfg.frame, domain, rep);
  });
  return rep;
}

std::string cmd_gen(const RunConfig& cfg) {
  cfg.validate();
  TauTable t = generate_ball(cfg.frame, cfg.radius);
  return cfg.format == Format::Csv ? to_csv(t) : to_json(t) + "\n";
}

VerifyResult cmd_verify(const RunConfig& cfg, const TauSource& table) { return {run_suites(cfg, table)}; }

std::string format_report(const Report& r, Format f) { return f == Format::Csv ? to_csv(r) : to_json(r) + "\n"; }

std::string cmd_sigma(const LatticePoint& p, const TauSource& table) {
  const LaurentPoly* T = table.find(p);
  if (!T) throw Error(ErrorKind::UnknownPoint, "point " + p.to_string() + " is not in the table");
  SigmaFn s = sigma_of(TauT{p, *T, r_weight_int(p)});
  nlohmann::ordered_json o;
  o["point"] = nlohmann::ordered_json::parse(to_json(p));
  o["sigma"] = nlohmann::ordered_json::parse(to_json(s.sigma));
  auto v = v_of_point(p);
  o["v"] = nlohmann::ordered_json::array();
  for (const auto& x : v) o["v"].push_back(to_string(x));
  return o.dump(1) + "\n";
}

std::string cmd_map_f4(const RunConfig& cfg) {
  cfg.validate();
  return correspondence_json(ball(cfg.radius)) + "\n";
}

std::string cmd_calibrate_eps(const RunConfig& cfg) {
  cfg.validate();
  TauGenerator gen(cfg.frame);
  return to_json(calibrate_eps(gen, ball(cfg.radius))) + "\n";
}

}  // namespace pvi::cli
