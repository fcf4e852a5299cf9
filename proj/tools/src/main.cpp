#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pvi/cli.hpp"

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw pvi::Error(pvi::ErrorKind::InvalidArgument, "cannot write " + out);
  f << text;
}

struct Common {
  std::string frame_path;
  std::string preset = "vandermonde";
  std::string suites;
  bool with_suites = false;
  std::string format = "json";
  pvi::cli::RunConfig cfg;

  void attach(CLI::App* sub, bool with_suites) {
    auto* fp = sub->add_option("--frame", frame_path, "frame file: 3x3 JSON array of scalars");
    sub->add_option("--preset", preset, "named frame (vandermonde, identity)")->excludes(fp);
    sub->add_option("--radius", cfg.radius, "lattice ball radius in moves")->capture_default_str();
    sub->add_option("--radius-limit", cfg.radius_limit, "largest accepted radius")->capture_default_str();
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    this->with_suites = with_suites;
    if (with_suites) sub->add_option("--suites", suites, "comma separated suite list");
  }

  pvi::cli::RunConfig resolve(const CLI::App* sub) {
    cfg.frame = frame_path.empty() ? pvi::cli::preset_frame(preset) : pvi::cli::load_frame(frame_path);
    if (with_suites && sub->count("--suites")) cfg.suites = pvi::cli::parse_suites(suites);
    cfg.format = format == "csv" ? pvi::cli::Format::Csv : pvi::cli::Format::Json;
    cfg.validate();
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational tau functions of Painleve VI on the sl6 root lattice"};
  app.require_subcommand(1);

  Common gen_o, ver_o, sig_o, map_o, eps_o;
  auto* gen = app.add_subcommand("gen", "write the tau table of a lattice ball");
  gen_o.attach(gen, false);

  auto* ver = app.add_subcommand("verify", "run identity suites; exit 0 iff every residual vanishes");
  ver_o.attach(ver, true);
  std::string table_path;
  ver->add_option("--table", table_path, "tau table to check (default: generate from the frame)");

  auto* sig = app.add_subcommand("sigma", "sigma function and v parameters at a lattice point");
  sig_o.attach(sig, false);
  std::string point_text, sig_table;
  sig->add_option("--point", point_text, "lattice point, e.g. [-1,0,0,1,0,0]")->required();
  sig->add_option("--table", sig_table, "tau table (default: generate from the frame)");

  auto* map = app.add_subcommand("map-f4", "image of the ball in the F4 root lattice and the root tables");
  map_o.attach(map, false);

  auto* cal = app.add_subcommand("calibrate-eps", "sign table of the bilinear relations");
  eps_o.attach(cal, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      auto cfg = gen_o.resolve(gen);
      emit(pvi::cli::cmd_gen(cfg), cfg.out);
    } else if (ver->parsed()) {
      auto cfg = ver_o.resolve(ver);
      pvi::cli::VerifyResult r;
      if (table_path.empty()) {
        pvi::TauGenerator g(cfg.frame);
        r = pvi::cli::cmd_verify(cfg, g);
      } else {
        r = pvi::cli::cmd_verify(cfg, pvi::cli::load_table(table_path));
      }
      emit(pvi::cli::format_report(r.report, cfg.format), cfg.out);
      for (const auto& w : r.report.warnings) std::cerr << "warning: " << w << "\n";
      for (const auto& f : r.report.failing()) std::cerr << "FAIL " << f.identity << " " << f.config << "\n";
      std::cerr << r.report.records.size() << " checks, " << r.report.failures() << " failed\n";
      return r.exit_code();
    } else if (sig->parsed()) {
      auto cfg = sig_o.resolve(sig);
      auto p = pvi::cli::parse_point(point_text);
      if (sig_table.empty()) {
        pvi::TauTable t;
        pvi::TauGenerator g(cfg.frame);
        if (const auto* T = g.find(p)) t.insert(p, *T);
        emit(pvi::cli::cmd_sigma(p, t), cfg.out);
      } else {
        emit(pvi::cli::cmd_sigma(p, pvi::cli::load_table(sig_table)), cfg.out);
      }
    } else if (map->parsed()) {
      auto cfg = map_o.resolve(map);
      emit(pvi::cli::cmd_map_f4(cfg), cfg.out);
    } else if (cal->parsed()) {
      auto cfg = eps_o.resolve(cal);
      emit(pvi::cli::cmd_calibrate_eps(cfg), cfg.out);
    }
  } catch (const pvi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
