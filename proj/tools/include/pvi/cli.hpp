// Command layer behind the pvi executable. Each command returns its output
// text so it can be driven from tests without touching the filesystem.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pvi/identities.hpp"
#include "pvi/lattice.hpp"
#include "pvi/tau.hpp"

namespace pvi::cli {

enum class Format { Json, Csv };

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"toda", "bilinear", "miwa", "jmo", "sigma-backlund", "f4", "symmetry"};
  return names;
}

struct RunConfig {
  FrameMatrix frame = FrameMatrix::vandermonde();
  int radius = 1;
  int radius_limit = 3;
  std::set<std::string> suites{suite_names().begin(), suite_names().end()};
  std::string out;  // empty: stdout
  Format format = Format::Json;

  void validate() const;  // InvalidArgument on radius or suite problems
};

FrameMatrix load_frame(const std::string& path);
FrameMatrix preset_frame(const std::string& name);
std::set<std::string> parse_suites(const std::string& list);  // comma separated; "" is the empty set
LatticePoint parse_point(const std::string& text);             // "[a,b,...]" or "a,b,..."
TauTable load_table(const std::string& path);

struct VerifyResult {
  Report report;
  int exit_code() const { return report.ok() ? 0 : 1; }
};

// Runs the selected suites on `src`. Base points are the ball points present
// in `src`; the symmetry suite additionally regenerates from cfg.frame.
Report run_suites(const RunConfig& cfg, const TauSource& src);

std::string cmd_gen(const RunConfig& cfg);
VerifyResult cmd_verify(const RunConfig& cfg, const TauSource& table);
std::string format_report(const Report& r, Format f);
std::string cmd_sigma(const LatticePoint& p, const TauSource& table);  // UnknownPoint, ZeroTau
std::string cmd_map_f4(const RunConfig& cfg);
std::string cmd_calibrate_eps(const RunConfig& cfg);

}  // namespace pvi::cli
