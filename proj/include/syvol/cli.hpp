// Batch front end: classify | expand | energy | volume | eikonal | verify.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure (including a
// failed `verify`), 3 numerical guard (ill-conditioned fit, degenerate metric).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace syvol::cli {

/// Every parameter a subcommand reads.  Config files use the same keys as
/// the long flags, one `key = value` per line; flags override file values.
struct RunConfig {
  std::string command;
  int n = 2;
  int k = 2;
  std::string model = "equatorial";
  std::string surface;
  int grid = 64;
  double a = 1.0;
  double c = 2.0;
  double eps = 0.1;
  int order = -1;
  int point = 0;
  bool allow_log = true;
  double eps_min = 1e-3;
  double eps_max = 1e-2;
  int samples = 40;
  int corrections = 2;
  double quad_tol = 1e-12;
  double max_condition = 1e10;
  std::vector<double> omega{0.0};
  bool table = false;
  int nmax = 12;
  std::uint64_t seed = 20240601;
  std::string out;
  std::string csv;
};

/// Throws std::invalid_argument on inconsistent values.
void validate(const RunConfig& cfg);

/// Config text that reads back to the same RunConfig.
std::string to_config_text(const RunConfig& cfg);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace syvol::cli
