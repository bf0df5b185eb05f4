// The acceptance suite: nine numerical checks against independent oracles,
// shared by the `verify` subcommand and the acceptance test binary.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace syvol::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Worst observed error (or mismatch count) and the bound it is held to.
  double measured = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
};

CriterionResult exceptional_tables(const VerifyOptions& opt = {});
CriterionResult equatorial_expansion(const VerifyOptions& opt = {});
CriterionResult energy_anchor(const VerifyOptions& opt = {});
CriterionResult volume_anchors(const VerifyOptions& opt = {});
CriterionResult closed_form_cross_check(const VerifyOptions& opt = {});
CriterionResult conformal_invariance(const VerifyOptions& opt = {});
CriterionResult parity_suite(const VerifyOptions& opt = {});
CriterionResult anomaly_covariance(const VerifyOptions& opt = {});
CriterionResult eikonal_radial(const VerifyOptions& opt = {});

using Criterion = std::function<CriterionResult(const VerifyOptions&)>;
std::vector<Criterion> all_criteria();

std::vector<CriterionResult> run_all(const VerifyOptions& opt = {});

/// "PASS [3] title: measured 1.2e-09 <= 1e-06 (0.12 s / 5 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace syvol::verify
