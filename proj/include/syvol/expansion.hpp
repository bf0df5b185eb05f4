// Formal expansion u = t v, v = 1 + t v_1 + t^2 v_2 + ..., of the singular
// Yamabe defining function.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "syvol/fiber.hpp"
#include "syvol/geometry.hpp"
#include "syvol/models.hpp"
#include "syvol/series.hpp"

namespace syvol::expansion {

struct LogTerm {
  int order = 0;
  int log_power = 1;
  fiber::FiberFunction coeff;
};

struct JetSeries {
  int n = 0;
  int k = 0;
  int order = 0;
  std::vector<fiber::FiberFunction> v;
  std::vector<LogTerm> log_terms;
  int residual_order = 0;
  std::vector<std::string> flags;
};

class ObstructionHit : public std::runtime_error {
 public:
  ObstructionHit(int nu, double value);
  int nu;
  double value;
};

struct SymmetricOptions {
  /// Record a log term at an obstructed order instead of throwing.
  bool allow_log = false;
  /// |F| below this at a resonant order counts as unobstructed.
  double obstruction_tol = 1e-9;
  series::ContourOptions contour{};
};

/// Order-s coefficient of L[t V] for a fiber-constant polynomial V on a
/// warped-product model.
std::vector<double> residual_coefficients(const geometry::WarpedProfile& p, const std::vector<double>& V,
                                          int count, const series::ContourOptions& opt = {});

/// Highest order expand_symmetric accepts: n + 1, but at least 4.
constexpr int symmetric_order_cap(int n) { return n + 1 > 4 ? n + 1 : 4; }

JetSeries expand_symmetric(const geometry::WarpedProfile& p, int N, const SymmetricOptions& opt = {});

/// Orders 0..2 at a point of a surface; for k = 4 a log term at order 2.
JetSeries expand_n2(const geometry::FermiPointData& point);

/// Right-hand side G with I_2 v_2 = -G / 2.
fiber::FiberFunction n2_source(const geometry::FermiPointData& point);

/// u = t v evaluated with its log terms, for a fiber-constant series.
series::Jet2 evaluate_radial(const JetSeries& s, series::cplx t);

struct ResidualCheck {
  std::vector<double> t;
  std::vector<double> residual;
  double slope = 0.0;
  bool exact = false;
  bool ok = false;
};

/// Fit the log-log slope of |2 L[t v]| over t in [t_lo, t_hi].
ResidualCheck residual_slope(const geometry::WarpedProfile& p, const JetSeries& s, double t_lo = 0.02,
                             double t_hi = 0.08, int samples = 12);

}  // namespace syvol::expansion
