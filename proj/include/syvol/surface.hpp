// Parametrized surfaces sampled on tensor grids, and their per-point invariants.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "syvol/geometry.hpp"

namespace syvol::geometry {

enum class Ambient { Flat, Sphere };
/// Periodic: u_j = 2 pi j / N.  Polar: theta_j = pi (j + 1/2) / N, the
/// u-axis only, with an even number of periodic v samples.  Open: uniform
/// samples of [range_lo, range_hi] including both ends.
enum class AxisKind { Periodic, Polar, Open };

std::string to_string(Ambient a);
std::string to_string(AxisKind a);

struct SurfaceGrid {
  Ambient ambient = Ambient::Flat;
  int codimension = 1;
  int nu = 0;
  int nv = 0;
  AxisKind u_kind = AxisKind::Periodic;
  AxisKind v_kind = AxisKind::Periodic;
  double u_lo = 0.0, u_hi = 1.0;
  double v_lo = 0.0, v_hi = 1.0;
  /// Row (iu * nv + iv) is the embedded point; flat ambient uses R^{2+k},
  /// spherical ambient the unit sphere in R^{3+k}.
  Eigen::MatrixXd points;
  /// Translation picked up after one period in u (or v), for lattice-periodic
  /// graphs such as a torus given over its fundamental domain.
  Eigen::VectorXd shift_u;
  Eigen::VectorXd shift_v;

  int embedding_dim() const { return 2 + codimension + (ambient == Ambient::Sphere ? 1 : 0); }
  double u_param(int i) const;
  double v_param(int j) const;
  void validate() const;
};

struct SurfaceDerivatives {
  Eigen::MatrixXd Xu, Xv, Xuu, Xuv, Xvv;
};

SurfaceDerivatives differentiate(const SurfaceGrid& s);

/// Quadrature weights in the (u, v) parameters, one per grid point.
Eigen::VectorXd parameter_weights(const SurfaceGrid& s);

struct SurfaceOptions {
  /// Rotate each normal frame so the first normal carries the dominant part
  /// of the second fundamental form (required for the Zonal basis).
  bool align_normals = true;
  fiber::BasisKind kind_override = fiber::BasisKind::Constant;
  bool use_override = false;
};

/// Per-point Fermi data.  area_weight already contains sqrt(det h0).
std::vector<FermiPointData> surface_invariants(const SurfaceGrid& s, const SurfaceOptions& opt = {});

/// Per-point intrinsic scalar curvature from the first fundamental form.
Eigen::VectorXd intrinsic_scalar_curvature(const SurfaceGrid& s);

/// Integral of a per-point field over the surface.
double integrate(const std::vector<FermiPointData>& pts, const std::vector<double>& field);
double surface_area(const std::vector<FermiPointData>& pts);

}  // namespace syvol::geometry
