// Model geometries: warped-product tube metrics for symmetric cases and
// sampled surfaces for the pointwise pipeline.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "syvol/series.hpp"
#include "syvol/surface.hpp"

namespace syvol::geometry {

class UnknownModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using ProfileFn = std::function<series::Jet2(series::cplx)>;

/// Ambient metric dt^2 + phi(t)^2 g_Sigma + psi(t)^2 b on the tube around
/// Sigma, with Sigma of dimension n and constant scalar curvature R_sigma.
struct WarpedProfile {
  std::string name;
  int n = 2;
  int k = 2;
  double R_sigma = 0.0;
  /// Volume of Sigma used for integrated quantities (1 for flat models).
  double sigma_volume = 1.0;
  ProfileFn phi;
  ProfileFn psi;
  /// Radius of analyticity of the profile around t = 0.
  double analytic_radius = 1.0;
  /// Upper end of the tube used for volume integrals.
  double t_max = 1.0;

  /// Scalar curvature of the ambient metric at distance t.
  series::cplx scalar_curvature(series::cplx t) const;
  /// Laplacian of a radial function with the given jet.
  series::cplx radial_laplacian(series::cplx t, const series::Jet2& u) const;
  /// 2 L[u] for a radial u.
  series::cplx yamabe2(series::cplx t, const series::Jet2& u) const;
};

struct ModelParams {
  int n = 2;
  int k = 2;
  int grid = 64;
  double a = 1.0;
  double c = 2.0;
  double eps = 0.1;
  std::uint64_t seed = 1;
};

using ModelBundle = std::variant<WarpedProfile, SurfaceGrid>;

std::vector<std::string> model_names();

ModelBundle model_catalog(const std::string& name, const ModelParams& params = {});

WarpedProfile equatorial_profile(int n, int k);
WarpedProfile flat_profile(int n, int k);
/// phi = cos t (1 + eps t^2), psi = sin t (1 + eps t^2) over a round Sigma.
WarpedProfile perturbed_profile(int n, int k, double eps);

SurfaceGrid clifford_torus(int grid);
/// Totally geodesic S^2 in S^{2+k}, on a polar grid.
SurfaceGrid equatorial_sphere(int k, int grid);
/// ((c + a cos u) cos v, (c + a cos u) sin v, a sin u) in R^3 inside R^{2+k}.
SurfaceGrid torus_of_revolution(double a, double c, int k, int grid);
/// Graph of random trigonometric polynomials over the square flat torus.
SurfaceGrid graph_perturbation(int k, double amplitude, std::uint64_t seed, int grid);

/// Stereographic projection from (0, ..., 0, 1) of a spherical grid.
SurfaceGrid stereographic(const SurfaceGrid& s);
/// Inverse stereographic image of a flat grid in the unit sphere.
SurfaceGrid inverse_stereographic(const SurfaceGrid& s);
/// omega with g_sphere = e^{2 omega} g_flat under inverse stereographic
/// projection, at each grid point of the flat grid.
std::vector<double> stereographic_log_factor(const SurfaceGrid& flat);

}  // namespace syvol::geometry
