// Volume density, renormalized volume / energy extraction and the surface
// energy formulas.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syvol/expansion.hpp"
#include "syvol/geometry.hpp"
#include "syvol/models.hpp"
#include "syvol/surface.hpp"

namespace syvol::renorm {

class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CriticalCodimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Radial defining function u(t) with two derivatives.
using RadialFn = std::function<series::Jet2(series::cplx)>;

/// Exact solution for models that have one (equatorial: sin t, flat: t);
/// otherwise u = t v from the series.
RadialFn defining_function(const geometry::WarpedProfile& p, const expansion::JetSeries* series = nullptr);

/// Volume density theta(t) = u^{-n-k} phi^n psi^{k-1} per unit area of Sigma
/// and unit fiber measure.
std::function<double(double)> theta_profile(const geometry::WarpedProfile& p, const RadialFn& u);

/// Coefficients theta_j of t^{n+1} theta = sum_j theta_j t^j.
std::vector<double> theta_coefficients(const geometry::WarpedProfile& p, const RadialFn& u, int count);

/// Fiber functions theta_0..theta_2 by series composition of
/// (1 + gamma_1 t + gamma_2 t^2)^{1/2} v^{-(k+2)}.
std::vector<fiber::FiberFunction> theta_n2_series(const geometry::FermiPointData& pt,
                                                  const expansion::JetSeries& s);
/// theta_2 from the closed-form combination of gamma and v terms.
fiber::FiberFunction theta2_closed(const geometry::FermiPointData& pt, const expansion::JetSeries& s);
/// Fiber average of theta_2 from the curvature contraction formula.
double pi0_theta2(const geometry::FermiPointData& pt);

struct TailOptions {
  double split = 0.1;
  /// Relative tolerance; the Gauss-Kronrod error estimate bottoms out near 1e-12.
  double tol = 1e-12;
};

/// Volume of {t > eps} for a warped-product model, scaled by vol(Sigma) and
/// the fiber sphere area.
double tail_volume(const geometry::WarpedProfile& p, const RadialFn& u, double eps, const TailOptions& opt = {});

struct Sample {
  double eps;
  double volume;
};

std::vector<Sample> volume_samples(const geometry::WarpedProfile& p, const RadialFn& u, double eps_min,
                                   double eps_max, int count, const TailOptions& opt = {});

/// Tail volumes of the equatorial model from the half-angle integral
/// 2^{-n} |S^{k-1}| |S^n| int_eps^1 r^{-n-1} (1 - r^2)^n dr.
std::vector<Sample> equatorial_r_samples(int n, int k, double eps_min, double eps_max, int count);

struct FitOptions {
  /// Extra correction powers eps^1..eps^m in the basis.
  int corrections = 2;
  double max_condition = 1e10;
  bool check_windows = true;
};

struct VolumeExpansion {
  int n = 0;
  int k = 0;
  std::vector<double> c;
  double energy = 0.0;
  double V = 0.0;
  double energy_error = 0.0;
  double V_error = 0.0;
  double fit_residual = 0.0;
  double condition_number = 0.0;
  std::pair<double, double> eps_window{0.0, 0.0};
  bool formal_only = false;
};

VolumeExpansion fit_expansion(const std::vector<Sample>& samples, int n, const FitOptions& opt = {});

struct ClosedForm {
  bool is_energy = true;
  double value = 0.0;
};

/// Energy (even n) or renormalized volume (odd n) of an equatorial S^n in S^{n+k}.
ClosedForm closed_form_equatorial(int n, int k);

/// Integrand of the codimension-k surface energy at a point.
double energy_integrand(const geometry::FermiPointData& pt, int k);
double energy_n2(const std::vector<geometry::FermiPointData>& pts, int k);
/// Same energy from integrating the fiber average of theta_2.
double energy_n2_theta(const std::vector<geometry::FermiPointData>& pts, int k);
double energy_codim1(const std::vector<geometry::FermiPointData>& pts);
/// Per-point integrand of the critical codimension k = 4.
std::vector<double> anomaly_k4(const std::vector<geometry::FermiPointData>& pts);

}  // namespace syvol::renorm
