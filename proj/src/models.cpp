#include "syvol/models.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace syvol::geometry {

using series::cplx;
using series::Jet2;

namespace {
constexpr double kPi = std::numbers::pi;

Jet2 jet_cos(cplx t) { return {std::cos(t), -std::sin(t), -std::cos(t)}; }
Jet2 jet_sin(cplx t) { return {std::sin(t), std::cos(t), -std::sin(t)}; }

// f * (1 + eps t^2)
Jet2 bump(const Jet2& f, double eps, cplx t) {
  const cplx g = 1.0 + eps * t * t, g1 = 2.0 * eps * t, g2 = 2.0 * eps;
  return {f.value * g, f.d1 * g + f.value * g1, f.d2 * g + 2.0 * f.d1 * g1 + f.value * g2};
}

SurfaceGrid blank_grid(Ambient amb, int k, int nu, int nv) {
  SurfaceGrid s;
  s.ambient = amb;
  s.codimension = k;
  s.nu = nu;
  s.nv = nv;
  s.points = Eigen::MatrixXd::Zero(nu * nv, s.embedding_dim());
  return s;
}
}  // namespace

cplx WarpedProfile::scalar_curvature(cplx t) const {
  const Jet2 f = phi(t), g = psi(t);
  const double d2 = k - 1;
  const double rs = d2 * (d2 - 1);
  const cplx a = f.d1 / f.value, b = g.d1 / g.value;
  cplx r = R_sigma / (f.value * f.value) - 2.0 * n * f.d2 / f.value - double(n) * (n - 1) * a * a;
  if (k > 1) r += rs / (g.value * g.value) - 2.0 * d2 * g.d2 / g.value - rs * b * b - 2.0 * n * d2 * a * b;
  return r;
}

cplx WarpedProfile::radial_laplacian(cplx t, const Jet2& u) const {
  const Jet2 f = phi(t), g = psi(t);
  cplx mean = double(n) * f.d1 / f.value;
  if (k > 1) mean += double(k - 1) * g.d1 / g.value;
  return u.d2 + mean * u.d1;
}

cplx WarpedProfile::yamabe2(cplx t, const Jet2& u) const {
  const double N = n + k;
  return (n + 2.0 - k) - N * u.d1 * u.d1 + 2.0 * u.value * radial_laplacian(t, u) +
         scalar_curvature(t) * u.value * u.value / (N - 1.0);
}

WarpedProfile equatorial_profile(int n, int k) {
  WarpedProfile p;
  p.name = "equatorial";
  p.n = n;
  p.k = k;
  p.R_sigma = double(n) * (n - 1);
  p.sigma_volume = fiber::sphere_area(n + 1);
  p.phi = jet_cos;
  p.psi = jet_sin;
  p.analytic_radius = 0.5 * kPi;
  p.t_max = 0.5 * kPi;
  return p;
}

WarpedProfile flat_profile(int n, int k) {
  WarpedProfile p;
  p.name = "flat";
  p.n = n;
  p.k = k;
  p.phi = [](cplx) { return Jet2{1.0, 0.0, 0.0}; };
  p.psi = [](cplx t) { return Jet2{t, 1.0, 0.0}; };
  p.analytic_radius = 1e6;
  p.t_max = 1.0;
  return p;
}

WarpedProfile perturbed_profile(int n, int k, double eps) {
  WarpedProfile p = equatorial_profile(n, k);
  p.name = "perturbed";
  p.phi = [eps](cplx t) { return bump(jet_cos(t), eps, t); };
  p.psi = [eps](cplx t) { return bump(jet_sin(t), eps, t); };
  p.analytic_radius = std::min(0.5 * kPi, eps > 0 ? 1.0 / std::sqrt(eps) : 0.5 * kPi);
  p.t_max = 1.0;
  return p;
}

SurfaceGrid clifford_torus(int grid) {
  SurfaceGrid s = blank_grid(Ambient::Sphere, 1, grid, grid);
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double u = s.u_param(i), v = s.v_param(j);
      s.points.row(i * grid + j) << r * std::cos(u), r * std::sin(u), r * std::cos(v), r * std::sin(v);
    }
  return s;
}

SurfaceGrid equatorial_sphere(int k, int grid) {
  const int nv = grid + grid % 2;
  SurfaceGrid s = blank_grid(Ambient::Sphere, k, grid, nv);
  s.u_kind = AxisKind::Polar;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < nv; ++j) {
      const double th = s.u_param(i), ph = s.v_param(j);
      auto row = s.points.row(i * nv + j);
      row(0) = std::sin(th) * std::cos(ph);
      row(1) = std::sin(th) * std::sin(ph);
      row(2) = std::cos(th);
    }
  return s;
}

SurfaceGrid torus_of_revolution(double a, double c, int k, int grid) {
  if (!(c > a && a > 0)) throw std::invalid_argument("torus of revolution needs c > a > 0");
  SurfaceGrid s = blank_grid(Ambient::Flat, k, grid, grid);
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double u = s.u_param(i), v = s.v_param(j);
      auto row = s.points.row(i * grid + j);
      row(0) = (c + a * std::cos(u)) * std::cos(v);
      row(1) = (c + a * std::cos(u)) * std::sin(v);
      row(2) = a * std::sin(u);
    }
  return s;
}

SurfaceGrid graph_perturbation(int k, double amplitude, std::uint64_t seed, int grid) {
  SurfaceGrid s = blank_grid(Ambient::Flat, k, grid, grid);
  const int D = s.embedding_dim();
  s.shift_u = Eigen::VectorXd::Zero(D);
  s.shift_v = Eigen::VectorXd::Zero(D);
  s.shift_u(0) = 2.0 * kPi;
  s.shift_v(1) = 2.0 * kPi;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  struct Mode {
    int p, q;
    double cs, sn;
  };
  std::vector<std::vector<Mode>> modes(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a)
    for (int p = 0; p <= 2; ++p)
      for (int q = -2; q <= 2; ++q) {
        if (p == 0 && q <= 0) continue;
        modes[a].push_back({p, q, amplitude * normal(rng) / (p * p + q * q), amplitude * normal(rng) / (p * p + q * q)});
      }
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const double u = s.u_param(i), v = s.v_param(j);
      auto row = s.points.row(i * grid + j);
      row(0) = u;
      row(1) = v;
      for (int a = 0; a < k; ++a) {
        double f = 0.0;
        for (const Mode& m : modes[a]) f += m.cs * std::cos(m.p * u + m.q * v) + m.sn * std::sin(m.p * u + m.q * v);
        row(2 + a) = f;
      }
    }
  return s;
}

SurfaceGrid stereographic(const SurfaceGrid& s) {
  if (s.ambient != Ambient::Sphere) throw std::invalid_argument("stereographic projection needs a spherical grid");
  SurfaceGrid out = s;
  out.ambient = Ambient::Flat;
  const int D = s.embedding_dim();
  out.points.resize(s.points.rows(), D - 1);
  for (Eigen::Index r = 0; r < s.points.rows(); ++r) {
    const double den = 1.0 - s.points(r, D - 1);
    if (!(den > 1e-12)) throw DegenerateMetric("surface passes through the projection pole");
    out.points.row(r) = s.points.row(r).head(D - 1) / den;
  }
  return out;
}

SurfaceGrid inverse_stereographic(const SurfaceGrid& s) {
  if (s.ambient != Ambient::Flat) throw std::invalid_argument("inverse stereographic projection needs a flat grid");
  if (s.shift_u.size() || s.shift_v.size()) throw std::invalid_argument("lattice-periodic grids cannot be projected");
  SurfaceGrid out = s;
  out.ambient = Ambient::Sphere;
  const int D = s.embedding_dim();
  out.points.resize(s.points.rows(), D + 1);
  for (Eigen::Index r = 0; r < s.points.rows(); ++r) {
    const double x2 = s.points.row(r).squaredNorm();
    out.points.row(r).head(D) = 2.0 * s.points.row(r) / (1.0 + x2);
    out.points(r, D) = (x2 - 1.0) / (1.0 + x2);
  }
  return out;
}

std::vector<double> stereographic_log_factor(const SurfaceGrid& flat) {
  std::vector<double> w(static_cast<std::size_t>(flat.points.rows()));
  for (Eigen::Index r = 0; r < flat.points.rows(); ++r)
    w[r] = std::log(2.0 / (1.0 + flat.points.row(r).squaredNorm()));
  return w;
}

std::vector<std::string> model_names() {
  return {"equatorial", "flat", "perturbed", "clifford_torus", "clifford_stereographic", "equatorial_sphere",
          "torus_of_revolution", "torus_of_revolution_sphere", "graph_perturbation"};
}

ModelBundle model_catalog(const std::string& name, const ModelParams& p) {
  if (name == "equatorial") return equatorial_profile(p.n, p.k);
  if (name == "flat") return flat_profile(p.n, p.k);
  if (name == "perturbed") return perturbed_profile(p.n, p.k, p.eps);
  if (name == "clifford_torus") return clifford_torus(p.grid);
  if (name == "clifford_stereographic") return stereographic(clifford_torus(p.grid));
  if (name == "equatorial_sphere") return equatorial_sphere(p.k, p.grid);
  if (name == "torus_of_revolution") return torus_of_revolution(p.a, p.c, p.k, p.grid);
  if (name == "torus_of_revolution_sphere") return inverse_stereographic(torus_of_revolution(p.a, p.c, p.k, p.grid));
  if (name == "graph_perturbation") return graph_perturbation(p.k, p.eps, p.seed, p.grid);
  throw UnknownModel("unknown model '" + name + "'");
}

}  // namespace syvol::geometry
