#include "syvol/renorm.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace syvol::renorm {

using fiber::FiberFunction;
using series::cplx;
using series::Jet2;

namespace {
constexpr double kPi = std::numbers::pi;

double fiber_area(int k) { return k == 1 ? 2.0 : fiber::sphere_area(k); }

double integrate_gk(const std::function<double(double)>& f, double a, double b, double tol) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 10, tol, &err);
}
}  // namespace

RadialFn defining_function(const geometry::WarpedProfile& p, const expansion::JetSeries* s) {
  if (p.name == "equatorial") return [](cplx t) { return Jet2{std::sin(t), std::cos(t), -std::sin(t)}; };
  if (p.name == "flat") return [](cplx t) { return Jet2{t, 1.0, 0.0}; };
  if (s) {
    const expansion::JetSeries copy = *s;
    return [copy](cplx t) { return expansion::evaluate_radial(copy, t); };
  }
  expansion::SymmetricOptions opt;
  opt.allow_log = true;
  const expansion::JetSeries series = expansion::expand_symmetric(p, p.n, opt);
  return [series](cplx t) { return expansion::evaluate_radial(series, t); };
}

std::function<double(double)> theta_profile(const geometry::WarpedProfile& p, const RadialFn& u) {
  return [p, u](double t) {
    const double uu = u(t).value.real();
    const double phi = p.phi(t).value.real(), psi = p.psi(t).value.real();
    return std::pow(uu, -(p.n + p.k)) * std::pow(phi, p.n) * std::pow(psi, p.k - 1);
  };
}

std::vector<double> theta_coefficients(const geometry::WarpedProfile& p, const RadialFn& u, int count) {
  series::ContourOptions opt;
  opt.radius = std::min(0.5, 0.5 * p.analytic_radius);
  return series::taylor_coefficients(
      [&](cplx t) {
        const cplx v = u(t).value / t;
        const cplx phi = p.phi(t).value, psi = p.psi(t).value / t;
        return std::pow(v, -(p.n + p.k)) * std::pow(phi, p.n) * std::pow(psi, p.k - 1);
      },
      count, opt);
}

std::vector<FiberFunction> theta_n2_series(const geometry::FermiPointData& pt, const expansion::JetSeries& s) {
  const int k = pt.jet.k;
  const FiberFunction g2 = 0.5 * (pt.gamma2_combo + fiber::multiply(pt.gamma1, pt.gamma1));
  const std::vector<FiberFunction> D{FiberFunction::constant(k, 1.0), pt.gamma1, g2};
  return series::nodewise({D, s.v}, 3, 2, [k](const std::vector<std::vector<double>>& a) {
    return series::mul(series::pow(a[0], 0.5, 2), series::pow(a[1], -(k + 2.0), 2), 2);
  });
}

FiberFunction theta2_closed(const geometry::FermiPointData& pt, const expansion::JetSeries& s) {
  const double k = pt.jet.k;
  const FiberFunction& g1 = pt.gamma1;
  const FiberFunction& v1 = s.v.at(1);
  const FiberFunction& v2 = s.v.at(2);
  const FiberFunction g1sq = fiber::multiply(g1, g1);
  const FiberFunction g2 = 0.5 * (pt.gamma2_combo + g1sq);
  return 0.5 * g2 - 0.125 * g1sq - (0.5 * (k + 2)) * fiber::multiply(v1, g1) - (k + 2) * v2 +
         (0.5 * (k + 2) * (k + 3)) * fiber::multiply(v1, v1);
}

double pi0_theta2(const geometry::FermiPointData& pt) {
  const auto& jet = pt.jet;
  const int k = jet.k, n = jet.n;
  if (k == 4) throw CriticalCodimension("theta_2 is not determined for k = 4");
  const Eigen::MatrixXd ric = jet.ricci();
  double ric_nn = 0.0, r_nnnn = 0.0;
  for (int a = 0; a < k; ++a) {
    ric_nn += ric(n + a, n + a);
    if (jet.R.dim())
      for (int b = 0; b < k; ++b) r_nnnn += jet.R(n + a, n + b, n + b, n + a);
  }
  const double num = (k - 10.0) * pt.H2 + 12.0 * (ric_nn + pt.L2 - (2.0 / 3.0) * r_nnnn) -
                     4.0 * (k + 2.0) * pt.R_g_point / (k + 1.0);
  return num / (8.0 * (4.0 - k));
}

double tail_volume(const geometry::WarpedProfile& p, const RadialFn& u, double eps, const TailOptions& opt) {
  const auto theta = theta_profile(p, u);
  const double split = std::min(opt.split, p.t_max);
  const double scale = p.sigma_volume * fiber_area(p.k);
  const double outer = split < p.t_max ? integrate_gk(theta, split, p.t_max, opt.tol) : 0.0;
  const double inner = integrate_gk([&](double x) { const double t = std::exp(x); return theta(t) * t; },
                                    std::log(eps), std::log(split), opt.tol);
  return scale * (outer + inner);
}

std::vector<Sample> volume_samples(const geometry::WarpedProfile& p, const RadialFn& u, double eps_min,
                                   double eps_max, int count, const TailOptions& opt) {
  if (!(eps_min > 0 && eps_min < eps_max)) throw std::invalid_argument("need 0 < eps_min < eps_max");
  if (count < 2) throw std::invalid_argument("need at least two samples");
  const auto theta = theta_profile(p, u);
  const double split = std::min(opt.split, p.t_max);
  if (!(eps_max < split)) throw std::invalid_argument("eps window must lie below the split point");
  const double scale = p.sigma_volume * fiber_area(p.k);
  auto log_integral = [&](double a, double b) {
    return integrate_gk([&](double x) { const double t = std::exp(x); return theta(t) * t; }, std::log(a),
                        std::log(b), opt.tol);
  };
  std::vector<Sample> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i].eps = eps_min * std::pow(eps_max / eps_min, double(i) / (count - 1));
  // Accumulate from the largest eps down so each segment is integrated once.
  double acc = (split < p.t_max ? integrate_gk(theta, split, p.t_max, opt.tol) : 0.0) + log_integral(eps_max, split);
  out.back().volume = scale * acc;
  for (int i = count - 2; i >= 0; --i) {
    acc += log_integral(out[i].eps, out[i + 1].eps);
    out[i].volume = scale * acc;
  }
  return out;
}

std::vector<Sample> equatorial_r_samples(int n, int k, double eps_min, double eps_max, int count) {
  const double scale = std::pow(2.0, -n) * fiber_area(k) * fiber::sphere_area(n + 1);
  std::vector<Sample> out;
  for (int s = 0; s < count; ++s) {
    const double eps = eps_min * std::pow(eps_max / eps_min, double(s) / (count - 1));
    double acc = 0.0, binom = 1.0;
    for (int i = 0; i <= n; ++i) {
      if (i > 0) binom *= double(n - i + 1) / i;
      const double sign = i % 2 ? -1.0 : 1.0;
      const int e = 2 * i - n;
      acc += sign * binom * (e == 0 ? -std::log(eps) : (1.0 - std::pow(eps, e)) / e);
    }
    out.push_back({eps, scale * acc});
  }
  return out;
}

namespace {

struct RawFit {
  Eigen::VectorXd coef;
  double residual = 0.0;
  double condition = 0.0;
};

RawFit raw_fit(const std::vector<Sample>& s, int n, int corrections) {
  const int cols = n + 2 + corrections;
  const int rows = static_cast<int>(s.size());
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd b(rows);
  for (int r = 0; r < rows; ++r) {
    const double e = s[r].eps, w = std::pow(e, n);
    for (int j = 0; j < n; ++j) A(r, j) = w * std::pow(e, j - n);
    A(r, n) = w * std::log(1.0 / e);
    A(r, n + 1) = w;
    for (int m = 1; m <= corrections; ++m) A(r, n + 1 + m) = w * std::pow(e, m);
    b(r) = w * s[r].volume;
  }
  const Eigen::VectorXd norms = A.colwise().norm().transpose();
  for (int j = 0; j < cols; ++j) A.col(j) /= norms(j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  RawFit f;
  f.condition = sv(0) / sv(sv.size() - 1);
  const Eigen::VectorXd y = svd.solve(b);
  f.residual = (A * y - b).norm() / std::sqrt(double(rows));
  f.coef = y.cwiseQuotient(norms);
  return f;
}

}  // namespace

VolumeExpansion fit_expansion(const std::vector<Sample>& samples, int n, const FitOptions& opt) {
  const int cols = n + 2 + opt.corrections;
  if (static_cast<int>(samples.size()) < std::max(3 * (n + 2), cols + 2))
    throw std::invalid_argument("too few samples for the volume fit");
  RawFit f = raw_fit(samples, n, opt.corrections);
  if (!(f.condition <= opt.max_condition))
    throw IllConditioned("volume fit condition number " + std::to_string(f.condition));
  VolumeExpansion out;
  out.n = n;
  for (int j = 0; j < n; ++j) out.c.push_back(f.coef(j));
  out.energy = f.coef(n);
  out.V = f.coef(n + 1);
  out.fit_residual = f.residual;
  out.condition_number = f.condition;
  double lo = samples.front().eps, hi = lo;
  for (const auto& s : samples) {
    lo = std::min(lo, s.eps);
    hi = std::max(hi, s.eps);
  }
  out.eps_window = {lo, hi};
  if (opt.check_windows) {
    const std::size_t m = samples.size(), cut = m / 3;
    const std::vector<Sample> low(samples.begin(), samples.end() - static_cast<std::ptrdiff_t>(cut));
    const std::vector<Sample> high(samples.begin() + static_cast<std::ptrdiff_t>(cut), samples.end());
    for (const auto* sub : {&low, &high}) {
      if (static_cast<int>(sub->size()) < cols + 2) continue;
      const RawFit g = raw_fit(*sub, n, opt.corrections);
      out.energy_error = std::max(out.energy_error, std::abs(g.coef(n) - out.energy));
      out.V_error = std::max(out.V_error, std::abs(g.coef(n + 1) - out.V));
    }
  }
  return out;
}

ClosedForm closed_form_equatorial(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("closed form needs n, k >= 1");
  ClosedForm cf;
  if (n % 2 == 0) {
    cf.is_energy = true;
    const double sign = (n / 2) % 2 ? -1.0 : 1.0;
    cf.value = sign * 4.0 * std::pow(kPi, 0.5 * (n + k)) / (std::tgamma(0.5 * n + 1) * std::tgamma(0.5 * k));
  } else {
    cf.is_energy = false;
    const double sign = ((n + 1) / 2) % 2 ? -1.0 : 1.0;
    cf.value = sign * 2.0 * std::pow(kPi, 1.0 + 0.5 * (n + k)) / (std::tgamma(0.5 * (n + 2)) * std::tgamma(0.5 * k));
  }
  return cf;
}

double energy_integrand(const geometry::FermiPointData& pt, int k) {
  return k * (pt.H2 + 4.0 * pt.trP_tan) + 4.0 * pt.Lo2 - 8.0 * pt.R_h;
}

double energy_n2(const std::vector<geometry::FermiPointData>& pts, int k) {
  if (k == 4) throw CriticalCodimension("k = 4 has no finite energy; use anomaly_k4");
  std::vector<double> f;
  f.reserve(pts.size());
  for (const auto& p : pts) f.push_back(energy_integrand(p, k));
  return fiber_area(k) / (8.0 * (4.0 - k)) * geometry::integrate(pts, f);
}

double energy_n2_theta(const std::vector<geometry::FermiPointData>& pts, int k) {
  std::vector<double> f;
  f.reserve(pts.size());
  for (const auto& p : pts) f.push_back(pi0_theta2(p));
  return fiber_area(k) * geometry::integrate(pts, f);
}

double energy_codim1(const std::vector<geometry::FermiPointData>& pts) {
  std::vector<double> f;
  f.reserve(pts.size());
  for (const auto& p : pts) f.push_back(p.Lo2 - p.R_h);
  return 0.5 * geometry::integrate(pts, f);
}

std::vector<double> anomaly_k4(const std::vector<geometry::FermiPointData>& pts) {
  std::vector<double> f;
  f.reserve(pts.size());
  for (const auto& p : pts) f.push_back(energy_integrand(p, 4));
  return f;
}

}  // namespace syvol::renorm
