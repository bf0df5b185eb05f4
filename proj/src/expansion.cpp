#include "syvol/expansion.hpp"

#include <cmath>
#include <limits>
#include <variant>

#include "syvol/indicial.hpp"

namespace syvol::expansion {

using fiber::FiberFunction;
using series::cplx;
using series::Jet2;

ObstructionHit::ObstructionHit(int nu_, double value_)
    : std::runtime_error("log obstruction at order " + std::to_string(nu_) +
                         " with fiber average " + std::to_string(value_)),
      nu(nu_),
      value(value_) {}

namespace {

series::ContourOptions fit_contour(const geometry::WarpedProfile& p, series::ContourOptions opt) {
  opt.radius = std::min(opt.radius, 0.5 * p.analytic_radius);
  return opt;
}

Jet2 log_jet(int m, int power, cplx t) {
  const cplx L = std::log(t);
  const cplx a = std::pow(t, m), b = std::pow(t, m - 1), c = std::pow(t, m - 2);
  const double dm = m;
  if (power == 1) return {a * L, dm * b * L + b, dm * (dm - 1) * c * L + (2 * dm - 1) * c};
  return {a * L * L, dm * b * L * L + 2.0 * b * L, c * (dm * (dm - 1) * L * L + (4 * dm - 2) * L + 2.0)};
}

}  // namespace

std::vector<double> residual_coefficients(const geometry::WarpedProfile& p, const std::vector<double>& V,
                                          int count, const series::ContourOptions& opt) {
  std::vector<double> u(V.size() + 1, 0.0);
  std::copy(V.begin(), V.end(), u.begin() + 1);
  return series::taylor_coefficients([&](cplx t) { return 0.5 * p.yamabe2(t, series::eval_poly(u, t)); }, count,
                                     fit_contour(p, opt));
}

JetSeries expand_symmetric(const geometry::WarpedProfile& p, int N, const SymmetricOptions& opt) {
  if (N < 0) throw std::invalid_argument("order must be non-negative");
  if (N > symmetric_order_cap(p.n))
    throw std::invalid_argument("order cap is " + std::to_string(symmetric_order_cap(p.n)));
  JetSeries s;
  s.n = p.n;
  s.k = p.k;
  s.order = N;
  std::vector<double> V{1.0};
  s.v.push_back(FiberFunction::constant(p.k, 1.0));
  for (int j = 1; j <= N; ++j) {
    const double F = residual_coefficients(p, V, j + 1, opt.contour)[static_cast<std::size_t>(j)];
    const long long c = indicial::indicial_scalar_exact(p.n, p.k, j);
    double vj = 0.0;
    if (c != 0) {
      vj = -F / static_cast<double>(c);
    } else if (std::abs(F) <= opt.obstruction_tol) {
      s.flags.push_back("order " + std::to_string(j) + ": resonant, fiber average of v set to 0");
    } else if (opt.allow_log) {
      const int power = 2 * j == p.n ? 2 : 1;
      const double A = power == 2 ? -0.5 * F : -F / (2.0 * j - p.n);
      s.log_terms.push_back({j, power, FiberFunction::constant(p.k, A)});
      s.flags.push_back("order " + std::to_string(j) + ": log term; v_" + std::to_string(j) +
                        " normalized to 0 (not conformally invariant)");
      V.push_back(0.0);
      s.v.push_back(FiberFunction::constant(p.k, 0.0));
      s.order = j;
      s.residual_order = j + 1;
      return s;
    } else {
      throw ObstructionHit(j, F);
    }
    V.push_back(vj);
    s.v.push_back(FiberFunction::constant(p.k, vj));
  }
  s.residual_order = N + 1;
  return s;
}

FiberFunction n2_source(const geometry::FermiPointData& pt) {
  const int k = pt.jet.k;
  const FiberFunction& g1 = pt.gamma1;
  FiberFunction G = ((9.0 - k) / 32.0) * fiber::multiply(g1, g1) +
                    ((6.0 - k) / 64.0) * fiber::gradient_inner(g1, g1) + pt.gamma2_combo;
  return G + pt.R_g_point / (k + 1.0);
}

JetSeries expand_n2(const geometry::FermiPointData& pt) {
  const int k = pt.jet.k;
  if (pt.jet.n != 2) throw std::invalid_argument("expand_n2 needs a surface jet");
  if (k < 2) throw std::invalid_argument("expand_n2 needs codimension >= 2");
  JetSeries s;
  s.n = 2;
  s.k = k;
  s.order = 2;
  s.residual_order = 3;
  s.v.push_back(FiberFunction::constant(k, 1.0));
  s.v.push_back(0.125 * pt.gamma1);
  const FiberFunction rhs = -0.5 * n2_source(pt);
  if (!indicial::resonant_degree(2, k, 2)) {
    s.v.push_back(std::get<FiberFunction>(indicial::indicial_solve(2, k, 2.0, rhs)));
    return s;
  }
  // k = 4: F_2 = -rhs and A = -pi_0(F_2) / (2 nu - n) with nu = n = 2.
  const FiberFunction avg = rhs.projection(0);
  s.log_terms.push_back({2, 1, FiberFunction::constant(k, avg.average() / 2.0)});
  s.v.push_back(std::get<FiberFunction>(indicial::indicial_solve(2, k, 2.0, rhs - avg)));
  s.flags.push_back("order 2: log term; fiber average of v_2 normalized to 0 (not conformally invariant)");
  return s;
}

Jet2 evaluate_radial(const JetSeries& s, cplx t) {
  std::vector<double> u(s.v.size() + 1, 0.0);
  for (std::size_t j = 0; j < s.v.size(); ++j) u[j + 1] = s.v[j].average();
  Jet2 r = series::eval_poly(u, t);
  for (const auto& lt : s.log_terms) {
    const Jet2 w = log_jet(lt.order + 1, lt.log_power, t);
    const double A = lt.coeff.average();
    r.value += A * w.value;
    r.d1 += A * w.d1;
    r.d2 += A * w.d2;
  }
  return r;
}

ResidualCheck residual_slope(const geometry::WarpedProfile& p, const JetSeries& s, double t_lo, double t_hi,
                             int samples) {
  ResidualCheck rc;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = t_lo * std::pow(t_hi / t_lo, double(i) / (samples - 1));
    const double r = std::abs(p.yamabe2(t, evaluate_radial(s, t)));
    rc.t.push_back(t);
    rc.residual.push_back(r);
    worst = std::max(worst, r);
    if (r > 0) {
      const double x = std::log(t), y = std::log(r);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++used;
    }
  }
  if (worst < 1e-13) {
    rc.exact = true;
    rc.ok = true;
    rc.slope = std::numeric_limits<double>::infinity();
    return rc;
  }
  rc.slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
  const double margin = s.log_terms.empty() ? 0.1 : 0.5;
  rc.ok = rc.slope >= s.residual_order - margin;
  return rc;
}

}  // namespace syvol::expansion
