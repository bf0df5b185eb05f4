#include "syvol/surface.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "syvol/parallel.hpp"

namespace syvol::geometry {

std::string to_string(Ambient a) { return a == Ambient::Flat ? "flat" : "sphere"; }

std::string to_string(AxisKind a) {
  switch (a) {
    case AxisKind::Periodic: return "periodic";
    case AxisKind::Polar: return "polar";
    case AxisKind::Open: return "open";
  }
  return "unknown";
}

namespace {

constexpr double kPi = std::numbers::pi;

double axis_param(AxisKind kind, int i, int n, double lo, double hi) {
  switch (kind) {
    case AxisKind::Periodic: return 2.0 * kPi * i / n;
    case AxisKind::Polar: return kPi * (i + 0.5) / n;
    case AxisKind::Open: return lo + (hi - lo) * i / (n - 1);
  }
  return 0.0;
}

// Fourier differentiation matrix of order r on n equispaced points of period 2 pi.
Eigen::MatrixXd fourier_matrix(int n, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Eigen::MatrixXd> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, r});
    if (it != cache.end()) return it->second;
  }
  const double h = 2.0 * kPi / n;
  Eigen::MatrixXd d(n, n);
  const int mmax = (n - 1) / 2;
  for (int p = 0; p < n; ++p) {
    // Row entries depend on i - j only.
    std::complex<double> acc = 0.0;
    const double x = p * h;
    for (int m = -mmax; m <= mmax; ++m) acc += std::pow(std::complex<double>(0.0, m), r) * std::polar(1.0, m * x);
    if (n % 2 == 0 && r % 2 == 0) acc += std::pow(0.5 * n, r) * (r % 4 == 0 ? 1.0 : -1.0) * std::cos(0.5 * n * x);
    const double v = acc.real() / n;
    for (int i = 0; i < n; ++i) d(i, (i - p + n) % n) = v;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, r), d);
  return d;
}

// Fornberg finite-difference weights for derivatives 0..m at z.
Eigen::MatrixXd fornberg(double z, const std::vector<double>& x, int m) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, m + 1);
  double c1 = 1.0, c4 = x[0] - z;
  c(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c(i, k) = c1 * (k * c(i - 1, k - 1) - c5 * c(i - 1, k)) / c2;
        c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k) c(j, k) = (c4 * c(j, k) - k * c(j, k - 1)) / c3;
      c(j, 0) = c4 * c(j, 0) / c3;
    }
    c1 = c2;
  }
  return c;
}

Eigen::MatrixXd open_matrix(int n, double h, int r) {
  if (n < 5) throw std::invalid_argument("open axes need at least 5 samples");
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int start = std::clamp(i - 2, 0, n - 5);
    std::vector<double> x(5);
    for (int s = 0; s < 5; ++s) x[s] = (start + s) * h;
    const Eigen::MatrixXd w = fornberg(i * h, x, r);
    for (int s = 0; s < 5; ++s) d(i, start + s) = w(s, r);
  }
  return d;
}

// A grid with both axes periodic or open; polar u-axes are unfolded over
// the pole into a doubled periodic axis.
struct WorkGrid {
  int nu, nv;  // working sizes
  int keep_u;  // rows of the original grid
  Eigen::MatrixXd du1, du2, dv1, dv2;
  std::vector<Eigen::MatrixXd> comp;  // per ambient component, nu x nv
  Eigen::VectorXd su, sv;             // lattice shifts divided by 2 pi
};

Eigen::MatrixXd axis_matrix(AxisKind kind, int n, double lo, double hi, int r) {
  if (kind == AxisKind::Open) return open_matrix(n, (hi - lo) / (n - 1), r);
  if (kind == AxisKind::Polar) {
    // Doubled axis: 2n points with spacing pi / n, period 2 pi.
    return fourier_matrix(2 * n, r);
  }
  return fourier_matrix(n, r);
}

WorkGrid make_work_grid(const SurfaceGrid& s) {
  WorkGrid w;
  const int D = s.embedding_dim();
  w.keep_u = s.nu;
  w.nv = s.nv;
  w.nu = s.u_kind == AxisKind::Polar ? 2 * s.nu : s.nu;
  w.su = s.shift_u.size() ? Eigen::VectorXd(s.shift_u / (2.0 * kPi)) : Eigen::VectorXd::Zero(D);
  w.sv = s.shift_v.size() ? Eigen::VectorXd(s.shift_v / (2.0 * kPi)) : Eigen::VectorXd::Zero(D);
  w.comp.assign(static_cast<std::size_t>(D), Eigen::MatrixXd(w.nu, w.nv));
  for (int i = 0; i < w.nu; ++i)
    for (int j = 0; j < w.nv; ++j) {
      int si = i, sj = j;
      if (i >= s.nu) {
        si = 2 * s.nu - 1 - i;
        sj = (j + s.nv / 2) % s.nv;
      }
      const double u = s.u_kind == AxisKind::Periodic ? s.u_param(i) : 0.0;
      const double v = s.v_kind == AxisKind::Periodic ? s.v_param(j) : 0.0;
      for (int c = 0; c < D; ++c)
        w.comp[c](i, j) = s.points(si * s.nv + sj, c) - u * w.su(c) - v * w.sv(c);
    }
  w.du1 = axis_matrix(s.u_kind, s.nu, s.u_lo, s.u_hi, 1);
  w.du2 = axis_matrix(s.u_kind, s.nu, s.u_lo, s.u_hi, 2);
  w.dv1 = axis_matrix(s.v_kind, s.nv, s.v_lo, s.v_hi, 1);
  w.dv2 = axis_matrix(s.v_kind, s.nv, s.v_lo, s.v_hi, 2);
  return w;
}

struct FieldDerivs {
  Eigen::MatrixXd f, fu, fv, fuu, fuv, fvv;
};

FieldDerivs derivs(const WorkGrid& w, const Eigen::MatrixXd& f) {
  FieldDerivs d;
  d.f = f;
  d.fu = w.du1 * f;
  d.fuu = w.du2 * f;
  d.fv = f * w.dv1.transpose();
  d.fvv = f * w.dv2.transpose();
  d.fuv = d.fu * w.dv1.transpose();
  return d;
}

struct WorkDerivatives {
  std::vector<FieldDerivs> comp;
};

WorkDerivatives work_derivatives(const WorkGrid& w) {
  WorkDerivatives out;
  for (std::size_t c = 0; c < w.comp.size(); ++c) {
    FieldDerivs d = derivs(w, w.comp[c]);
    d.fu.array() += w.su(static_cast<Eigen::Index>(c));
    d.fv.array() += w.sv(static_cast<Eigen::Index>(c));
    out.comp.push_back(std::move(d));
  }
  return out;
}

std::vector<double> fejer_weights(int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double th = kPi * (j + 0.5) / n;
    double acc = 1.0;
    for (int m = 1; m <= n / 2; ++m) acc -= 2.0 * std::cos(2.0 * m * th) / (4.0 * m * m - 1.0);
    w[j] = 2.0 / n * acc;
  }
  return w;
}

std::vector<double> axis_weights(AxisKind kind, int n, double lo, double hi) {
  std::vector<double> w(static_cast<std::size_t>(n));
  switch (kind) {
    case AxisKind::Periodic:
      std::fill(w.begin(), w.end(), 2.0 * kPi / n);
      break;
    case AxisKind::Polar: {
      w = fejer_weights(n);
      for (int j = 0; j < n; ++j) w[j] /= std::sin(kPi * (j + 0.5) / n);
      break;
    }
    case AxisKind::Open: {
      const double h = (hi - lo) / (n - 1);
      std::fill(w.begin(), w.end(), h);
      w.front() = w.back() = 0.5 * h;
      break;
    }
  }
  return w;
}

}  // namespace

double SurfaceGrid::u_param(int i) const { return axis_param(u_kind, i, nu, u_lo, u_hi); }
double SurfaceGrid::v_param(int j) const { return axis_param(v_kind, j, nv, v_lo, v_hi); }

void SurfaceGrid::validate() const {
  if (codimension < 1) throw std::invalid_argument("codimension must be >= 1");
  if (nu < 4 || nv < 4) throw std::invalid_argument("grid too small");
  if (points.rows() != nu * nv || points.cols() != embedding_dim())
    throw std::invalid_argument("point array has wrong shape");
  if (v_kind == AxisKind::Polar) throw std::invalid_argument("only the u axis may be polar");
  if (u_kind == AxisKind::Polar && (v_kind != AxisKind::Periodic || nv % 2 != 0))
    throw std::invalid_argument("a polar u axis needs an even periodic v axis");
  if ((u_kind == AxisKind::Open && !(u_hi > u_lo)) || (v_kind == AxisKind::Open && !(v_hi > v_lo)))
    throw std::invalid_argument("open axis range must be increasing");
  if (shift_u.size() && shift_u.size() != embedding_dim()) throw std::invalid_argument("shift_u size");
  if (shift_v.size() && shift_v.size() != embedding_dim()) throw std::invalid_argument("shift_v size");
}

SurfaceDerivatives differentiate(const SurfaceGrid& s) {
  s.validate();
  const WorkGrid w = make_work_grid(s);
  const WorkDerivatives wd = work_derivatives(w);
  const int D = s.embedding_dim();
  SurfaceDerivatives out;
  for (auto* m : {&out.Xu, &out.Xv, &out.Xuu, &out.Xuv, &out.Xvv}) m->resize(s.nu * s.nv, D);
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nv; ++j) {
      const int row = i * s.nv + j;
      for (int c = 0; c < D; ++c) {
        const FieldDerivs& f = wd.comp[c];
        out.Xu(row, c) = f.fu(i, j);
        out.Xv(row, c) = f.fv(i, j);
        out.Xuu(row, c) = f.fuu(i, j);
        out.Xuv(row, c) = f.fuv(i, j);
        out.Xvv(row, c) = f.fvv(i, j);
      }
    }
  return out;
}

Eigen::VectorXd parameter_weights(const SurfaceGrid& s) {
  const auto wu = axis_weights(s.u_kind, s.nu, s.u_lo, s.u_hi);
  const auto wv = axis_weights(s.v_kind, s.nv, s.v_lo, s.v_hi);
  Eigen::VectorXd w(s.nu * s.nv);
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nv; ++j) w(i * s.nv + j) = wu[i] * wv[j];
  return w;
}

Eigen::VectorXd intrinsic_scalar_curvature(const SurfaceGrid& s) {
  s.validate();
  const WorkGrid w = make_work_grid(s);
  const WorkDerivatives wd = work_derivatives(w);
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(w.nu, w.nv), F = E, G = E;
  for (const auto& c : wd.comp) {
    E.array() += c.fu.array().square();
    F.array() += c.fu.array() * c.fv.array();
    G.array() += c.fv.array().square();
  }
  const FieldDerivs e = derivs(w, E), f = derivs(w, F), g = derivs(w, G);
  Eigen::VectorXd out(s.nu * s.nv);
  for (int i = 0; i < s.nu; ++i)
    for (int j = 0; j < s.nv; ++j) {
      Eigen::Matrix3d a, b;
      a << -0.5 * e.fvv(i, j) + f.fuv(i, j) - 0.5 * g.fuu(i, j), 0.5 * e.fu(i, j), f.fu(i, j) - 0.5 * e.fv(i, j),
          f.fv(i, j) - 0.5 * g.fu(i, j), E(i, j), F(i, j), 0.5 * g.fv(i, j), F(i, j), G(i, j);
      b << 0.0, 0.5 * e.fv(i, j), 0.5 * g.fu(i, j), 0.5 * e.fv(i, j), E(i, j), F(i, j), 0.5 * g.fu(i, j), F(i, j),
          G(i, j);
      const double det = E(i, j) * G(i, j) - F(i, j) * F(i, j);
      out(i * s.nv + j) = 2.0 * (a.determinant() - b.determinant()) / (det * det);
    }
  return out;
}

std::vector<FermiPointData> surface_invariants(const SurfaceGrid& s, const SurfaceOptions& opt) {
  const SurfaceDerivatives d = differentiate(s);
  const Eigen::VectorXd pw = parameter_weights(s);
  const Eigen::VectorXd rh = intrinsic_scalar_curvature(s);
  const int k = s.codimension;
  const int D = s.embedding_dim();
  const fiber::BasisKind kind = opt.use_override ? opt.kind_override : jet_basis(k);
  const int npts = s.nu * s.nv;
  std::vector<FermiPointData> out(static_cast<std::size_t>(npts));
  std::vector<std::string> errors(static_cast<std::size_t>(npts));

  parallel_for(static_cast<std::size_t>(npts), [&](std::size_t idx) {
    const int row = static_cast<int>(idx);
    const Eigen::VectorXd xu = d.Xu.row(row).transpose(), xv = d.Xv.row(row).transpose();
    MetricJet jet;
    jet.n = 2;
    jet.k = k;
    jet.kind = kind;
    jet.h0.resize(2, 2);
    jet.h0 << xu.dot(xu), xu.dot(xv), xu.dot(xv), xv.dot(xv);
    const double det = jet.h0.determinant();
    if (!(det > 1e-12)) throw DegenerateMetric("det h0 = " + std::to_string(det) + " at grid point " +
                                               std::to_string(row));

    const int m = s.ambient == Ambient::Sphere ? 3 : 2;
    Eigen::MatrixXd span(D, m);
    span.col(0) = xu;
    span.col(1) = xv;
    if (m == 3) span.col(2) = s.points.row(row).transpose();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(span);
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(D, D);
    Eigen::MatrixXd normals = Q.rightCols(k);

    auto second_form = [&](const Eigen::VectorXd& nrm) {
      Eigen::Matrix2d l;
      l(0, 0) = d.Xuu.row(row).dot(nrm);
      l(0, 1) = l(1, 0) = d.Xuv.row(row).dot(nrm);
      l(1, 1) = d.Xvv.row(row).dot(nrm);
      return l;
    };
    if (opt.align_normals && k > 1) {
      Eigen::MatrixXd M(k, 3);
      for (int a = 0; a < k; ++a) {
        const Eigen::Matrix2d l = second_form(normals.col(a));
        M.row(a) << l(0, 0), std::sqrt(2.0) * l(0, 1), l(1, 1);
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU);
      normals = normals * svd.matrixU();
    }
    for (int a = 0; a < k; ++a) jet.L.push_back(second_form(normals.col(a)));
    if (s.ambient == Ambient::Sphere) jet.R = Curvature::constant_sectional(jet.metric(), 1.0);
    else jet.R = Curvature(2 + k);
    jet.Gamma.assign(2, Eigen::MatrixXd::Zero(k, k));
    if (kind == fiber::BasisKind::Zonal) {
      // Exact zeros keep the axisymmetry checks meaningful.
      for (int a = 1; a < k; ++a)
        if (jet.L[a].cwiseAbs().maxCoeff() < 1e-13 * std::max(1.0, jet.L[0].cwiseAbs().maxCoeff()))
          jet.L[a].setZero();
    }
    try {
      FermiPointData p = fermi_point(jet, pw(row) * std::sqrt(det));
      p.R_h_intrinsic = rh(row);
      out[idx] = std::move(p);
    } catch (const fiber::UnsupportedBasis& e) {
      errors[idx] = e.what();
    }
  });
  for (std::size_t i = 0; i < errors.size(); ++i)
    if (!errors[i].empty())
      throw fiber::UnsupportedBasis("grid point " + std::to_string(i) + ": " + errors[i]);
  return out;
}

double integrate(const std::vector<FermiPointData>& pts, const std::vector<double>& field) {
  if (field.size() != pts.size()) throw std::invalid_argument("field size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) acc += pts[i].area_weight * field[i];
  return acc;
}

double surface_area(const std::vector<FermiPointData>& pts) {
  double acc = 0.0;
  for (const auto& p : pts) acc += p.area_weight;
  return acc;
}

}  // namespace syvol::geometry
