#include "syvol/geometry.hpp"

#include <cmath>
#include <string>

namespace syvol::geometry {

using fiber::FiberFunction;

Curvature Curvature::constant_sectional(const Eigen::MatrixXd& g, double kappa) {
  const int d = static_cast<int>(g.rows());
  Curvature c(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int e = 0; e < d; ++e)
        for (int f = 0; f < d; ++f) c(a, b, e, f) = kappa * (g(a, f) * g(b, e) - g(a, e) * g(b, f));
  return c;
}

bool Curvature::is_zero() const {
  for (double v : r_)
    if (v != 0.0) return false;
  return true;
}

Eigen::MatrixXd MetricJet::metric() const {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(dim(), dim());
  g.topLeftCorner(n, n) = h0;
  return g;
}

Eigen::MatrixXd MetricJet::h0_inverse() const { return h0.inverse(); }

Eigen::VectorXd MetricJet::mean_curvature() const {
  const Eigen::MatrixXd hi = h0_inverse();
  Eigen::VectorXd H(k);
  for (int a = 0; a < k; ++a) H(a) = (hi * L[a]).trace();
  return H;
}

Eigen::MatrixXd MetricJet::second_form_gram() const {
  const Eigen::MatrixXd hi = h0_inverse();
  Eigen::MatrixXd G(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) G(a, b) = (hi * L[a] * hi * L[b]).trace();
  return G;
}

Eigen::MatrixXd MetricJet::ricci() const {
  const int d = dim();
  if (R.dim() == 0) return Eigen::MatrixXd::Zero(d, d);
  const Eigen::MatrixXd gi = metric().inverse();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) ric(a, b) += gi(c, e) * R(a, c, e, b);
  return ric;
}

double MetricJet::scalar_curvature() const { return (metric().inverse() * ricci()).trace(); }

Eigen::MatrixXd MetricJet::schouten() const {
  const int d = dim();
  if (d <= 2) throw std::invalid_argument("Schouten tensor needs dimension >= 3");
  return (ricci() - scalar_curvature() / (2.0 * (d - 1)) * metric()) / (d - 2.0);
}

double MetricJet::trace_schouten_tangent() const {
  return (h0_inverse() * schouten().topLeftCorner(n, n)).trace();
}

double MetricJet::gauss_scalar() const {
  const Eigen::MatrixXd hi = h0_inverse();
  double acc = 0.0;
  if (R.dim() > 0)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) acc += hi(i, j) * hi(p, q) * R(i, p, q, j);
  const Eigen::VectorXd H = mean_curvature();
  return acc + H.squaredNorm() - norm_L2();
}

void validate(const MetricJet& jet) {
  if (jet.n < 1 || jet.k < 1) throw std::invalid_argument("jet dimensions must be positive");
  if (jet.h0.rows() != jet.n || jet.h0.cols() != jet.n) throw std::invalid_argument("h0 has wrong size");
  if (static_cast<int>(jet.L.size()) != jet.k) throw std::invalid_argument("L must have k components");
  for (const auto& l : jet.L)
    if (l.rows() != jet.n || l.cols() != jet.n) throw std::invalid_argument("L component has wrong size");
  if (jet.R.dim() != 0 && jet.R.dim() != jet.dim()) throw std::invalid_argument("curvature has wrong dimension");
  const double det = jet.h0.determinant();
  if (!(det > 1e-12)) throw DegenerateMetric("det h0 = " + std::to_string(det));
}

fiber::BasisKind jet_basis(int k) { return fiber::natural_basis(k); }

FiberFunction gamma1(const MetricJet& jet) {
  return FiberFunction::linear_form(jet.k, jet.kind, -2.0 * jet.mean_curvature());
}

namespace {

Eigen::MatrixXd normal_ricci(const MetricJet& jet) { return jet.ricci().bottomRightCorner(jet.k, jet.k); }

// S_cd = sum_a R_{a c d a} over normal indices.
Eigen::MatrixXd normal_trace_form(const MetricJet& jet) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(jet.k, jet.k);
  if (jet.R.dim() == 0) return s;
  const int n = jet.n;
  for (int a = 0; a < jet.k; ++a)
    for (int c = 0; c < jet.k; ++c)
      for (int d = 0; d < jet.k; ++d) s(c, d) += jet.R(n + a, n + c, n + d, n + a);
  return s;
}

Eigen::MatrixXd combo_form(const MetricJet& jet) {
  return -2.0 * normal_ricci(jet) + (4.0 / 3.0) * normal_trace_form(jet) - 2.0 * jet.second_form_gram();
}

}  // namespace

FiberFunction gamma2_combo(const MetricJet& jet) {
  return FiberFunction::quadratic_form(jet.k, jet.kind, combo_form(jet));
}

double gamma2_combo_average(const MetricJet& jet) { return combo_form(jet).trace() / jet.k; }

std::vector<std::vector<FiberFunction>> block_h1(const MetricJet& jet) {
  std::vector<std::vector<FiberFunction>> h(static_cast<std::size_t>(jet.n));
  for (int i = 0; i < jet.n; ++i)
    for (int j = 0; j < jet.n; ++j) {
      Eigen::VectorXd w(jet.k);
      for (int a = 0; a < jet.k; ++a) w(a) = -2.0 * jet.L[a](i, j);
      h[i].push_back(FiberFunction::linear_form(jet.k, jet.kind, w));
    }
  return h;
}

std::vector<std::vector<FiberFunction>> block_h2(const MetricJet& jet) {
  const Eigen::MatrixXd hi = jet.h0_inverse();
  std::vector<std::vector<FiberFunction>> h(static_cast<std::size_t>(jet.n));
  for (int i = 0; i < jet.n; ++i)
    for (int j = 0; j < jet.n; ++j) {
      Eigen::MatrixXd q(jet.k, jet.k);
      for (int a = 0; a < jet.k; ++a)
        for (int b = 0; b < jet.k; ++b) {
          const double r = jet.R.dim() ? jet.R(i, jet.n + a, jet.n + b, j) : 0.0;
          q(a, b) = -r + (jet.L[a] * hi * jet.L[b])(i, j);
        }
      h[i].push_back(FiberFunction::quadratic_form(jet.k, jet.kind, q));
    }
  return h;
}

FiberFunction trace_b2(const MetricJet& jet) {
  const int k = jet.k, n = jet.n;
  if (jet.R.dim() == 0) return FiberFunction::zero(k);
  FiberFunction acc = FiberFunction::zero(k);
  if (jet.kind == fiber::BasisKind::Zonal || jet.kind == fiber::BasisKind::Constant) {
    // <dc^a, dc^b> = delta^ab - c^a c^b; the c^a c^b part drops by antisymmetry.
    return (-1.0 / 3.0) * FiberFunction::quadratic_form(k, jet.kind, normal_trace_form(jet));
  }
  std::vector<FiberFunction> c;
  for (int a = 0; a < k; ++a) c.push_back(FiberFunction::coordinate(k, a, jet.kind));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Eigen::MatrixXd q(k, k);
      for (int e = 0; e < k; ++e)
        for (int f = 0; f < k; ++f) q(e, f) = jet.R(n + a, n + e, n + f, n + b);
      const FiberFunction qf = FiberFunction::quadratic_form(k, jet.kind, q);
      acc += fiber::multiply(fiber::gradient_inner(c[a], c[b]), qf);
    }
  return (-1.0 / 3.0) * acc;
}

FiberFunction gamma2_combo_from_blocks(const MetricJet& jet) {
  const Eigen::MatrixXd hi = jet.h0_inverse();
  const auto h1 = block_h1(jet);
  const auto h2 = block_h2(jet);
  FiberFunction acc = FiberFunction::zero(jet.k);
  for (int i = 0; i < jet.n; ++i)
    for (int j = 0; j < jet.n; ++j) acc += (2.0 * hi(i, j)) * h2[j][i];
  // tr(h0^{-1} h1 h0^{-1} h1)
  for (int i = 0; i < jet.n; ++i)
    for (int j = 0; j < jet.n; ++j)
      for (int p = 0; p < jet.n; ++p)
        for (int q = 0; q < jet.n; ++q) {
          const double w = hi(i, j) * hi(p, q);
          if (w != 0.0) acc -= w * fiber::multiply(h1[j][p], h1[q][i]);
        }
  return acc + 2.0 * trace_b2(jet);
}

FermiPointData fermi_point(const MetricJet& jet, double area_weight) {
  validate(jet);
  FermiPointData p;
  p.jet = jet;
  if (jet.k > 1) {
    p.gamma1 = gamma1(jet);
    p.gamma2_combo = gamma2_combo(jet);
  }
  p.R_g_point = jet.scalar_curvature();
  p.trP_tan = jet.dim() > 2 ? jet.trace_schouten_tangent() : 0.0;
  p.R_h = jet.gauss_scalar();
  p.R_h_intrinsic = p.R_h;
  p.H2 = jet.mean_curvature().squaredNorm();
  p.L2 = jet.norm_L2();
  p.Lo2 = p.L2 - p.H2 / jet.n;
  p.area_weight = area_weight;
  return p;
}

}  // namespace syvol::geometry
