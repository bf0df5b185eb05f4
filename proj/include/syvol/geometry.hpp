// Fermi-coordinate jets of a submanifold at a point and the fiber functions
// built from them.
#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "syvol/fiber.hpp"

namespace syvol::geometry {

class DegenerateMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ambient Riemann tensor R_{ABCD} in an adapted frame with metric
/// blockdiag(h0, I_k); tangent indices come first.  Convention: the unit
/// sphere has R_{ABCD} = g_AD g_BC - g_AC g_BD and Ric_AB = g^{CD} R_{ACDB}.
class Curvature {
 public:
  Curvature() = default;
  explicit Curvature(int dim) : d_(dim), r_(static_cast<std::size_t>(dim * dim * dim * dim), 0.0) {}

  static Curvature constant_sectional(const Eigen::MatrixXd& g, double kappa);

  int dim() const { return d_; }
  double operator()(int a, int b, int c, int d) const { return r_[index(a, b, c, d)]; }
  double& operator()(int a, int b, int c, int d) { return r_[index(a, b, c, d)]; }
  bool is_zero() const;

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return static_cast<std::size_t>(((a * d_ + b) * d_ + c) * d_ + d);
  }
  int d_ = 0;
  std::vector<double> r_;
};

struct MetricJet {
  int n = 0;
  int k = 0;
  Eigen::MatrixXd h0;
  /// L[a](i, j) = second fundamental form in normal direction a.
  std::vector<Eigen::MatrixXd> L;
  Curvature R;
  /// Mixed Christoffel symbols Gamma_{iab}; zero for a normal frame parallel at the point.
  std::vector<Eigen::MatrixXd> Gamma;
  fiber::BasisKind kind = fiber::BasisKind::Constant;

  int dim() const { return n + k; }
  Eigen::MatrixXd metric() const;
  Eigen::MatrixXd h0_inverse() const;
  /// Mean curvature vector H^a = h0^{ij} L^a_ij.
  Eigen::VectorXd mean_curvature() const;
  /// <L^a, L^b> with indices raised by h0.
  Eigen::MatrixXd second_form_gram() const;
  double norm_L2() const { return second_form_gram().trace(); }
  Eigen::MatrixXd ricci() const;
  double scalar_curvature() const;
  /// Ambient Schouten tensor (Ric - R g / (2(d-1))) / (d-2).
  Eigen::MatrixXd schouten() const;
  double trace_schouten_tangent() const;
  /// Intrinsic scalar curvature of the submanifold from the Gauss equation.
  double gauss_scalar() const;
};

void validate(const MetricJet& jet);

/// Default fiber basis for a jet: the natural basis for k = 2, 3; Zonal for
/// k >= 4 (then all normal data must be axisymmetric about the first normal).
fiber::BasisKind jet_basis(int k);

fiber::FiberFunction gamma1(const MetricJet& jet);

/// 2 gamma_2 - gamma_1^2 evaluated from the closed-form contraction.
fiber::FiberFunction gamma2_combo(const MetricJet& jet);

/// Closed-form fiber average of gamma2_combo.
double gamma2_combo_average(const MetricJet& jet);

/// 2 gamma_2 - gamma_1^2 assembled from the metric blocks h1, h2 and b2
/// (independent route used for cross-checks).
fiber::FiberFunction gamma2_combo_from_blocks(const MetricJet& jet);

/// Tangential blocks: h1_ij (degree 1) and h2_ij (degree <= 2).
std::vector<std::vector<fiber::FiberFunction>> block_h1(const MetricJet& jet);
std::vector<std::vector<fiber::FiberFunction>> block_h2(const MetricJet& jet);
/// Trace of the fiber block b2 against the round metric.
fiber::FiberFunction trace_b2(const MetricJet& jet);

struct FermiPointData {
  MetricJet jet;
  /// Empty for k = 1, where the fiber S^0 has no harmonic basis here.
  fiber::FiberFunction gamma1;
  fiber::FiberFunction gamma2_combo;
  double R_g_point = 0.0;
  double trP_tan = 0.0;
  double R_h = 0.0;
  double R_h_intrinsic = 0.0;
  double H2 = 0.0;
  double L2 = 0.0;
  /// |L|^2 - |H|^2 / n.
  double Lo2 = 0.0;
  double area_weight = 0.0;
};

FermiPointData fermi_point(const MetricJet& jet, double area_weight = 0.0);

}  // namespace syvol::geometry
