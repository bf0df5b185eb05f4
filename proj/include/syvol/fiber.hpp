// Functions on the fiber sphere S^{k-1}, stored by harmonic degree against a
// basis that is orthonormal for the normalized measure (so Y_0 = 1).
//
//   Fourier            k = 2: 1, sqrt2 cos jt, sqrt2 sin jt
//   SphericalHarmonic  k = 3: real harmonics, polar axis c_1, m = -j..j
//   Zonal              any k: orthonormal Gegenbauer polynomials in c_1
//   Constant           any k: degree 0 only
#pragma once

#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace syvol::fiber {

enum class BasisKind { Constant, Fourier, SphericalHarmonic, Zonal };

inline constexpr int kDefaultDegreeCap = 16;

class DegreeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when data cannot be represented in the requested basis
/// (e.g. a non-axisymmetric quadratic form in the Zonal basis).
class UnsupportedBasis : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(BasisKind kind);

/// Area of the unit sphere S^{k-1} in R^k, 2 pi^{k/2} / Gamma(k/2).
double sphere_area(int k);

/// Eigenvalue of the round Laplacian on degree-j harmonics of S^{k-1}.
constexpr double eigenvalue(int j, int k) { return -static_cast<double>(j) * (j + k - 2); }

/// Basis used for general (non-symmetric) fiber data in codimension k.
BasisKind natural_basis(int k);

/// Number of basis elements of degree j.
int degree_dimension(BasisKind kind, int j);

/// Quadrature rule on S^{k-1} exact for polynomials of degree <= 2*resolution,
/// with the basis tabulated at the nodes up to degree `resolution`.
/// Weights sum to one.
class QuadratureGrid {
 public:
  static std::shared_ptr<const QuadratureGrid> get(int k, BasisKind kind, int resolution);

  int codimension() const { return k_; }
  BasisKind kind() const { return kind_; }
  int resolution() const { return resolution_; }
  int size() const { return static_cast<int>(weights_.size()); }

  /// Node q as a unit vector in R^k.  Zonal nodes are (x, sqrt(1-x^2), 0, ...).
  std::span<const double> node(int q) const {
    return {nodes_.data() + static_cast<std::size_t>(q) * k_, static_cast<std::size_t>(k_)};
  }
  const std::vector<double>& weights() const { return weights_; }
  /// basis()(q, idx): basis element idx evaluated at node q.
  const Eigen::MatrixXd& basis() const { return basis_; }

  QuadratureGrid(int k, BasisKind kind, int resolution);

 private:
  int k_;
  BasisKind kind_;
  int resolution_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  Eigen::MatrixXd basis_;
};

/// Gauss nodes/weights for the normalized weight (1-x^2)^{(k-3)/2} on [-1,1]
/// (Legendre for k = 3, Chebyshev for k = 2).
void gauss_symmetric_jacobi(int count, int k, std::vector<double>& nodes, std::vector<double>& weights);

/// Evaluate all basis elements of degree <= max_degree at a unit vector.
Eigen::VectorXd evaluate_basis(int k, BasisKind kind, int max_degree, std::span<const double> point);

class FiberFunction {
 public:
  FiberFunction() = default;
  FiberFunction(int k, BasisKind kind, int max_degree);

  static FiberFunction constant(int k, double value);
  static FiberFunction zero(int k) { return constant(k, 0.0); }
  /// Restriction of the coordinate y^a / |y| (0-based a) to the sphere.
  static FiberFunction coordinate(int k, int a, BasisKind kind);
  static FiberFunction basis_element(int k, BasisKind kind, int j, int m);
  /// L2 projection of a pointwise function onto degrees <= max_degree.
  static FiberFunction project_function(int k, BasisKind kind, int max_degree,
                                        const std::function<double(std::span<const double>)>& f);
  /// Quadratic form sum_ab Q_ab c_a c_b.
  static FiberFunction quadratic_form(int k, BasisKind kind, const Eigen::MatrixXd& q);
  /// Linear form sum_a w_a c_a.
  static FiberFunction linear_form(int k, BasisKind kind, const Eigen::VectorXd& w);

  int codimension() const { return k_; }
  BasisKind kind() const { return kind_; }
  int max_degree() const { return max_degree_; }
  bool empty() const { return coeffs_.empty(); }

  std::span<const double> degree_coefficients(int j) const;
  std::span<double> degree_coefficients(int j);
  double coefficient(int j, int m) const { return degree_coefficients(j)[static_cast<std::size_t>(m)]; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  double value(std::span<const double> point) const;
  /// Constant value of the degree-0 projection.
  double average() const { return coeffs_.empty() ? 0.0 : coeffs_[0]; }
  /// L2 norm for the normalized measure.
  double norm() const;
  double degree_norm(int j) const;
  /// Highest degree carrying a component above tol.
  int effective_degree(double tol = 0.0) const;

  FiberFunction projection(int j) const;
  FiberFunction laplacian() const;
  /// Apply a per-degree multiplier.
  FiberFunction scaled_by_degree(const std::function<double(int)>& factor) const;
  FiberFunction resized(int max_degree) const;
  FiberFunction with_kind(BasisKind kind) const;

  FiberFunction& operator+=(const FiberFunction& other);
  FiberFunction& operator-=(const FiberFunction& other);
  FiberFunction& operator*=(double s);
  friend FiberFunction operator+(FiberFunction a, const FiberFunction& b) { return a += b; }
  friend FiberFunction operator-(FiberFunction a, const FiberFunction& b) { return a -= b; }
  friend FiberFunction operator*(FiberFunction a, double s) { return a *= s; }
  friend FiberFunction operator*(double s, FiberFunction a) { return a *= s; }
  friend FiberFunction operator-(FiberFunction a) { return a *= -1.0; }
  FiberFunction operator+(double c) const;

  /// Values at the nodes of a grid whose resolution covers max_degree().
  Eigen::VectorXd sample(const QuadratureGrid& grid) const;
  static FiberFunction from_samples(const QuadratureGrid& grid, const Eigen::VectorXd& values, int max_degree);

 private:
  std::size_t offset(int j) const;

  int k_ = 2;
  BasisKind kind_ = BasisKind::Constant;
  int max_degree_ = 0;
  std::vector<double> coeffs_;
};

/// Common basis for a binary operation (Constant promotes to the other kind).
BasisKind common_kind(const FiberFunction& f, const FiberFunction& g);

/// Pointwise product, re-projected exactly.  Throws DegreeOverflow when the
/// product degree exceeds degree_cap.
FiberFunction multiply(const FiberFunction& f, const FiberFunction& g, int degree_cap = kDefaultDegreeCap);

/// <df, dg> for the round metric, via 1/2 (Lap(fg) - f Lap g - g Lap f).
FiberFunction gradient_inner(const FiberFunction& f, const FiberFunction& g,
                             int degree_cap = kDefaultDegreeCap);

inline double fiber_average(const FiberFunction& f) { return f.average(); }

/// Integral over the unit S^{k-1} with its round measure.
inline double fiber_integral(const FiberFunction& f) { return f.average() * sphere_area(f.codimension()); }

struct ParityReport {
  bool ok = true;
  /// Per entry: L2 norm of the content outside the parity class Y_j.
  std::vector<double> violations;
  double worst = 0.0;
};

/// Entry j must lie in Y_j: degrees <= j with degree = j (mod 2).
ParityReport parity_degree_check(std::span<const FiberFunction> series, double tol);

}  // namespace syvol::fiber
