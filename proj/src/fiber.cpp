#include "syvol/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace syvol::fiber {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double jacobi_beta(int j, int k) {
  if (j == 1) return 1.0 / k;
  const double jj = j;
  return jj * (jj + k - 3) / ((2 * jj + k - 2) * (2 * jj + k - 4));
}

int total_dimension(BasisKind kind, int max_degree) {
  int n = 0;
  for (int j = 0; j <= max_degree; ++j) n += degree_dimension(kind, j);
  return n;
}

void check_kind(int k, BasisKind kind) {
  if (k < 1) throw std::invalid_argument("codimension must be >= 1");
  if (kind == BasisKind::Fourier && k != 2)
    throw UnsupportedBasis("Fourier basis requires k = 2");
  if (kind == BasisKind::SphericalHarmonic && k != 3)
    throw UnsupportedBasis("spherical harmonic basis requires k = 3");
  if (kind == BasisKind::Zonal && k < 2) throw UnsupportedBasis("zonal basis requires k >= 2");
}

// Normalized associated Legendre values Pbar[j][m] for 0 <= m <= j <= J.
std::vector<std::vector<double>> normalized_legendre(int J, double z, double s) {
  std::vector<std::vector<double>> p(static_cast<std::size_t>(J + 1));
  for (int j = 0; j <= J; ++j) p[j].assign(static_cast<std::size_t>(j + 1), 0.0);
  p[0][0] = 1.0;
  for (int m = 1; m <= J; ++m) p[m][m] = std::sqrt((2.0 * m + 1) / (2.0 * m)) * s * p[m - 1][m - 1];
  for (int m = 0; m < J; ++m) p[m + 1][m] = std::sqrt(2.0 * m + 3) * z * p[m][m];
  for (int m = 0; m <= J; ++m) {
    for (int j = m + 2; j <= J; ++j) {
      const double a = std::sqrt((4.0 * j * j - 1) / (double(j) * j - double(m) * m));
      const double b =
          std::sqrt((double(j - 1) * (j - 1) - double(m) * m) / (4.0 * (j - 1) * (j - 1) - 1));
      p[j][m] = a * (z * p[j - 1][m] - b * p[j - 2][m]);
    }
  }
  return p;
}

}  // namespace

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Constant: return "constant";
    case BasisKind::Fourier: return "fourier";
    case BasisKind::SphericalHarmonic: return "spherical_harmonic";
    case BasisKind::Zonal: return "zonal";
  }
  return "unknown";
}

double sphere_area(int k) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * k) / std::tgamma(0.5 * k);
}

BasisKind natural_basis(int k) {
  if (k == 2) return BasisKind::Fourier;
  if (k == 3) return BasisKind::SphericalHarmonic;
  if (k == 1) return BasisKind::Constant;
  return BasisKind::Zonal;
}

int degree_dimension(BasisKind kind, int j) {
  if (j < 0) return 0;
  switch (kind) {
    case BasisKind::Constant: return j == 0 ? 1 : 0;
    case BasisKind::Fourier: return j == 0 ? 1 : 2;
    case BasisKind::SphericalHarmonic: return 2 * j + 1;
    case BasisKind::Zonal: return 1;
  }
  return 0;
}

void gauss_symmetric_jacobi(int count, int k, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(count), 0.0);
  weights.assign(static_cast<std::size_t>(count), 1.0);
  if (count == 1) return;
  Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(count, count);
  for (int j = 1; j < count; ++j) {
    const double b = std::sqrt(jacobi_beta(j, k));
    jm(j, j - 1) = b;
    jm(j - 1, j) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
  for (int i = 0; i < count; ++i) {
    nodes[i] = es.eigenvalues()(i);
    const double v = es.eigenvectors()(0, i);
    weights[i] = v * v;
  }
}

Eigen::VectorXd evaluate_basis(int k, BasisKind kind, int max_degree, std::span<const double> point) {
  check_kind(k, kind);
  Eigen::VectorXd out(total_dimension(kind, max_degree));
  switch (kind) {
    case BasisKind::Constant:
      out(0) = 1.0;
      break;
    case BasisKind::Fourier: {
      const double th = std::atan2(point[1], point[0]);
      out(0) = 1.0;
      for (int j = 1; j <= max_degree; ++j) {
        out(2 * j - 1) = kSqrt2 * std::cos(j * th);
        out(2 * j) = kSqrt2 * std::sin(j * th);
      }
      break;
    }
    case BasisKind::SphericalHarmonic: {
      const double z = point[0], x = point[1], y = point[2];
      const double s = std::hypot(x, y);
      const double ph = std::atan2(y, x);
      auto p = normalized_legendre(max_degree, z, s);
      int idx = 0;
      for (int j = 0; j <= max_degree; ++j) {
        for (int m = -j; m <= j; ++m) {
          if (m < 0)
            out(idx++) = kSqrt2 * p[j][-m] * std::sin(-m * ph);
          else if (m == 0)
            out(idx++) = p[j][0];
          else
            out(idx++) = kSqrt2 * p[j][m] * std::cos(m * ph);
        }
      }
      break;
    }
    case BasisKind::Zonal: {
      const double x = point[0];
      out(0) = 1.0;
      if (max_degree >= 1) out(1) = x / std::sqrt(jacobi_beta(1, k));
      for (int j = 1; j < max_degree; ++j)
        out(j + 1) = (x * out(j) - std::sqrt(jacobi_beta(j, k)) * out(j - 1)) /
                     std::sqrt(jacobi_beta(j + 1, k));
      break;
    }
  }
  return out;
}

QuadratureGrid::QuadratureGrid(int k, BasisKind kind, int resolution)
    : k_(k), kind_(kind), resolution_(resolution) {
  check_kind(k, kind);
  auto push = [&](std::initializer_list<double> head, double w) {
    std::size_t before = nodes_.size();
    nodes_.insert(nodes_.end(), head);
    nodes_.resize(before + static_cast<std::size_t>(k_), 0.0);
    weights_.push_back(w);
  };
  switch (kind) {
    case BasisKind::Constant:
      resolution_ = 0;
      push({1.0}, 1.0);
      break;
    case BasisKind::Fourier: {
      const int n = 2 * resolution + 1;
      for (int q = 0; q < n; ++q) {
        const double th = 2.0 * std::numbers::pi * q / n;
        push({std::cos(th), std::sin(th)}, 1.0 / n);
      }
      break;
    }
    case BasisKind::SphericalHarmonic: {
      std::vector<double> z, w;
      gauss_symmetric_jacobi(resolution + 1, 3, z, w);
      const int nphi = 2 * resolution + 1;
      for (std::size_t i = 0; i < z.size(); ++i) {
        const double s = std::sqrt(std::max(0.0, 1.0 - z[i] * z[i]));
        for (int l = 0; l < nphi; ++l) {
          const double ph = 2.0 * std::numbers::pi * l / nphi;
          push({z[i], s * std::cos(ph), s * std::sin(ph)}, w[i] / nphi);
        }
      }
      break;
    }
    case BasisKind::Zonal: {
      std::vector<double> x, w;
      gauss_symmetric_jacobi(resolution + 1, k, x, w);
      for (std::size_t i = 0; i < x.size(); ++i)
        push({x[i], std::sqrt(std::max(0.0, 1.0 - x[i] * x[i]))}, w[i]);
      break;
    }
  }
  basis_.resize(size(), total_dimension(kind_, resolution_));
  for (int q = 0; q < size(); ++q) basis_.row(q) = evaluate_basis(k_, kind_, resolution_, node(q)).transpose();
}

std::shared_ptr<const QuadratureGrid> QuadratureGrid::get(int k, BasisKind kind, int resolution) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const QuadratureGrid>> cache;
  if (kind == BasisKind::Constant) resolution = 0;
  const auto key = std::make_tuple(k, static_cast<int>(kind), resolution);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto grid = std::make_shared<const QuadratureGrid>(k, kind, resolution);
  cache.emplace(key, grid);
  return grid;
}

FiberFunction::FiberFunction(int k, BasisKind kind, int max_degree)
    : k_(k), kind_(kind), max_degree_(kind == BasisKind::Constant ? 0 : max_degree) {
  check_kind(k, kind);
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  if (kind == BasisKind::Constant && max_degree > 0)
    throw UnsupportedBasis("constant basis holds degree 0 only");
  coeffs_.assign(static_cast<std::size_t>(total_dimension(kind_, max_degree_)), 0.0);
}

FiberFunction FiberFunction::constant(int k, double value) {
  FiberFunction f(k, BasisKind::Constant, 0);
  f.coeffs_[0] = value;
  return f;
}

FiberFunction FiberFunction::basis_element(int k, BasisKind kind, int j, int m) {
  FiberFunction f(k, kind, j);
  auto c = f.degree_coefficients(j);
  if (m < 0 || m >= static_cast<int>(c.size())) throw std::out_of_range("basis index");
  c[static_cast<std::size_t>(m)] = 1.0;
  return f;
}

FiberFunction FiberFunction::project_function(int k, BasisKind kind, int max_degree,
                                              const std::function<double(std::span<const double>)>& f) {
  auto grid = QuadratureGrid::get(k, kind, max_degree);
  Eigen::VectorXd vals(grid->size());
  for (int q = 0; q < grid->size(); ++q) vals(q) = f(grid->node(q));
  return from_samples(*grid, vals, max_degree);
}

FiberFunction FiberFunction::quadratic_form(int k, BasisKind kind, const Eigen::MatrixXd& q) {
  if (q.rows() != k || q.cols() != k) throw std::invalid_argument("quadratic form size");
  const Eigen::MatrixXd s = 0.5 * (q + q.transpose());
  if (kind == BasisKind::Zonal || kind == BasisKind::Constant) {
    // Only a e1 e1^T + b I is representable.
    const double b = k > 1 ? s(1, 1) : 0.0;
    Eigen::MatrixXd model = b * Eigen::MatrixXd::Identity(k, k);
    model(0, 0) = s(0, 0);
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    if ((s - model).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw UnsupportedBasis("quadratic form is not axisymmetric about the first axis");
    if (kind == BasisKind::Constant) {
      if (k == 1) return constant(k, s(0, 0));
      if (std::abs(s(0, 0) - b) > 1e-12 * scale) throw UnsupportedBasis("quadratic form is not constant");
      return constant(k, b);
    }
    return project_function(k, kind, 2, [&](std::span<const double> p) {
      return b + (s(0, 0) - b) * p[0] * p[0];
    });
  }
  return project_function(k, kind, 2, [&](std::span<const double> p) {
    double acc = 0.0;
    for (int a = 0; a < k; ++a)
      for (int c = 0; c < k; ++c) acc += s(a, c) * p[a] * p[c];
    return acc;
  });
}

FiberFunction FiberFunction::linear_form(int k, BasisKind kind, const Eigen::VectorXd& w) {
  if (w.size() != k) throw std::invalid_argument("linear form size");
  if (kind == BasisKind::Zonal || kind == BasisKind::Constant) {
    const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
    if (k > 1 && w.tail(k - 1).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw UnsupportedBasis("linear form is not axisymmetric about the first axis");
    if (kind == BasisKind::Constant) {
      if (std::abs(w(0)) > 1e-12 * scale) throw UnsupportedBasis("linear form is not constant");
      return constant(k, 0.0);
    }
  }
  return project_function(k, kind, 1, [&](std::span<const double> p) {
    double acc = 0.0;
    for (int a = 0; a < k; ++a) acc += w(a) * p[a];
    return acc;
  });
}

FiberFunction FiberFunction::coordinate(int k, int a, BasisKind kind) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(k);
  w(a) = 1.0;
  return linear_form(k, kind, w);
}

std::size_t FiberFunction::offset(int j) const {
  return static_cast<std::size_t>(total_dimension(kind_, j - 1));
}

std::span<const double> FiberFunction::degree_coefficients(int j) const {
  if (j < 0 || j > max_degree_) return {};
  return {coeffs_.data() + offset(j), static_cast<std::size_t>(degree_dimension(kind_, j))};
}

std::span<double> FiberFunction::degree_coefficients(int j) {
  if (j < 0 || j > max_degree_) throw std::out_of_range("degree beyond max_degree");
  return {coeffs_.data() + offset(j), static_cast<std::size_t>(degree_dimension(kind_, j))};
}

double FiberFunction::value(std::span<const double> point) const {
  if (coeffs_.empty()) return 0.0;
  Eigen::VectorXd b = evaluate_basis(k_, kind_, max_degree_, point);
  double acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * b(static_cast<Eigen::Index>(i));
  return acc;
}

double FiberFunction::norm() const {
  double acc = 0.0;
  for (double c : coeffs_) acc += c * c;
  return std::sqrt(acc);
}

double FiberFunction::degree_norm(int j) const {
  double acc = 0.0;
  for (double c : degree_coefficients(j)) acc += c * c;
  return std::sqrt(acc);
}

int FiberFunction::effective_degree(double tol) const {
  for (int j = max_degree_; j > 0; --j)
    if (degree_norm(j) > tol) return j;
  return 0;
}

FiberFunction FiberFunction::projection(int j) const {
  FiberFunction out(k_, kind_, std::max(0, std::min(j, max_degree_)));
  if (j < 0 || j > max_degree_) return out;
  auto src = degree_coefficients(j);
  std::copy(src.begin(), src.end(), out.degree_coefficients(j).begin());
  return out;
}

FiberFunction FiberFunction::scaled_by_degree(const std::function<double(int)>& factor) const {
  FiberFunction out = *this;
  for (int j = 0; j <= max_degree_; ++j) {
    const double s = factor(j);
    for (double& c : out.degree_coefficients(j)) c *= s;
  }
  return out;
}

FiberFunction FiberFunction::laplacian() const {
  const int k = k_;
  return scaled_by_degree([k](int j) { return eigenvalue(j, k); });
}

FiberFunction FiberFunction::resized(int max_degree) const {
  if (kind_ == BasisKind::Constant) {
    if (max_degree == 0) return *this;
    throw UnsupportedBasis("constant basis holds degree 0 only");
  }
  FiberFunction out(k_, kind_, max_degree);
  const std::size_t n = std::min(out.coeffs_.size(), coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n), out.coeffs_.begin());
  return out;
}

FiberFunction FiberFunction::with_kind(BasisKind kind) const {
  if (kind == kind_) return *this;
  if (kind_ == BasisKind::Constant) {
    FiberFunction out(k_, kind, 0);
    out.coeffs_[0] = coeffs_[0];
    return out;
  }
  if (kind == BasisKind::Constant) {
    if (effective_degree(0.0) != 0) throw BasisMismatch("non-constant function in constant basis");
    return constant(k_, coeffs_[0]);
  }
  if (kind_ != BasisKind::Zonal)
    throw BasisMismatch("cannot convert " + to_string(kind_) + " to " + to_string(kind));
  // Zonal functions depend on c_1 only, which every full basis reads as its axis.
  const FiberFunction& self = *this;
  return project_function(k_, kind, max_degree_, [&self](std::span<const double> p) { return self.value(p); });
}

BasisKind common_kind(const FiberFunction& f, const FiberFunction& g) {
  if (f.codimension() != g.codimension()) throw BasisMismatch("codimension mismatch");
  if (f.kind() == g.kind()) return f.kind();
  if (f.kind() == BasisKind::Constant) return g.kind();
  if (g.kind() == BasisKind::Constant) return f.kind();
  if (f.kind() == BasisKind::Zonal) return g.kind();
  if (g.kind() == BasisKind::Zonal) return f.kind();
  throw BasisMismatch("incompatible bases " + to_string(f.kind()) + " and " + to_string(g.kind()));
}

FiberFunction& FiberFunction::operator+=(const FiberFunction& other) {
  if (other.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = other;
  const BasisKind kind = common_kind(*this, other);
  const int deg = std::max(max_degree_, other.max_degree_);
  FiberFunction a = with_kind(kind);
  if (kind != BasisKind::Constant) a = a.resized(deg);
  const FiberFunction b = other.with_kind(kind);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return *this = std::move(a);
}

FiberFunction& FiberFunction::operator-=(const FiberFunction& other) { return *this += (-1.0) * other; }

FiberFunction& FiberFunction::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

FiberFunction FiberFunction::operator+(double c) const { return *this + constant(k_, c); }

Eigen::VectorXd FiberFunction::sample(const QuadratureGrid& grid) const {
  if (grid.kind() != kind_ || grid.codimension() != k_) throw BasisMismatch("grid does not match function");
  if (grid.resolution() < max_degree_) throw std::invalid_argument("grid resolution below function degree");
  Eigen::Map<const Eigen::VectorXd> c(coeffs_.data(), static_cast<Eigen::Index>(coeffs_.size()));
  return grid.basis().leftCols(c.size()) * c;
}

FiberFunction FiberFunction::from_samples(const QuadratureGrid& grid, const Eigen::VectorXd& values,
                                          int max_degree) {
  if (grid.resolution() < max_degree) throw std::invalid_argument("grid resolution below requested degree");
  FiberFunction out(grid.codimension(), grid.kind(), max_degree);
  Eigen::Map<const Eigen::VectorXd> w(grid.weights().data(), grid.size());
  const Eigen::VectorXd c =
      grid.basis().leftCols(static_cast<Eigen::Index>(out.coeffs_.size())).transpose() * w.cwiseProduct(values);
  std::copy(c.data(), c.data() + c.size(), out.coeffs_.begin());
  return out;
}

FiberFunction multiply(const FiberFunction& f, const FiberFunction& g, int degree_cap) {
  if (f.empty() || g.empty()) return FiberFunction::zero(f.empty() ? g.codimension() : f.codimension());
  const BasisKind kind = common_kind(f, g);
  const int deg = f.max_degree() + g.max_degree();
  if (deg > degree_cap)
    throw DegreeOverflow("product degree " + std::to_string(deg) + " exceeds cap " + std::to_string(degree_cap));
  if (kind == BasisKind::Constant) return FiberFunction::constant(f.codimension(), f.average() * g.average());
  if (f.kind() == BasisKind::Constant) return g * f.average();
  if (g.kind() == BasisKind::Constant) return f * g.average();
  const FiberFunction a = f.with_kind(kind), b = g.with_kind(kind);
  auto grid = QuadratureGrid::get(f.codimension(), kind, deg);
  const Eigen::VectorXd vals = a.sample(*grid).cwiseProduct(b.sample(*grid));
  return FiberFunction::from_samples(*grid, vals, deg);
}

FiberFunction gradient_inner(const FiberFunction& f, const FiberFunction& g, int degree_cap) {
  const FiberFunction fg = multiply(f, g, degree_cap);
  FiberFunction out = fg.laplacian() - multiply(f, g.laplacian(), degree_cap) -
                      multiply(g, f.laplacian(), degree_cap);
  return 0.5 * out;
}

ParityReport parity_degree_check(std::span<const FiberFunction> series, double tol) {
  ParityReport rep;
  rep.violations.reserve(series.size());
  for (std::size_t j = 0; j < series.size(); ++j) {
    const FiberFunction& f = series[j];
    double acc = 0.0;
    for (int d = 0; d <= f.max_degree(); ++d) {
      if (d > static_cast<int>(j) || (static_cast<int>(j) - d) % 2 != 0) {
        const double v = f.degree_norm(d);
        acc += v * v;
      }
    }
    const double v = std::sqrt(acc);
    rep.violations.push_back(v);
    rep.worst = std::max(rep.worst, v);
    if (v > tol) rep.ok = false;
  }
  return rep;
}

}  // namespace syvol::fiber
