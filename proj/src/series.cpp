#include "syvol/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace syvol::series {

std::vector<double> taylor_coefficients(const std::function<cplx(cplx)>& f, int count, const ContourOptions& opt) {
  const int m = opt.points;
  if (count > m / 2) throw std::invalid_argument("too many coefficients for contour resolution");
  std::vector<cplx> vals(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) {
    const double th = 2.0 * std::numbers::pi * q / m;
    vals[q] = f(std::polar(opt.radius, th));
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    cplx acc = 0.0;
    for (int q = 0; q < m; ++q) acc += vals[q] * std::polar(1.0, -2.0 * std::numbers::pi * q * j / m);
    out[j] = (acc / static_cast<double>(m)).real() / std::pow(opt.radius, j);
  }
  return out;
}

Jet2 eval_poly(const std::vector<double>& c, cplx t) {
  Jet2 r{0.0, 0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    r.d2 = r.d2 * t + 2.0 * r.d1;
    r.d1 = r.d1 * t + r.value;
    r.value = r.value * t + *it;
  }
  return r;
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b, int order) {
  std::vector<double> out(static_cast<std::size_t>(order + 1), 0.0);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<double> pow(const std::vector<double>& a, double alpha, int order) {
  if (a.empty() || a[0] <= 0.0) throw std::domain_error("series power needs a positive constant term");
  // (a^alpha)' a = alpha a' a^alpha, solved coefficient by coefficient.
  std::vector<double> b(static_cast<std::size_t>(order + 1), 0.0);
  b[0] = std::pow(a[0], alpha);
  auto at = [&a](int i) { return i < static_cast<int>(a.size()) ? a[i] : 0.0; };
  for (int m = 1; m <= order; ++m) {
    double acc = 0.0;
    for (int i = 1; i <= m; ++i) acc += (alpha * i - (m - i)) * at(i) * b[m - i];
    b[m] = acc / (m * a[0]);
  }
  return b;
}

std::vector<fiber::FiberFunction> nodewise(
    const std::vector<std::vector<fiber::FiberFunction>>& inputs, int out_count, int out_degree,
    const std::function<std::vector<double>(const std::vector<std::vector<double>>&)>& op) {
  const fiber::FiberFunction* ref = nullptr;
  for (const auto& s : inputs)
    for (const auto& f : s)
      if (!f.empty()) {
        if (!ref) {
          ref = &f;
        } else if (fiber::common_kind(*ref, f) != ref->kind()) {
          ref = &f;
        }
      }
  if (!ref) throw std::invalid_argument("nodewise: no input data");
  const int k = ref->codimension();
  const fiber::BasisKind kind = ref->kind();
  const int res = kind == fiber::BasisKind::Constant ? 0 : std::max(out_degree, fiber::kDefaultDegreeCap);
  if (kind == fiber::BasisKind::Constant) out_degree = 0;
  auto grid = fiber::QuadratureGrid::get(k, kind, res);

  std::vector<std::vector<Eigen::VectorXd>> samples(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    for (const auto& f : inputs[i]) samples[i].push_back(f.empty() ? Eigen::VectorXd::Zero(grid->size())
                                                                   : f.with_kind(kind).sample(*grid));

  std::vector<Eigen::VectorXd> out(static_cast<std::size_t>(out_count), Eigen::VectorXd::Zero(grid->size()));
  std::vector<std::vector<double>> args(inputs.size());
  for (int q = 0; q < grid->size(); ++q) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      args[i].resize(samples[i].size());
      for (std::size_t j = 0; j < samples[i].size(); ++j) args[i][j] = samples[i][j](q);
    }
    const std::vector<double> r = op(args);
    for (int j = 0; j < out_count && j < static_cast<int>(r.size()); ++j) out[j](q) = r[j];
  }
  std::vector<fiber::FiberFunction> result;
  result.reserve(out.size());
  for (int j = 0; j < out_count; ++j)
    result.push_back(fiber::FiberFunction::from_samples(*grid, out[j], std::min(out_degree, res)));
  return result;
}

}  // namespace syvol::series
