// Test-side reference computations that avoid the library's own quadrature
// and series machinery.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace oracle {

constexpr double pi = std::numbers::pi;

/// Integral over S^1 or S^2, normalized to total measure one, using a
/// Gauss-Legendre rule in the polar variable and a uniform rule in azimuth.
inline double sphere_mean(int k, const std::function<double(const double*)>& f) {
  constexpr int nphi = 96;
  double acc = 0.0;
  if (k == 2) {
    for (int i = 0; i < nphi; ++i) {
      const double th = 2 * pi * i / nphi;
      const double p[2] = {std::cos(th), std::sin(th)};
      acc += f(p) / nphi;
    }
    return acc;
  }
  using rule = boost::math::quadrature::gauss<double, 40>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (double z : {x[i], -x[i]}) {
      if (i == 0 && z == -x[i] && x[0] == 0.0) continue;
      const double s = std::sqrt(1 - z * z);
      for (int j = 0; j < nphi; ++j) {
        const double ph = 2 * pi * j / nphi;
        const double p[3] = {z, s * std::cos(ph), s * std::sin(ph)};
        acc += 0.5 * w[i] * f(p) / nphi;
      }
    }
  return acc;
}

/// Central-difference Taylor coefficient a_m of an even or general smooth
/// real function at 0 from samples f(j h), |j| <= 3.
inline double taylor_fd(const std::function<double(double)>& f, int m, double h) {
  auto d = [&](int j) { return f(j * h); };
  switch (m) {
    case 0: return d(0);
    case 1: return (-d(2) + 8 * d(1) - 8 * d(-1) + d(-2)) / (12 * h);
    case 2: return (-d(2) + 16 * d(1) - 30 * d(0) + 16 * d(-1) - d(-2)) / (12 * h * h) / 2;
    case 3: return (-d(3) + 8 * d(2) - 13 * d(1) + 13 * d(-1) - 8 * d(-2) + d(-3)) / (8 * h * h * h) / 6;
  }
  return NAN;
}

}  // namespace oracle
