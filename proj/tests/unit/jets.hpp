// Random and model jets shared by several test files.
#pragma once

#include <random>

#include "syvol/geometry.hpp"

namespace testjets {

inline Eigen::MatrixXd random_symmetric(int d, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, scale);
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = nd(rng);
  return m;
}

/// Sum of -1/2 h (KN) h for random symmetric h: satisfies all algebraic
/// curvature symmetries.
inline syvol::geometry::Curvature random_curvature(int d, std::mt19937_64& rng) {
  syvol::geometry::Curvature R(d);
  for (int m = 0; m < 2; ++m) {
    const Eigen::MatrixXd h = random_symmetric(d, 0.5, rng);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e) R(a, b, c, e) += h(a, e) * h(b, c) - h(a, c) * h(b, e);
  }
  return R;
}

inline syvol::geometry::MetricJet random_jet(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  syvol::geometry::MetricJet jet;
  jet.n = n;
  jet.k = k;
  jet.kind = syvol::fiber::natural_basis(k);
  const Eigen::MatrixXd a = random_symmetric(n, 0.3, rng);
  jet.h0 = Eigen::MatrixXd::Identity(n, n) + a * a;
  for (int c = 0; c < k; ++c) jet.L.push_back(random_symmetric(n, 1.0, rng));
  jet.R = random_curvature(n + k, rng);
  return jet;
}

/// Totally geodesic S^n inside the unit S^{n+k}.
inline syvol::geometry::MetricJet equatorial_jet(int n, int k) {
  syvol::geometry::MetricJet jet;
  jet.n = n;
  jet.k = k;
  jet.kind = syvol::fiber::natural_basis(k);
  jet.h0 = Eigen::MatrixXd::Identity(n, n);
  jet.L.assign(static_cast<std::size_t>(k), Eigen::MatrixXd::Zero(n, n));
  jet.R = syvol::geometry::Curvature::constant_sectional(Eigen::MatrixXd::Identity(n + k, n + k), 1.0);
  return jet;
}

}  // namespace testjets
