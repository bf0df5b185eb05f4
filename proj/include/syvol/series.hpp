// Truncated power series in the normal distance t.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "syvol/fiber.hpp"

namespace syvol::series {

using cplx = std::complex<double>;

struct ContourOptions {
  double radius = 0.5;
  int points = 64;
};

/// Taylor coefficients a_0..a_{count-1} at t = 0 of a function holomorphic on
/// |t| <= radius, by the trapezoid rule on the Cauchy integral.
std::vector<double> taylor_coefficients(const std::function<cplx(cplx)>& f, int count,
                                        const ContourOptions& opt = {});

/// Value, first and second derivative of a real polynomial at complex t.
struct Jet2 {
  cplx value, d1, d2;
};
Jet2 eval_poly(const std::vector<double>& c, cplx t);

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b, int order);
/// a^alpha truncated to degree `order`; needs a[0] > 0.
std::vector<double> pow(const std::vector<double>& a, double alpha, int order);

/// Apply a scalar series map node-by-node on the fiber: every coefficient
/// function is sampled on a common grid, `op` is applied to the pointwise
/// coefficient vectors, and the outputs are projected back to degree `out_degree`.
std::vector<fiber::FiberFunction> nodewise(
    const std::vector<std::vector<fiber::FiberFunction>>& inputs, int out_count, int out_degree,
    const std::function<std::vector<double>(const std::vector<std::vector<double>>&)>& op);

}  // namespace syvol::series
