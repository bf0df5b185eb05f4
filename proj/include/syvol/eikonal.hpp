// Expansion of the distance ratio Psi = t_hat / t for a conformal change
// g_hat = e^{2 omega} g of a flat ambient, with omega a function of the
// normal coordinates only.
#pragma once

#include <vector>

#include "syvol/fiber.hpp"
#include "syvol/series.hpp"

namespace syvol::expansion {

inline constexpr int kEikonalOrderCap = 4;

struct EikonalSeries {
  std::vector<fiber::FiberFunction> psi;
  std::vector<fiber::FiberFunction> omega;
};

/// omega = sum_m omega[m] t^m with omega[0] fiber-constant.  Returns
/// Psi_0..Psi_N, N <= 4.
EikonalSeries eikonal_expand(const std::vector<fiber::FiberFunction>& omega, int N,
                             const series::ContourOptions& opt = {});

/// Order-s coefficient of E[Psi] = (Psi + t Psi')^2 + |d Psi|^2 - e^{2 omega}.
fiber::FiberFunction eikonal_residual(const std::vector<fiber::FiberFunction>& psi,
                                      const std::vector<fiber::FiberFunction>& omega, int s,
                                      const series::ContourOptions& opt = {});

}  // namespace syvol::expansion
