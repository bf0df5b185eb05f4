#include "syvol/eikonal.hpp"

#include <cmath>
#include <stdexcept>

namespace syvol::expansion {

using fiber::FiberFunction;
using series::cplx;

FiberFunction eikonal_residual(const std::vector<FiberFunction>& psi, const std::vector<FiberFunction>& omega, int s,
                               const series::ContourOptions& opt) {
  if (psi.empty() || omega.empty()) throw std::invalid_argument("eikonal residual needs psi and omega");
  const int k = omega.front().codimension();
  int deg = 1;
  for (const auto& f : psi) deg = std::max(deg, f.max_degree());
  for (const auto& f : omega) deg = std::max(deg, f.max_degree());
  const int out_degree = std::min(fiber::kDefaultDegreeCap, std::max(1, s) * deg);

  auto radial = series::nodewise({psi, omega}, 1, out_degree, [&](const std::vector<std::vector<double>>& a) {
    const std::vector<double>& p = a[0];
    const std::vector<double>& w = a[1];
    auto f = [&](cplx t) {
      const series::Jet2 P = series::eval_poly(p, t);
      const cplx W = series::eval_poly(w, t).value;
      const cplx q = P.value + t * P.d1;
      return q * q - std::exp(2.0 * W);
    };
    return std::vector<double>{series::taylor_coefficients(f, s + 1, opt)[static_cast<std::size_t>(s)]};
  });
  FiberFunction F = radial.front();
  for (int i = 1; i < s; ++i) {
    const int j = s - i;
    if (i < static_cast<int>(psi.size()) && j < static_cast<int>(psi.size()))
      F += fiber::gradient_inner(psi[i], psi[j]);
  }
  if (F.codimension() != k) throw fiber::BasisMismatch("codimension mismatch");
  return F;
}

EikonalSeries eikonal_expand(const std::vector<FiberFunction>& omega, int N, const series::ContourOptions& opt) {
  if (N < 0 || N > kEikonalOrderCap) throw std::invalid_argument("eikonal order must be in [0, 4]");
  if (omega.empty()) throw std::invalid_argument("omega jets are empty");
  const FiberFunction& w0 = omega.front();
  if (w0.effective_degree(1e-14) != 0) throw std::invalid_argument("omega_0 must be fiber-constant");
  const int k = w0.codimension();
  EikonalSeries out;
  out.omega = omega;
  const double psi0 = std::exp(w0.average());
  out.psi.push_back(FiberFunction::constant(k, psi0));
  for (int s = 1; s <= N; ++s) {
    const FiberFunction F = eikonal_residual(out.psi, omega, s, opt);
    out.psi.push_back((-1.0 / (2.0 * (1.0 + s) * psi0)) * F);
  }
  return out;
}

}  // namespace syvol::expansion
