#include "syvol/indicial.hpp"

#include <cmath>
#include <tuple>
#include <stdexcept>

namespace syvol::indicial {

std::string classification_name(const Classification& c) {
  if (std::holds_alternative<Regular>(c)) return "Regular";
  if (std::holds_alternative<OddConstrained>(c)) return "OddConstrained";
  return "LogObstructed";
}

double indicial_scalar(int n, int k, double s) { return s * s - n * s - (n - k + 2); }

std::optional<std::pair<double, double>> indicial_roots(int n, int k) {
  const long long disc = static_cast<long long>(n) * n + 4LL * n - 4LL * k + 8;
  if (disc < 0) return std::nullopt;
  const double r = std::sqrt(static_cast<double>(disc));
  return std::make_pair((n - r) / 2.0, (n + r) / 2.0);
}

std::vector<int> integer_roots(int n, int k) {
  std::vector<int> out;
  for (int s = 1; s <= n; ++s)
    if (indicial_scalar_exact(n, k, s) == 0) out.push_back(s);
  return out;
}

std::pair<std::set<int>, std::set<int>> exceptional_sets(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  auto P = [n](int p) { return n + 2 + 2 * n * p - 4 * p * p; };
  auto Q = [n](int p) { return 2 * n + 1 + 2 * (n - 2) * p - 4 * p * p; };
  std::set<int> e, o;
  if (n % 2 == 0) {
    for (int p = 0; p <= n / 4; ++p) {
      e.insert(P(p));
      o.insert(Q(p));
    }
  } else {
    for (int p = 1; p <= n / 2; ++p) e.insert(P(p));
    o = e;
    o.insert(n + 2);
  }
  return {e, o};
}

IndicialReport classify(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("classify needs n >= 1 and k >= 1");
  IndicialReport rep;
  rep.n = n;
  rep.k = k;
  rep.roots = indicial_roots(n, k);
  std::tie(rep.e_set, rep.o_set) = exceptional_sets(n);
  const std::vector<int> roots = integer_roots(n, k);
  if (rep.e_set.count(k)) {
    // The obstruction sits at the even root; for odd n an odd root may precede it.
    int nu = 0;
    for (int s : roots)
      if (s % 2 == 0) {
        nu = s;
        break;
      }
    rep.classification = LogObstructed{nu, 2 * nu == n ? 2 : 1};
  } else if (rep.o_set.count(k)) {
    OddConstrained oc;
    for (int s : roots)
      if (s % 2 == 1) oc.resonant_orders.push_back(s);
    rep.classification = oc;
  } else {
    rep.classification = Regular{};
  }
  return rep;
}

std::optional<int> resonant_degree(int n, int k, int s) {
  const long long c = indicial_scalar_exact(n, k, s);
  if (c < 0) return std::nullopt;
  for (long long p = 0;; ++p) {
    const long long lam = p * (p + k - 2);
    if (lam == c) return static_cast<int>(p);
    if (lam > c) return std::nullopt;
  }
}

fiber::FiberFunction indicial_apply(int n, int k, double s, const fiber::FiberFunction& phi) {
  if (phi.codimension() != k) throw fiber::BasisMismatch("codimension mismatch");
  const double c = indicial_scalar(n, k, s);
  return phi.scaled_by_degree([&](int j) { return fiber::eigenvalue(j, k) + c; });
}

SolveResult indicial_solve(int n, int k, double s, const fiber::FiberFunction& F, double tol) {
  if (F.codimension() != k) throw fiber::BasisMismatch("codimension mismatch");
  std::optional<int> p;
  if (std::abs(s - std::round(s)) == 0.0) p = resonant_degree(n, k, static_cast<int>(std::lround(s)));
  if (p && *p <= F.max_degree() && F.degree_norm(*p) > tol * std::max(1.0, F.norm()))
    return Obstruction{*p, F.projection(*p)};
  const double c = indicial_scalar(n, k, s);
  return F.scaled_by_degree([&](int j) {
    if (p && j == *p) return 0.0;
    return 1.0 / (fiber::eigenvalue(j, k) + c);
  });
}

}  // namespace syvol::indicial
