// Indicial roots, exceptional codimensions and the spectral indicial operator
//   I_s = Lap + (s^2 - n s - (n - k + 2)).
#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "syvol/fiber.hpp"

namespace syvol::indicial {

struct Regular {};
struct OddConstrained {
  std::vector<int> resonant_orders;
};
struct LogObstructed {
  int nu = 0;
  int log_power = 1;
};
using Classification = std::variant<Regular, OddConstrained, LogObstructed>;

struct IndicialReport {
  int n = 0;
  int k = 0;
  std::optional<std::pair<double, double>> roots;
  std::set<int> e_set;
  std::set<int> o_set;
  Classification classification;
};

std::string classification_name(const Classification& c);

/// Constant term of the indicial operator at order s: s^2 - n s - (n - k + 2).
constexpr long long indicial_scalar_exact(long long n, long long k, long long s) { return s * s - n * s - (n - k + 2); }
double indicial_scalar(int n, int k, double s);

std::optional<std::pair<double, double>> indicial_roots(int n, int k);

/// Positive integer roots s <= n, ascending.
std::vector<int> integer_roots(int n, int k);

std::pair<std::set<int>, std::set<int>> exceptional_sets(int n);

IndicialReport classify(int n, int k);

/// Degree p with -p(p+k-2) + c(s) = 0 for integer s, if any.
std::optional<int> resonant_degree(int n, int k, int s);

fiber::FiberFunction indicial_apply(int n, int k, double s, const fiber::FiberFunction& phi);

struct Obstruction {
  int degree = 0;
  /// Degree-`degree` component of the right-hand side.
  fiber::FiberFunction component;
};
using SolveResult = std::variant<fiber::FiberFunction, Obstruction>;

/// Solve I_s w = F.  At a resonant integer order the resonant component of w
/// is zero; a non-negligible resonant component of F yields an Obstruction.
SolveResult indicial_solve(int n, int k, double s, const fiber::FiberFunction& F, double tol = 1e-12);

}  // namespace syvol::indicial
