#include <doctest.h>

#include <cmath>
#include <random>

#include "syvol/indicial.hpp"

using namespace syvol;
using namespace syvol::indicial;
using fiber::BasisKind;
using fiber::FiberFunction;

namespace {

FiberFunction random_function(int k, BasisKind kind, int J, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  FiberFunction f(k, kind, J);
  for (int j = 0; j <= J; ++j)
    for (double& c : f.degree_coefficients(j)) c = nd(rng);
  return f;
}

}  // namespace

TEST_SUITE("indicial") {
  TEST_CASE("roots") {
    auto r = indicial_roots(2, 4);
    REQUIRE(r);
    CHECK(r->first == doctest::Approx(0.0).scale(1.0));
    CHECK(r->second == doctest::Approx(2.0));
    for (int n = 1; n <= 6; ++n) {
      auto z = indicial_roots(n, n + 2);
      REQUIRE(z);
      CHECK(z->first == doctest::Approx(0.0).scale(1.0));
      CHECK(z->second == doctest::Approx(n));
    }
    r = indicial_roots(2, 2);
    REQUIRE(r);
    CHECK(r->first == doctest::Approx((2 - std::sqrt(12.0)) / 2));
    CHECK(r->second == doctest::Approx((2 + std::sqrt(12.0)) / 2));
    CHECK_FALSE(indicial_roots(2, 10));
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= 20; ++k)
        if (auto q = indicial_roots(n, k)) {
          CHECK(q->first + q->second == doctest::Approx(n));
          for (double g : {q->first, q->second})
            CHECK(g * g - n * g - (n - k + 2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
        }
  }

  TEST_CASE("exceptional sets") {
    CHECK(exceptional_sets(2) == std::pair{std::set<int>{4}, std::set<int>{5}});
    CHECK(exceptional_sets(4) == std::pair{std::set<int>{6, 10}, std::set<int>{9}});
    CHECK(exceptional_sets(3) == std::pair{std::set<int>{7}, std::set<int>{5, 7}});
    // Every member has an integer root of the matching parity in (0, n].
    for (int n = 2; n <= 12; ++n) {
      const auto [E, O] = exceptional_sets(n);
      auto has_root = [&](int k, int parity) {
        for (int s = 1; s <= n; ++s)
          if (s % 2 == parity && indicial_scalar_exact(n, k, s) == 0) return true;
        return false;
      };
      for (int k : E) CHECK(has_root(k, 0));
      for (int k : O) CHECK(has_root(k, 1));
    }
  }

  TEST_CASE("classification") {
    auto r = classify(2, 4);
    auto* log = std::get_if<LogObstructed>(&r.classification);
    REQUIRE(log);
    CHECK(log->nu == 2);
    CHECK(log->log_power == 1);

    r = classify(2, 5);
    auto* odd = std::get_if<OddConstrained>(&r.classification);
    REQUIRE(odd);
    CHECK(odd->resonant_orders == std::vector<int>{1});

    CHECK(std::holds_alternative<Regular>(classify(3, 2).classification));
    CHECK(classification_name(classify(3, 2).classification) == "Regular");

    // nu = n / 2 forces a squared log: n = 4, k = n^2/4 + n + 2 = 10.
    r = classify(4, 10);
    log = std::get_if<LogObstructed>(&r.classification);
    REQUIRE(log);
    CHECK(log->nu == 2);
    CHECK(log->log_power == 2);
    r = classify(4, 6);
    log = std::get_if<LogObstructed>(&r.classification);
    REQUIRE(log);
    CHECK(log->nu == 4);
    CHECK(log->log_power == 1);

    for (int n = 2; n <= 10; ++n)
      for (int k = 2; k <= n * n + n + 2; ++k) {
        const auto rep = classify(n, k);
        const bool in_e = rep.e_set.count(k) > 0, in_o = rep.o_set.count(k) > 0;
        CHECK(std::holds_alternative<LogObstructed>(rep.classification) == in_e);
        CHECK(std::holds_alternative<OddConstrained>(rep.classification) == (in_o && !in_e));
      }
  }

  TEST_CASE("indicial operator is diagonal in degree") {
    const FiberFunction one = FiberFunction::constant(4, 1.0);
    CHECK(indicial_apply(2, 4, 2.0, one).norm() < 1e-15);
    const FiberFunction c = FiberFunction::coordinate(2, 0, BasisKind::Fourier);
    CHECK((indicial_apply(2, 2, 1.0, c) + 4.0 * c).norm() < 1e-14);
    const FiberFunction f = random_function(3, BasisKind::SphericalHarmonic, 4, 5);
    const FiberFunction g = indicial_apply(3, 3, 0.7, f);
    for (int j = 0; j <= 4; ++j)
      CHECK(g.degree_norm(j) == doctest::Approx(std::abs(-j * (j + 1) + 0.49 - 2.1 - 2) * f.degree_norm(j)));
  }

  TEST_CASE("solve inverts apply away from resonance") {
    const FiberFunction F = random_function(3, BasisKind::SphericalHarmonic, 4, 7);
    const auto res = indicial_solve(2, 3, 2.5, F);
    REQUIRE(std::holds_alternative<FiberFunction>(res));
    CHECK((indicial_apply(2, 3, 2.5, std::get<FiberFunction>(res)) - F).norm() < 1e-12);
  }

  TEST_CASE("resonant solves") {
    SUBCASE("k = 4 log obstruction at s = 2") {
      FiberFunction F = FiberFunction::constant(4, 0.3);
      const auto res = indicial_solve(2, 4, 2.0, F);
      REQUIRE(std::holds_alternative<Obstruction>(res));
      const auto& ob = std::get<Obstruction>(res);
      CHECK(ob.degree == 0);
      CHECK(ob.component.average() == doctest::Approx(0.3));
    }
    SUBCASE("k = 5 constrained order s = 1") {
      // c(1) = 0 for (2, 5), so the kernel at s = 1 is the constants.
      REQUIRE(resonant_degree(2, 5, 1) == 0);
      const FiberFunction c = FiberFunction::basis_element(5, BasisKind::Zonal, 1, 0);
      const auto w = std::get<FiberFunction>(indicial_solve(2, 5, 1.0, c));
      CHECK(w.degree_norm(0) == 0.0);
      CHECK((w + (1.0 / 4.0) * c).norm() < 1e-15);
      CHECK(std::holds_alternative<Obstruction>(indicial_solve(2, 5, 1.0, c + 0.2)));
      const auto z = std::get<FiberFunction>(indicial_solve(2, 5, 1.0, c + 1e-14));
      CHECK(z.degree_norm(0) == 0.0);
    }
  }
}
