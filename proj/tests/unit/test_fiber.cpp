#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "syvol/fiber.hpp"

using namespace syvol::fiber;

namespace {

double point_value(const FiberFunction& f, std::initializer_list<double> p) {
  std::vector<double> v(p);
  return f.value(v);
}

// Round Laplacian of the zonal or full basis function at a point, by finite
// differences in spherical coordinates.
double fd_laplacian(const std::function<double(const double*)>& f, int k, double th, double ph) {
  const double h = 1e-4;
  if (k == 2) {
    auto g = [&](double t) {
      const double p[2] = {std::cos(t), std::sin(t)};
      return f(p);
    };
    return (g(th + h) - 2 * g(th) + g(th - h)) / (h * h);
  }
  auto g = [&](double t, double q) {
    const double p[3] = {std::cos(t), std::sin(t) * std::cos(q), std::sin(t) * std::sin(q)};
    return f(p);
  };
  const double ft = (g(th + h, ph) - g(th - h, ph)) / (2 * h);
  const double ftt = (g(th + h, ph) - 2 * g(th, ph) + g(th - h, ph)) / (h * h);
  const double fpp = (g(th, ph + h) - 2 * g(th, ph) + g(th, ph - h)) / (h * h);
  return ftt + std::cos(th) / std::sin(th) * ft + fpp / (std::sin(th) * std::sin(th));
}

}  // namespace

TEST_SUITE("fiber") {
  TEST_CASE("sphere areas") {
    CHECK(sphere_area(2) == doctest::Approx(2 * oracle::pi).epsilon(1e-14));
    CHECK(sphere_area(3) == doctest::Approx(4 * oracle::pi).epsilon(1e-14));
    CHECK(sphere_area(4) == doctest::Approx(2 * oracle::pi * oracle::pi).epsilon(1e-14));
  }

  TEST_CASE("bases are orthonormal under an independent rule") {
    for (auto [k, kind] : {std::pair{2, BasisKind::Fourier}, {3, BasisKind::SphericalHarmonic}}) {
      const int J = 6;
      int dim = 0;
      for (int j = 0; j <= J; ++j) dim += degree_dimension(kind, j);
      Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dim, dim);
      for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b)
          gram(a, b) = gram(b, a) = oracle::sphere_mean(k, [&](const double* p) {
            const Eigen::VectorXd v = evaluate_basis(k, kind, J, std::span<const double>(p, k));
            return v(a) * v(b);
          });
      CHECK((gram - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);
    }
  }

  TEST_CASE("zonal basis is orthonormal for the Gegenbauer weight") {
    for (int k : {4, 5, 7}) {
      using rule = boost::math::quadrature::gauss<double, 40>;
      // Normalized weight sin^{k-2} phi on [0, pi], x = cos phi.
      auto mean = [&](const std::function<double(double)>& f) {
        double num = 0, den = 0;
        for (std::size_t i = 0; i < rule::abscissa().size(); ++i)
          for (int sgn : {1, -1}) {
            if (i == 0 && sgn < 0 && rule::abscissa()[0] == 0.0) continue;
            const double phi = 0.5 * oracle::pi * (1 + sgn * rule::abscissa()[i]);
            const double w = rule::weights()[i] * std::pow(std::sin(phi), k - 2);
            num += w * f(std::cos(phi));
            den += w;
          }
        return num / den;
      };
      const int J = 8;
      for (int a = 0; a <= J; ++a)
        for (int b = 0; b <= J; ++b) {
          const double g = mean([&](double x) {
            std::vector<double> p(k, 0.0);
            p[0] = x;
            p[1] = std::sqrt(1 - x * x);
            const auto v = evaluate_basis(k, BasisKind::Zonal, J, p);
            return v(a) * v(b);
          });
          CHECK(g == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
        }
    }
  }

  TEST_CASE("basis elements are Laplacian eigenfunctions") {
    for (auto [k, kind] : {std::pair{2, BasisKind::Fourier}, {3, BasisKind::SphericalHarmonic}}) {
      for (int j = 0; j <= 4; ++j)
        for (int m = 0; m < degree_dimension(kind, j); ++m) {
          const FiberFunction f = FiberFunction::basis_element(k, kind, j, m);
          auto fv = [&](const double* p) { return f.value(std::span<const double>(p, k)); };
          const double th = 0.7, ph = 1.3;
          const double p3[3] = {std::cos(th), std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph)};
          const double p2[2] = {std::cos(th), std::sin(th)};
          const double val = fv(k == 2 ? p2 : p3);
          CHECK(fd_laplacian(fv, k, th, ph) == doctest::Approx(eigenvalue(j, k) * val).epsilon(1e-5).scale(1.0));
          CHECK((f.laplacian() - eigenvalue(j, k) * f).norm() < 1e-12);
        }
    }
    // Zonal: f'' + (k - 2) cot(th) f' at a point.
    for (int k : {4, 6}) {
      for (int j = 0; j <= 5; ++j) {
        const FiberFunction f = FiberFunction::basis_element(k, BasisKind::Zonal, j, 0);
        auto g = [&](double t) {
          std::vector<double> p(k, 0.0);
          p[0] = std::cos(t);
          p[1] = std::sin(t);
          return f.value(p);
        };
        const double th = 0.9, h = 1e-4;
        const double lap = (g(th + h) - 2 * g(th) + g(th - h)) / (h * h) +
                           (k - 2) * std::cos(th) / std::sin(th) * (g(th + h) - g(th - h)) / (2 * h);
        CHECK(lap == doctest::Approx(eigenvalue(j, k) * g(th)).epsilon(1e-5).scale(1.0));
      }
    }
  }

  TEST_CASE("Parseval holds on the library grid") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> nd;
    for (auto [k, kind] : {std::pair{2, BasisKind::Fourier}, {3, BasisKind::SphericalHarmonic}, {5, BasisKind::Zonal}}) {
      FiberFunction f(k, kind, 5);
      for (int j = 0; j <= 5; ++j)
        for (double& c : f.degree_coefficients(j)) c = nd(rng);
      auto grid = QuadratureGrid::get(k, kind, 5);
      const Eigen::VectorXd s = f.sample(*grid);
      double q = 0.0;
      for (int i = 0; i < grid->size(); ++i) q += grid->weights()[i] * s(i) * s(i);
      CHECK(std::sqrt(q) == doctest::Approx(f.norm()).epsilon(1e-12));
    }
  }

  TEST_CASE("projections") {
    const FiberFunction one = FiberFunction::constant(3, 1.0);
    CHECK((one.projection(0) - one).norm() < 1e-15);
    for (int a = 0; a < 3; ++a) {
      const FiberFunction c = FiberFunction::coordinate(3, a, BasisKind::SphericalHarmonic);
      CHECK((c.projection(1) - c).norm() < 1e-14);
      CHECK(c.projection(0).norm() < 1e-14);
    }
    const FiberFunction c0 = FiberFunction::coordinate(3, 0, BasisKind::SphericalHarmonic);
    const FiberFunction c1 = FiberFunction::coordinate(3, 1, BasisKind::SphericalHarmonic);
    const FiberFunction prod = multiply(c0, c1);
    CHECK(prod.degree_norm(0) < 1e-14);
    CHECK(prod.degree_norm(1) < 1e-14);
    CHECK(prod.degree_norm(2) > 0.1);
    FiberFunction sum = FiberFunction::zero(3);
    for (int j = 0; j <= prod.max_degree(); ++j) sum += prod.projection(j);
    CHECK((sum - prod).norm() < 1e-15);
  }

  TEST_CASE("products") {
    SUBCASE("cos^2 on the circle") {
      const FiberFunction c = FiberFunction::coordinate(2, 0, BasisKind::Fourier);
      const FiberFunction p = multiply(c, c);
      for (double th : {0.0, 0.4, 2.2}) {
        const double v = point_value(p, {std::cos(th), std::sin(th)});
        CHECK(v == doctest::Approx(0.5 + 0.5 * std::cos(2 * th)).epsilon(1e-14));
      }
      CHECK(p.average() == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("c_3^2 on S^2 splits into 1/3 and a degree-2 part") {
      const FiberFunction c = FiberFunction::coordinate(3, 2, BasisKind::SphericalHarmonic);
      const FiberFunction p = multiply(c, c);
      CHECK(p.average() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
      CHECK(p.degree_norm(1) < 1e-14);
      const double y = 0.6;
      CHECK(p.projection(2).value(std::vector<double>{0.0, 0.8, y}) ==
            doctest::Approx(y * y - 1.0 / 3.0).epsilon(1e-13));
    }
    SUBCASE("degree 1 times degree 2 has only odd degrees") {
      std::mt19937_64 rng(11);
      std::normal_distribution<double> nd;
      FiberFunction f(3, BasisKind::SphericalHarmonic, 1), g(3, BasisKind::SphericalHarmonic, 2);
      for (double& x : f.degree_coefficients(1)) x = nd(rng);
      for (double& x : g.degree_coefficients(2)) x = nd(rng);
      const FiberFunction p = multiply(f, g);
      CHECK(p.degree_norm(0) < 1e-13);
      CHECK(p.degree_norm(2) < 1e-13);
      CHECK(p.degree_norm(1) > 1e-3);
      CHECK(p.degree_norm(3) > 1e-3);
    }
    SUBCASE("degree cap") {
      const FiberFunction f = FiberFunction::basis_element(2, BasisKind::Fourier, 9, 0);
      CHECK_THROWS_AS(multiply(f, f), DegreeOverflow);
      CHECK_NOTHROW(multiply(f, f, 18));
    }
  }

  TEST_CASE("fiber averages of c_a c_b") {
    for (auto [k, kind] : {std::pair{2, BasisKind::Fourier}, {3, BasisKind::SphericalHarmonic}})
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          const FiberFunction p =
              multiply(FiberFunction::coordinate(k, a, kind), FiberFunction::coordinate(k, b, kind));
          const double want = oracle::sphere_mean(k, [&](const double* x) { return x[a] * x[b]; });
          CHECK(fiber_average(p) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
          CHECK(fiber_average(p) == doctest::Approx(a == b ? 1.0 / k : 0.0).epsilon(1e-14).scale(1.0));
        }
    CHECK(fiber_integral(FiberFunction::constant(3, 2.0)) == doctest::Approx(8 * oracle::pi));
  }

  TEST_CASE("gradient inner product of coordinates") {
    for (auto [k, kind] : {std::pair{2, BasisKind::Fourier}, {3, BasisKind::SphericalHarmonic}})
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          const FiberFunction g =
              gradient_inner(FiberFunction::coordinate(k, a, kind), FiberFunction::coordinate(k, b, kind));
          std::vector<double> p(k);
          p[0] = 0.3;
          p[1] = k == 2 ? std::sqrt(1 - 0.09) : 0.5;
          if (k == 3) p[2] = std::sqrt(1 - 0.09 - 0.25);
          CHECK(g.value(p) == doctest::Approx((a == b) - p[a] * p[b]).epsilon(1e-13).scale(1.0));
        }
  }

  TEST_CASE("quadratic and linear forms") {
    Eigen::MatrixXd q(3, 3);
    q << 1, 2, 0, 2, -1, 0.5, 0, 0.5, 3;
    const FiberFunction f = FiberFunction::quadratic_form(3, BasisKind::SphericalHarmonic, q);
    const std::vector<double> p{0.48, 0.6, 0.64};
    double want = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) want += q(a, b) * p[a] * p[b];
    CHECK(f.value(p) == doctest::Approx(want).epsilon(1e-13));
    CHECK(f.average() == doctest::Approx(q.trace() / 3).epsilon(1e-14));
    CHECK_THROWS_AS(FiberFunction::quadratic_form(4, BasisKind::Zonal, Eigen::MatrixXd::Ones(4, 4)), UnsupportedBasis);
    Eigen::MatrixXd axi = Eigen::MatrixXd::Identity(4, 4);
    axi(0, 0) = 3.0;
    const FiberFunction z = FiberFunction::quadratic_form(4, BasisKind::Zonal, axi);
    CHECK(z.average() == doctest::Approx(6.0 / 4).epsilon(1e-14));
    CHECK(FiberFunction::quadratic_form(1, BasisKind::Constant, Eigen::MatrixXd::Constant(1, 1, 2.5)).average() == 2.5);
  }

  TEST_CASE("zonal data converts to the full basis") {
    const FiberFunction z = FiberFunction::basis_element(3, BasisKind::Zonal, 2, 0);
    const FiberFunction s = z.with_kind(BasisKind::SphericalHarmonic);
    for (const auto& p : {std::vector<double>{0.2, 0.9, std::sqrt(1 - 0.04 - 0.81)}, std::vector<double>{1, 0, 0}})
      CHECK(s.value(p) == doctest::Approx(z.value(p)).epsilon(1e-13));
  }

  TEST_CASE("parity classes") {
    const int k = 3;
    const auto kind = BasisKind::SphericalHarmonic;
    const FiberFunction c0 = FiberFunction::coordinate(k, 0, kind), c1 = FiberFunction::coordinate(k, 1, kind);
    const std::vector<FiberFunction> good{FiberFunction::constant(k, 1), c0, multiply(c0, c1)};
    CHECK(parity_degree_check(good, 1e-12).ok);
    const std::vector<FiberFunction> bad{FiberFunction::constant(k, 1), multiply(c0, c1)};
    const auto rep = parity_degree_check(bad, 1e-12);
    CHECK_FALSE(rep.ok);
    CHECK(rep.violations[1] > 0.1);
  }
}
