#include <doctest.h>

#include "jets.hpp"
#include "syvol/geometry.hpp"

using namespace syvol;
using namespace syvol::geometry;
using fiber::FiberFunction;

TEST_SUITE("geometry") {
  TEST_CASE("round sphere curvature anchors") {
    for (int d : {3, 4, 5}) {
      const Eigen::MatrixXd g = Eigen::MatrixXd::Identity(d, d);
      MetricJet jet = testjets::equatorial_jet(2, d - 2);
      CHECK((jet.ricci() - (d - 1) * g).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(jet.scalar_curvature() == doctest::Approx(d * (d - 1)));
      CHECK((jet.schouten() - 0.5 * g).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(jet.R(0, 1, 1, 0) == 1.0);
      CHECK(jet.R(0, 1, 0, 1) == -1.0);
    }
  }

  TEST_CASE("random curvature has the algebraic symmetries") {
    std::mt19937_64 rng(2);
    const Curvature R = testjets::random_curvature(5, rng);
    double worst = 0;
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b)
        for (int c = 0; c < 5; ++c)
          for (int d = 0; d < 5; ++d) {
            worst = std::max(worst, std::abs(R(a, b, c, d) + R(b, a, c, d)));
            worst = std::max(worst, std::abs(R(a, b, c, d) - R(c, d, a, b)));
            worst = std::max(worst, std::abs(R(a, b, c, d) + R(b, c, a, d) + R(c, a, b, d)));
          }
    CHECK(worst < 1e-13);
  }

  TEST_CASE("equatorial S^2 in S^4") {
    const auto pt = fermi_point(testjets::equatorial_jet(2, 2));
    CHECK(pt.gamma1.norm() < 1e-15);
    CHECK(pt.H2 == 0.0);
    CHECK(pt.Lo2 == 0.0);
    CHECK(pt.R_h == doctest::Approx(2.0));
    CHECK(pt.trP_tan == doctest::Approx(1.0));
    CHECK(pt.R_g_point == doctest::Approx(12.0));
    // -2 Ric_NN + (4/3) S with Ric_NN = 3 I and S = (k - 1) I.
    CHECK(pt.gamma2_combo.average() == doctest::Approx(-6.0 + 4.0 / 3.0));
    CHECK(pt.gamma2_combo.effective_degree(1e-14) == 0);
  }

  TEST_CASE("flat ambient, totally geodesic") {
    MetricJet jet;
    jet.n = 2;
    jet.k = 3;
    jet.kind = fiber::BasisKind::SphericalHarmonic;
    jet.h0 = Eigen::MatrixXd::Identity(2, 2);
    jet.L.assign(3, Eigen::MatrixXd::Zero(2, 2));
    const auto pt = fermi_point(jet);
    CHECK(pt.gamma1.norm() == 0.0);
    CHECK(pt.gamma2_combo.norm() == 0.0);
    CHECK(trace_b2(jet).norm() == 0.0);
    CHECK(pt.R_g_point == 0.0);
  }

  TEST_CASE("circle in flat R^3") {
    const double rho = 1.7;
    MetricJet jet;
    jet.n = 1;
    jet.k = 2;
    jet.kind = fiber::BasisKind::Fourier;
    jet.h0 = Eigen::MatrixXd::Identity(1, 1);
    jet.L = {Eigen::MatrixXd::Constant(1, 1, 1 / rho), Eigen::MatrixXd::Zero(1, 1)};
    const FiberFunction g = gamma1(jet);
    CHECK(std::abs(g.average()) < 1e-15);
    CHECK(fiber::multiply(g, g).average() == doctest::Approx(4.0 / (rho * rho) / 2));
  }

  TEST_CASE("gamma_1 is pure degree one") {
    for (int k : {2, 3}) {
      const auto jet = testjets::random_jet(2, k, 40 + k);
      const auto g = gamma1(jet);
      CHECK(std::abs(g.average()) < 1e-14);
      CHECK(g.effective_degree(1e-14) == 1);
    }
  }

  TEST_CASE("closed-form combination agrees with the metric-block route") {
    for (int trial = 0; trial < 10; ++trial) {
      const int k = 2 + trial % 2;
      const auto jet = testjets::random_jet(2, k, 100 + trial);
      const FiberFunction a = gamma2_combo(jet), b = gamma2_combo_from_blocks(jet);
      CHECK((a - b).norm() < 1e-10 * std::max(1.0, a.norm()));
      // Average from explicit contractions.
      const Eigen::MatrixXd ric = jet.ricci();
      double ric_nn = 0, rabba = 0;
      for (int p = 0; p < k; ++p) {
        ric_nn += ric(2 + p, 2 + p);
        for (int q = 0; q < k; ++q) rabba += jet.R(2 + p, 2 + q, 2 + q, 2 + p);
      }
      const double want = -2.0 / k * ric_nn + 4.0 / (3.0 * k) * rabba - 2.0 / k * jet.norm_L2();
      CHECK(a.average() == doctest::Approx(want).epsilon(1e-10));
      CHECK(gamma2_combo_average(jet) == doctest::Approx(want).epsilon(1e-12));
    }
  }

  TEST_CASE("block h1 is -2 c_a L^a") {
    const auto jet = testjets::random_jet(2, 3, 9);
    const auto h1 = block_h1(jet);
    const std::vector<double> p{0.48, 0.6, 0.64};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double want = 0;
        for (int a = 0; a < 3; ++a) want += -2 * p[a] * jet.L[a](i, j);
        CHECK(h1[i][j].value(p) == doctest::Approx(want).epsilon(1e-13));
      }
  }

  TEST_CASE("fiber block average vanishes with the sectional contraction") {
    auto jet = testjets::equatorial_jet(2, 3);
    CHECK(std::abs(trace_b2(jet).average()) > 0.1);
    jet.R = Curvature(5);
    CHECK(trace_b2(jet).norm() == 0.0);
  }

  TEST_CASE("Gauss equation") {
    // Unit S^2 in flat R^3 at a point: h0 = I, L = I.
    MetricJet jet;
    jet.n = 2;
    jet.k = 1;
    jet.h0 = Eigen::MatrixXd::Identity(2, 2);
    jet.L = {Eigen::MatrixXd::Identity(2, 2)};
    CHECK(jet.gauss_scalar() == doctest::Approx(2.0));
    const auto pt = fermi_point(jet);
    CHECK(pt.Lo2 == doctest::Approx(0.0).scale(1.0));
    CHECK(pt.gamma1.empty());
  }

  TEST_CASE("validation") {
    MetricJet jet = testjets::equatorial_jet(2, 2);
    jet.h0(0, 0) = 0.0;
    CHECK_THROWS_AS(fermi_point(jet), DegenerateMetric);
    jet = testjets::equatorial_jet(2, 2);
    jet.L.pop_back();
    CHECK_THROWS_AS(validate(jet), std::invalid_argument);
  }
}
