#include <cmath>

#include <gtest/gtest.h>

#include "gaussint/error.hpp"
#include "gaussint/quadrature.hpp"
#include "support/oracle.hpp"

namespace gaussint {
namespace {

TEST(GaussHermite, ThreePointRule) {
  const UnitRule r = gauss_hermite_1d(3);
  EXPECT_NEAR(r.points(0, 0), -std::sqrt(3.0), 1e-15);
  EXPECT_EQ(r.points(0, 1), 0.0);
  EXPECT_NEAR(r.points(0, 2), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(r.weights[1], 2.0 / 3.0, 1e-15);
}

TEST(GaussHermite, AgreesWithNewtonOracleNodes) {
  for (int n : {2, 4, 5, 9, 16}) {
    const UnitRule r = gauss_hermite_1d(n);
    std::vector<double> t, w;
    testing::physicists_gauss_hermite(n, t, w);
    // Oracle nodes are descending, in physicists' scaling.
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(r.points(0, i), std::sqrt(2.0) * t[static_cast<std::size_t>(n - 1 - i)], 1e-12);
      EXPECT_NEAR(r.weights[i], w[static_cast<std::size_t>(n - 1 - i)] / std::sqrt(M_PI), 1e-13);
    }
  }
}

TEST(GaussHermite, ExactForDegreeTwoNMinusOne) {
  for (int n = 1; n <= 6; ++n) {
    const UnitRule r = gauss_hermite_1d(n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double sum = 0.0;
      for (int j = 0; j < r.size(); ++j) sum += r.weights[j] * std::pow(r.points(0, j), k);
      double want = 0.0;
      if (k % 2 == 0) {
        want = 1.0;
        for (int i = k - 1; i > 1; i -= 2) want *= i;
      }
      EXPECT_NEAR(sum, want, 1e-12 * std::max(1.0, want)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(UnitRules, CubatureOneDimension) {
  const UnitRule r = cubature_rule(1);
  EXPECT_EQ(r.points(0, 0), 1.0);
  EXPECT_EQ(r.points(0, 1), -1.0);
  EXPECT_EQ(r.weights[0], 0.5);
  EXPECT_EQ(r.weights[1], 0.5);
}

TEST(UnitRules, UnscentedKappaTwoEqualsThreePointGaussHermite) {
  const UnitRule u = unscented_rule(1, 2.0);
  const UnitRule g = gauss_hermite_1d(3);
  // Bit-identical, in the same order.
  EXPECT_EQ(u.points(0, 2), std::sqrt(3.0));
  EXPECT_EQ(u.weights[1], 2.0 / 3.0);
  EXPECT_EQ(u.weights[0], 1.0 / 6.0);
  EXPECT_TRUE(u.points.cwiseEqual(g.points).all());
  EXPECT_TRUE(u.weights.cwiseEqual(g.weights).all());
}

TEST(UnitRules, WeightsSumToOneAndMatchSecondMoments) {
  for (int n = 1; n <= 4; ++n) {
    for (const UnitRule& r : {unscented_rule(n, 3.0 - n + 0.5), cubature_rule(n), gauss_hermite_rule(n, 3)}) {
      EXPECT_NEAR(r.weights.sum(), 1.0, 1e-14);
      const Eigen::VectorXd mean = r.points * r.weights;
      const Eigen::MatrixXd cov = r.points * r.weights.asDiagonal() * r.points.transpose();
      EXPECT_LT(mean.norm(), 1e-14);
      EXPECT_LT((cov - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-13);
    }
  }
}

TEST(UnitRules, Errors) {
  EXPECT_THROW(unscented_rule(2, -2.0), NumericalError);
  EXPECT_THROW(gauss_hermite_1d(0), DimensionError);
  EXPECT_THROW(cubature_rule(0), DimensionError);
}

}  // namespace
}  // namespace gaussint
