#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gaussint/error.hpp"
#include "gaussint/poly.hpp"

namespace gaussint {
namespace {

Polynomial x1(int dim = 1) { return Polynomial::variable(dim, 0); }

Polynomial random_poly(int dim, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> nterms(1, 6);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::vector<Monomial> terms;
  const int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Exponents e(static_cast<std::size_t>(dim), 0);
    int budget = deg(rng);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    while (budget-- > 0) ++e[static_cast<std::size_t>(pick(rng))];
    terms.push_back({e, coef(rng)});
  }
  return Polynomial(dim, terms);
}

TEST(Poly, AdditiveInverseIsZero) {
  const Polynomial p = x1() + (-x1());
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
}

TEST(Poly, LikeTermsMerge) {
  const Polynomial sq = x1() * x1();
  const Polynomial p = sq + sq;
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient({2}), 2.0);
}

TEST(Poly, BistableDynamicsExpansion) {
  const double dt = 0.01;
  const Polynomial x = x1();
  const Polynomial phi = x + 5.0 * dt * x * (Polynomial::constant(1, 1.0) - x * x);
  ASSERT_EQ(phi.size(), 2u);
  EXPECT_NEAR(phi.coefficient({1}), 1.05, 1e-15);
  EXPECT_NEAR(phi.coefficient({3}), -0.05, 1e-15);
  const double at_one[] = {1.0};
  EXPECT_NEAR(evaluate(phi, at_one), 1.0, 1e-15);
  EXPECT_EQ(to_string(phi), "1.05*x1 - 0.05*x1^3");
}

TEST(Poly, ProductOfDistinctVariables) {
  const Polynomial p = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient({1, 1}), 1.0);
}

TEST(Poly, BinomialSquare) {
  const Polynomial p = power(x1() - 0.05, 2);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_NEAR(p.coefficient({2}), 1.0, 1e-15);
  EXPECT_NEAR(p.coefficient({1}), -0.1, 1e-15);
  EXPECT_NEAR(p.coefficient({0}), 0.0025, 1e-15);
}

TEST(Poly, MultiplicativeIdentity) {
  std::mt19937_64 rng(7);
  for (int dim = 1; dim <= 3; ++dim) {
    const Polynomial p = random_poly(dim, 5, rng);
    EXPECT_EQ(Polynomial::constant(dim, 1.0) * p, p);
  }
}

TEST(Poly, EvaluateMonomialAndZero) {
  const Polynomial p = Polynomial::monomial({2, 1});
  const double at[] = {2.0, 3.0};
  EXPECT_EQ(evaluate(p, at), 12.0);
  EXPECT_EQ(evaluate(Polynomial(2), at), 0.0);
}

TEST(Poly, ShiftExamples) {
  const double one[] = {1.0};
  const Polynomial q = shifted(x1() * x1(), one);
  EXPECT_EQ(q.coefficient({2}), 1.0);
  EXPECT_EQ(q.coefficient({1}), 2.0);
  EXPECT_EQ(q.coefficient({0}), 1.0);

  const double zero[] = {0.0};
  const Polynomial p = 1.05 * x1() - 0.05 * power(x1(), 3);
  EXPECT_EQ(shifted(p, zero), p);

  const double c[] = {-0.05};
  const Polynomial cube = shifted(power(x1(), 3), c);
  EXPECT_NEAR(cube.coefficient({3}), 1.0, 1e-15);
  EXPECT_NEAR(cube.coefficient({2}), -0.15, 1e-15);
  EXPECT_NEAR(cube.coefficient({1}), 0.0075, 1e-15);
  EXPECT_NEAR(cube.coefficient({0}), -0.000125, 1e-18);
}

TEST(Poly, DimensionMismatchThrows) {
  const Polynomial a = Polynomial::variable(1, 0);
  const Polynomial b = Polynomial::variable(2, 0);
  EXPECT_THROW(a + b, DimensionError);
  EXPECT_THROW(a * b, DimensionError);
  const double pt[] = {1.0, 2.0};
  EXPECT_THROW(evaluate(a, pt), DimensionError);
  EXPECT_THROW(shifted(a, pt), DimensionError);
  EXPECT_THROW(Polynomial::monomial({1, -1}), DimensionError);
}

TEST(Poly, DerivativeOfCubic) {
  const Polynomial p = 1.05 * x1() - 0.05 * power(x1(), 3);
  const Polynomial d = derivative(p, 0);
  EXPECT_NEAR(d.coefficient({0}), 1.05, 1e-15);
  EXPECT_NEAR(d.coefficient({2}), -0.15, 1e-15);
}

TEST(PolyProperty, ProductEvaluatesToProductOfValues) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dims(1, 4);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = dims(rng);
    const Polynomial a = random_poly(dim, 6, rng);
    const Polynomial b = random_poly(dim, 6, rng);
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (auto& v : x) v = coord(rng);
    const double expected = evaluate(a, x) * evaluate(b, x);
    const double got = evaluate(a * b, x);
    // Relative to the magnitude of the summands to allow for cancellation.
    double scale = 0.0;
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        double t = std::abs(ca * cb);
        for (std::size_t i = 0; i < x.size(); ++i) t *= std::pow(std::abs(x[i]), ea[i] + eb[i]);
        scale += t;
      }
    EXPECT_NEAR(got, expected, 1e-12 * std::max(scale, 1e-300)) << to_string(a) << " * " << to_string(b);
  }
}

TEST(PolyProperty, ShiftRoundTripIsExactForDyadicOffsets) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> quarter(-8, 8);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + trial % 3;
    // Small-integer coefficients and dyadic offsets keep every product exact.
    std::vector<Monomial> terms;
    for (int t = 0; t < 4; ++t) {
      Exponents e(static_cast<std::size_t>(dim));
      for (auto& v : e) v = std::abs(small(rng)) % 4;
      terms.push_back({e, static_cast<double>(small(rng))});
    }
    const Polynomial p(dim, terms);
    std::vector<double> c(static_cast<std::size_t>(dim)), minus(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = quarter(rng) / 4.0;
      minus[i] = -c[i];
    }
    EXPECT_EQ(shifted(shifted(p, c), minus), p) << to_string(p);
  }
}

TEST(PolyProperty, ShiftRoundTripGeneralOffsets) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + trial % 4;
    const Polynomial p = random_poly(dim, 6, rng);
    std::vector<double> c(static_cast<std::size_t>(dim)), minus(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = off(rng);
      minus[i] = -c[i];
    }
    const Polynomial back = shifted(shifted(p, c), minus);
    for (const auto& [e, coef] : back.terms()) EXPECT_NEAR(coef, p.coefficient(e), 1e-11);
    for (const auto& [e, coef] : p.terms()) EXPECT_NEAR(back.coefficient(e), coef, 1e-11);
  }
}

TEST(PolyProperty, CanonicalFormIndependentOfConstructionOrder) {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  const Polynomial a = (x + y) * (x + y) * (x - 2.0 * y);
  const Polynomial b = (x - 2.0 * y) * ((y + x) * (y + x));
  const Polynomial c = x * x * x - 3.0 * x * y * y - 2.0 * y * y * y;
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

}  // namespace
}  // namespace gaussint
