#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gpwh/errors.hpp"
#include "gpwh/fixtures.hpp"
#include "gpwh/hilbert.hpp"
#include "oracles.hpp"

using namespace gpwh;

namespace {

ExpoVector ev(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return {v};
}

std::vector<WeakHaagerupVertexData> all_data() {
  return {fixtures::d0(), fixtures::d1(), fixtures::d2(), fixtures::d2(0.7, 0.3)};
}

Eigen::VectorXd random_in_ball(std::mt19937_64& rng, Eigen::Index dim, double radius) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = g(rng);
  return v.normalized() * radius * u(rng);
}

}  // namespace

TEST(Expo, ClosedFormExamples) {
  EXPECT_DOUBLE_EQ(expo_inner(ev({0, 0}), ev({0, 0})), 1.0);
  EXPECT_NEAR(expo_inner(ev({1, 0}), ev({0, 0})), std::exp(-1.0), 1e-16);
  EXPECT_NEAR(expo_inner(ev({1, 0}), ev({0, 1})), std::exp(-2.0), 1e-16);
  EXPECT_THROW(expo_inner(ev({1}), ev({0, 1})), std::invalid_argument);
}

TEST(Expo, TruncatedExamples) {
  EXPECT_DOUBLE_EQ(truncated_expo_inner(ev({0, 0}), ev({0, 0}), 0), 1.0);
  EXPECT_NEAR(truncated_expo_inner(ev({1, 0}), ev({0, 0}), 12), std::exp(-1.0), 1e-8);
  EXPECT_NEAR(truncated_expo_inner(ev({1, 0}), ev({0, 1}), 0), std::exp(-2.0), 1e-16);
}

TEST(Expo, TruncationMatchesExplicitTensors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::VectorXd a = random_in_ball(rng, 3, 1.0);
    const Eigen::VectorXd b = random_in_ball(rng, 3, 1.0);
    for (unsigned order : {0u, 1u, 3u, 6u}) {
      EXPECT_NEAR(truncated_expo_inner({a}, {b}, order), oracle::fock_expo_inner(a, b, order),
                  1e-13);
    }
  }
}

TEST(Expo, ExplicitTensorsConvergeToClosedForm) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd a = random_in_ball(rng, 2, 0.5);
    const Eigen::VectorXd b = random_in_ball(rng, 2, 0.5);
    EXPECT_NEAR(oracle::fock_expo_inner(a, b, 14), expo_inner({a}, {b}), 1e-14);
  }
}

TEST(Expo, TruncationErrorShrinksWithOrder) {
  const ExpoVector a = ev({0.8, 0.1}), b = ev({0.6, -0.5});
  double prev = INFINITY;
  for (unsigned order = 0; order <= 16; ++order) {
    const double err = std::abs(truncated_expo_inner(a, b, order) - expo_inner(a, b));
    EXPECT_LE(err, prev);
    prev = err;
  }
}

TEST(Expo, OrderTwelveOnSeededUnitBallPairs) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const ExpoVector a{random_in_ball(rng, 4, 1.0)}, b{random_in_ball(rng, 4, 1.0)};
    EXPECT_NEAR(truncated_expo_inner(a, b, 12), expo_inner(a, b), 1e-8);
  }
}

TEST(Expo, OrderTwelveWorstCaseOnUnitSphere) {
  // For a = b with |a| = 1 the tail is e^{-2} sum_{k>12} 2^k/k!.
  const ExpoVector a = ev({1.0, 0.0});
  double tail = 0.0, term = 1.0;
  for (int k = 1; k <= 40; ++k) {
    term *= 2.0 / k;
    if (k > 12) tail += term;
  }
  EXPECT_NEAR(expo_inner(a, a) - truncated_expo_inner(a, a, 12), std::exp(-2.0) * tail, 1e-15);
  EXPECT_GT(std::exp(-2.0) * tail, 1e-8);
}

TEST(AlphaBeta, Examples) {
  for (const auto& d : all_data()) {
    for (int n : {1, 3, 10}) {
      for (Element x = 0; x < d.order(); ++x) {
        EXPECT_NEAR(alpha_beta_S_inner(d, n, x, x), 1.0, 1e-12);
      }
    }
  }
  EXPECT_NEAR(alpha_beta_S_inner(fixtures::d1(), 1, 0, 1), std::exp(0.5), 1e-14);
  EXPECT_DOUBLE_EQ(alpha_beta_S_inner(fixtures::d0(), 4, 0, 1), 1.0);
  const auto d = fixtures::d1();
  const std::vector<ExpoTerm> a{alpha_s(d, 2, 0)}, b{beta_s(d, 2, 1)};
  EXPECT_NEAR(combination_inner(a, b), alpha_beta_S_inner(d, 2, 0, 1), 1e-14);
}

TEST(Theta, D0Arithmetic) {
  const double root = std::sqrt(0.02);
  const double avg2 = 4.0 / ((2.0 + root) * (2.0 + root));
  const double dval = std::sqrt((1.0 - avg2) / 2.0);
  EXPECT_NEAR(d_value(fixtures::d0(), 1, 0.01, 1), dval, 1e-15);
  EXPECT_NEAR(dval, 0.25271, 5e-6);
  const VertexSlotVector t = make_theta(fixtures::d0(), 0, 1, 0.01, 1);
  EXPECT_NEAR(slot_inner(t, t), 1.0, 1e-14);
  EXPECT_NEAR(t.blocks[0], dval, 1e-15);
  EXPECT_EQ(t.blocks[2], 0.0);
  const VertexSlotVector t1 = make_theta(fixtures::d0(), 0, 1, 0.01, 0);
  EXPECT_EQ(t1.blocks[0], 0.0);
  EXPECT_NEAR(t1.blocks[2], dval, 1e-15);
  const double c = (1.0 - 2.0 / (2.0 + root)) / dval;
  EXPECT_NEAR(c_alpha(fixtures::d0(), 1, 0.01, 1, 1), c, 1e-14);
}

TEST(Theta, SmallEpsDrivesDToZero) {
  double prev = INFINITY;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double d = d_value(fixtures::d0(), 1, eps, 1);
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 1e-2);
  EXPECT_THROW(c_alpha(fixtures::d0(), 1, 1e-60, 1, 1), NumericalError);
}

TEST(Theta, TooSmallNIsRejected) {
  EXPECT_THROW(d_value(fixtures::d1(), 1, 0.01, 0), NumericalError);
  EXPECT_NO_THROW(d_value(fixtures::d1(), 4, 0.01, 0));
}

TEST(SlotVectors, VertexIdentities) {
  for (const auto& d : all_data()) {
    for (int n : {5, 10, 101}) {
      for (double eps : {0.01, 0.1}) {
        for (Element x = 0; x < d.order(); ++x) {
          const auto t = make_theta(d, 0, n, eps, x);
          const auto a = make_alpha_tail(d, 0, n, eps, x);
          const auto b = make_beta_tail(d, 0, n, eps, x);
          EXPECT_NEAR(slot_inner(t, t), 1.0, 1e-12);
          EXPECT_NEAR(slot_inner(a, b), 1.0, 1e-12);
          EXPECT_NEAR(slot_inner(a, t), 1.0, 1e-12);
          EXPECT_NEAR(slot_inner(t, b), 1.0, 1e-12);
          const auto avg = average_s(d, n, eps, x);
          const std::vector<ExpoTerm> al{alpha_s(d, n, x)}, be{beta_s(d, n, x)};
          const double dx = d_value(d, n, eps, x);
          EXPECT_NEAR(combination_inner(al, avg) + c_alpha(d, n, eps, x, x) * dx, 1.0, 1e-12);
          EXPECT_NEAR(combination_inner(avg, be) + c_beta(d, n, eps, x, x) * dx, 1.0, 1e-12);
        }
      }
    }
  }
}

TEST(SlotVectors, MixedPairingsReduceToAlphaBeta) {
  for (const auto& d : all_data()) {
    const int n = 10;
    const double eps = 0.01;
    const auto vac = make_theta(d, 0, n, eps, 0);
    for (Element x = 0; x < d.order(); ++x) {
      EXPECT_NEAR(slot_inner(make_alpha_tail(d, 0, n, eps, x), vac),
                  alpha_beta_S_inner(d, n, x, 0), 1e-12);
      EXPECT_NEAR(slot_inner(vac, make_beta_tail(d, 0, n, eps, x)),
                  alpha_beta_S_inner(d, n, 0, x), 1e-12);
      for (Element y = 0; y < d.order(); ++y) {
        const auto ax = make_alpha_tail(d, 0, n, eps, x);
        const auto by = make_beta_tail(d, 0, n, eps, y);
        EXPECT_NEAR(slot_inner(ax, by), alpha_beta_S_inner(d, n, x, y), 1e-12);
        EXPECT_NEAR(slot_inner(ax, by), slot_inner(by, ax), 1e-15);
        EXPECT_NEAR(slot_inner(ax, by), slot_inner(make_alpha_tail(d, 0, n, eps, y),
                                                   make_beta_tail(d, 0, n, eps, x)),
                    1e-12);
        const auto tx = make_theta(d, 0, n, eps, x), ty = make_theta(d, 0, n, eps, y);
        EXPECT_NEAR(slot_inner(tx, ty), slot_inner(ty, tx), 1e-15);
      }
    }
  }
  // D1 at n = 10: e^{1/10} e^{-|S(s)+S(1)|^2/10}.
  const auto d = fixtures::d1();
  EXPECT_NEAR(slot_inner(make_alpha_tail(d, 0, 10, 0.01, 1), make_theta(d, 0, 10, 0.01, 0)),
              std::exp(0.1 - 0.05), 1e-14);
}

TEST(SlotVectors, MismatchesThrow) {
  const auto d = fixtures::d1();
  EXPECT_THROW(slot_inner(make_theta(d, 0, 10, 0.01, 0), make_theta(d, 1, 10, 0.01, 0)),
               std::invalid_argument);
  EXPECT_THROW(slot_inner(make_theta(d, 0, 10, 0.01, 0), make_theta(d, 0, 11, 0.01, 0)),
               std::invalid_argument);
}

TEST(SlotVectors, TailNormBound) {
  const double eps = 0.01;
  for (const auto& d : all_data()) {
    const std::vector<WeakHaagerupVertexData> one{d};
    int n = 1;
    while (std::exp(d.phi_identity() / n) > 1.0 + eps) ++n;
    const TailConstants t = measure_tail_constants(one, n, eps);
    EXPECT_NEAR(t.a_measured, t.sup_c / std::pow(eps, 0.25), 1e-15);
    EXPECT_NEAR(t.b_measured, 1.0 * std::sqrt(eps) + 2.0 * t.a_measured * t.a_measured, 1e-12);
    for (Element x = 0; x < d.order(); ++x) {
      const auto a = make_alpha_tail(d, 0, n, eps, x);
      const auto b = make_beta_tail(d, 0, n, eps, x);
      EXPECT_LE(slot_inner(a, a), 1.0 + eps + 2.0 * t.sup_c * t.sup_c + 1e-12);
      EXPECT_LE(slot_inner(b, b), 1.0 + eps + 2.0 * t.sup_c * t.sup_c + 1e-12);
    }
  }
}
