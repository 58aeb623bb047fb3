#include "circent/error.hpp"
#include "circent/extremal.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace circent;
using circent::oracle::kPi;

TEST(Objective, EquallySpacedIsExtremal) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<double> a;
    for (int k = 0; k < n; ++k) a.push_back((kPi + 2 * kPi * k) / n);
    EXPECT_NEAR(objective(a), 1.0 - std::log(2.0), 1e-12) << n;
  }
  EXPECT_NEAR(objective({1.234}), 1.0 - std::log(2.0), 1e-14);
}

TEST(Objective, DoubleAngle) {
  EXPECT_NEAR(objective({0.7, 0.7}), 14.0 / 6.0 - std::log(6.0), 1e-12);
  EXPECT_GT(objective({0.7, 0.7}), extremal_entropy_value());
}

TEST(Objective, GaugeInvarianceProperty) {
  Rng rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a;
    for (int k = rng.integer(1, 12); k > 0; --k) a.push_back(rng.uniform(0, 2 * kPi));
    const double base = objective(a);
    auto shifted = a;
    const double s = rng.uniform(-3, 3);
    for (auto& t : shifted) t += s;
    EXPECT_NEAR(objective(shifted), base, 1e-10);
    EXPECT_NEAR(objective(a, cplx{rng.uniform(0.1, 5), rng.uniform(-5, 5)}), base, 1e-10);
    EXPECT_GE(base, extremal_entropy_value() - 1e-9);
  }
}

TEST(Objective, EmptyRejected) { EXPECT_THROW(objective({}), Error); }

TEST(Minimize, DegreeOne) {
  const auto r = minimize(1, 1);
  EXPECT_NEAR(r.gap, 0.0, 1e-14);
  EXPECT_TRUE(r.converged);
}

TEST(Minimize, DegreeTwo) {
  const auto r = minimize(2, 8);
  EXPECT_LT(std::abs(r.gap), 1e-6);
  EXPECT_LT(r.angle_gap_deviation, 1e-4);
  EXPECT_EQ(r.lower_bound_violations, 0);
  EXPECT_EQ(r.trace.size(), 8u);
  EXPECT_EQ(r.angles[0], 0.0);
}

TEST(Minimize, Deterministic) {
  SearchConfig a, b;
  a.threads = 1;
  b.threads = 4;
  const auto x = minimize(4, 6, a);
  const auto y = minimize(4, 6, b);
  EXPECT_EQ(x.angles, y.angles);
  EXPECT_EQ(x.entropy, y.entropy);
  EXPECT_EQ(x.best_restart, y.best_restart);
}

TEST(Objective, ClusterIsLocalMinimum) {
  const double at = objective({0.0, 0.0, 0.0});
  for (double t : {1e-3, 0.05, 0.3})
    EXPECT_GT(objective({0.0, t, -t}), at);
  EXPECT_LT(objective({0.0, 2 * kPi / 3, 4 * kPi / 3}), at);
}

TEST(Minimize, EscapesClusterSingleRestart) {
  for (int n = 3; n <= 8; ++n) {
    const auto r = minimize(n, 1);
    EXPECT_NEAR(r.gap, 0.0, 1e-6) << "n = " << n;
    EXPECT_LT(r.angle_gap_deviation, 1e-4) << "n = " << n;
  }
}

TEST(Minimize, InvalidArguments) {
  EXPECT_THROW(minimize(0, 1), Error);
  EXPECT_THROW(minimize(3, 0), Error);
}

TEST(AngleGap, Deviation) {
  EXPECT_NEAR(angle_gap_deviation({0.0, kPi}), 0.0, 1e-15);
  EXPECT_NEAR(angle_gap_deviation({0.0, 0.5 * kPi}), 0.5 * kPi, 1e-15);
}

TEST(Coalescence, DoubleZero) {
  const auto t = coalescence_experiment(CirclePoly::from_roots({1.0, 1.0}, 1.0), dyadic_schedule(1, 20));
  EXPECT_NEAR(t.entropy, 14.0, 1e-10);
  EXPECT_NEAR(t.jensen, 7.0, 1e-10);
  EXPECT_NEAR(t.polar, 7.0, 1e-10);
  ASSERT_EQ(t.rows.size(), 20u);
  EXPECT_LT(t.rows.back().max_deviation(), 1e-4);
  EXPECT_LT(t.rows.back().max_deviation(), t.rows.front().max_deviation());
}

TEST(Coalescence, TripleZero) {
  const auto p = CirclePoly::from_roots(std::vector<cplx>(3, std::polar(1.0, 2.0)), 1.0);
  const auto t = coalescence_experiment(p, dyadic_schedule(1, 20), 5);
  EXPECT_LT(t.rows.back().max_deviation(), 1e-4);
}

TEST(Coalescence, SimpleZerosFlat) {
  Rng rng(131);
  const auto p = oracle::random_simple(rng, 6, 0.1);
  const auto t = coalescence_experiment(p, dyadic_schedule(10, 20));
  for (const auto& row : t.rows) EXPECT_LT(row.max_deviation(), 10.0 * row.epsilon);
}

TEST(Coalescence, ScheduleValidation) {
  const auto p = CirclePoly::from_roots({1.0, 1.0}, 1.0);
  EXPECT_THROW(coalescence_experiment(p, {}), Error);
  EXPECT_THROW(coalescence_experiment(p, {0.1, 0.2}), Error);
  EXPECT_THROW(coalescence_experiment(p, {0.1, 0.0}), Error);
}
