#include "circent/error.hpp"
#include "circent/io.hpp"
#include "circent/suite.hpp"

#include <gtest/gtest.h>

using namespace circent;

TEST(Suite, SmallCorpusPasses) {
  SuiteConfig c;
  c.degree_min = 1;
  c.degree_max = 12;
  c.count = 20;
  const auto r = run_suite(c);
  EXPECT_EQ(r.summary.instances, 240);
  EXPECT_EQ(r.summary.failures, 0);
  EXPECT_EQ(r.summary.input_errors, 0);
  // Degree one is an equality case, so only rounding separates the gap from 0.
  EXPECT_GE(r.summary.min_main_gap, -1e-12);
  c.degree_min = 2;
  EXPECT_GT(run_suite(c).summary.min_main_gap, 0.0);
  EXPECT_GE(r.summary.min_schur_slack, -1e-12);
}

TEST(Suite, DeterministicAcrossThreadCounts) {
  SuiteConfig a;
  a.degree_min = 1;
  a.degree_max = 8;
  a.count = 10;
  a.threads = 1;
  SuiteConfig b = a;
  b.threads = 3;
  EXPECT_EQ(suite_to_csv(run_suite(a)), suite_to_csv(run_suite(b)));
}

TEST(Suite, InjectedOffCircleIsInputError) {
  SuiteConfig c;
  c.degree_min = 3;
  c.degree_max = 5;
  c.count = 10;
  c.inject_off_circle_every = 7;
  const auto r = run_suite(c);
  EXPECT_EQ(r.summary.input_errors, 4);
  EXPECT_EQ(r.summary.failures, 0);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.rows[6].status, "input_error");
  EXPECT_EQ(r.rows[6].detail, "RootsOffCircle");
}

TEST(Suite, CrossCheck) {
  SuiteConfig c;
  c.degree_min = 1;
  c.degree_max = 6;
  c.count = 5;
  c.cross_check = true;
  const auto r = run_suite(c);
  EXPECT_EQ(r.summary.failures, 0);
  EXPECT_LT(r.summary.max_route_residual, 1e-7);
}

TEST(Suite, InvalidConfig) {
  SuiteConfig c;
  c.degree_min = 0;
  EXPECT_THROW(run_suite(c), Error);
  c.degree_min = 3;
  c.degree_max = 2;
  EXPECT_THROW(run_suite(c), Error);
}
