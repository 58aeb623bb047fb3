#pragma once

// Seeded random corpora checked against every inequality and identity.

#include "circent/entropy.hpp"
#include "circent/log_integrals.hpp"
#include "circent/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace circent {

struct SuiteConfig {
  int degree_min = 1;
  int degree_max = 12;
  int count = 100;  // instances per degree
  std::uint64_t seed = 42;
  Precision precision = Precision::Double;
  QuadratureConfig quadrature{};
  double gap_tol = tol::gap;
  double multiple_fraction = 0.1;  // share of instances with forced multiple zeros
  int inject_off_circle_every = 0; // 0 disables; otherwise every k-th instance is corrupted
  bool cross_check = false;        // quadrature route as well
  bool schur = true;               // one contraction triple per instance
  unsigned threads = 0;
};

struct InstanceResult {
  std::uint64_t seed = 0;
  int n = 0;
  bool simple_zeros = false;
  bool forced_multiple = false;
  double norm = 0.0;
  double entropy = 0.0;
  double jensen = 0.0;
  double polar = 0.0;
  double gamma = 0.0;
  double main_gap = 0.0;
  double strengthened_gap = 0.0;
  double polar_gap = 0.0;
  double jensen_gap = 0.0;
  double split_residual = 0.0;
  double moment_residual = 0.0;       // relative to N
  double moment_norm_residual = 0.0;  // relative to N
  double vanishing = 0.0;             // max |M_k| / M_0 over n <= k < n + 6
  double bound_slack = 0.0;           // Gamma - max_{1<=k<n} |M_k|
  double schur_slack = 0.0;
  double route_residual = 0.0;
  bool extremal = false;
  std::string status;  // "ok", "violation" or "input_error"
  std::string detail;
};

struct SuiteSummary {
  int instances = 0;
  int failures = 0;
  int input_errors = 0;
  double min_main_gap = 0.0;
  double min_strengthened_gap = 0.0;
  double min_polar_gap = 0.0;
  double min_jensen_gap = 0.0;
  double max_split_residual = 0.0;
  double max_moment_residual = 0.0;
  double max_moment_norm_residual = 0.0;
  double max_vanishing = 0.0;
  double min_bound_slack = 0.0;
  double min_schur_slack = 0.0;
  double max_route_residual = 0.0;
};

struct SuiteResult {
  std::vector<InstanceResult> rows;  // degree-major, then instance index
  SuiteSummary summary;
  bool ok() const { return summary.failures == 0; }
};

/// Each instance draws from its own seed derived from (seed, n, index), so
/// results do not depend on thread count.
SuiteResult run_suite(const SuiteConfig& config);

/// Checks one polynomial; never throws for input errors, which are recorded
/// in the row instead.
InstanceResult check_instance(const CirclePoly& p, const SuiteConfig& config, std::uint64_t schur_seed);

std::string suite_to_csv(const SuiteResult& r);

}  // namespace circent
