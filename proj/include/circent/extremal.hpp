#pragma once

// Numerical search for minimizers of the normalized entropy over zero
// configurations on the circle, and coalescence experiments.

#include "circent/polycircle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace circent {

/// E(p/sqrt(N)) = E(p)/N - log N for p = leading * prod (z - e^{i theta}).
/// Invariant under uniform angle shifts and under scaling of `leading`.
double objective(const std::vector<double>& angles, cplx leading = 1.0);

/// 1 - log 2, the smallest possible value of the objective.
double extremal_entropy_value();

struct SearchConfig {
  std::uint64_t seed = 1;
  double diameter_tol = 1e-9;
  int max_evaluations = 60000;  // per restart
  double initial_step = 0.4;
  int hops = 12;           // random kicks of the incumbent per restart
  double hop_scale = 0.6;  // kick size in radians
  unsigned threads = 0;
};

struct RestartTrace {
  int index = 0;
  std::string start;  // "low-discrepancy" or "uniform"
  int iterations = 0;
  int evaluations = 0;
  double best = 0.0;
  bool converged = false;
};

struct ExtremalResult {
  int n = 0;
  std::vector<double> angles;  // theta_1 = 0
  double entropy = 0.0;        // objective at the optimum
  double gap = 0.0;            // entropy - (1 - log 2)
  double angle_gap_deviation = 0.0;
  bool converged = false;
  int best_restart = 0;
  double min_objective_seen = 0.0;
  long lower_bound_violations = 0;
  std::vector<RestartTrace> trace;
};

/// Largest |gap - 2pi/n| over consecutive sorted angles (cyclically).
double angle_gap_deviation(std::vector<double> angles);

/// Nelder-Mead on the gauge-fixed (n-1)-dimensional angle space from
/// `restarts` deterministic starts, each followed by `hops` rounds of basin
/// hopping; the best restart wins, ties to the lowest index. Never throws for
/// non-convergence; check `converged`.
ExtremalResult minimize(int n, int restarts, const SearchConfig& config = {});

struct CoalescenceRow {
  double epsilon = 0.0;
  double entropy = 0.0;
  double jensen = 0.0;
  double polar = 0.0;
  double gamma = 0.0;
  double norm = 0.0;
  double moment_value = 0.0;
  double d_entropy = 0.0;
  double d_jensen = 0.0;
  double d_polar = 0.0;
  double d_gamma = 0.0;
  double d_norm = 0.0;
  double d_moment = 0.0;  // |moment formula at p_eps - J_n(p)|
  double max_deviation() const;
};

struct CoalescenceTable {
  double entropy = 0.0;  // limits evaluated directly on p
  double jensen = 0.0;
  double polar = 0.0;
  double gamma = 0.0;
  double norm = 0.0;
  std::vector<CoalescenceRow> rows;
};

/// `schedule` must be strictly decreasing and positive.
CoalescenceTable coalescence_experiment(const CirclePoly& p, const std::vector<double>& schedule,
                                        std::uint64_t seed = 0);

/// 2^-first .. 2^-last.
std::vector<double> dyadic_schedule(int first, int last);

}  // namespace circent
