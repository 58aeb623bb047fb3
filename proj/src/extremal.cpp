#include "circent/extremal.hpp"

#include "circent/detail/kernels.hpp"
#include "circent/entropy.hpp"
#include "circent/error.hpp"
#include "circent/log_integrals.hpp"
#include "circent/parallel.hpp"
#include "circent/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace circent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Counter {
  long evaluations = 0;
  long violations = 0;
  double min_seen = std::numeric_limits<double>::infinity();
};

// Objective on the gauge-fixed space: theta_1 = 0, x = (theta_2 .. theta_n).
double gauged(const std::vector<double>& x, Counter& c) {
  std::vector<double> angles(x.size() + 1, 0.0);
  std::copy(x.begin(), x.end(), angles.begin() + 1);
  const double v = objective(angles);
  ++c.evaluations;
  c.min_seen = std::min(c.min_seen, v);
  if (v < extremal_entropy_value() - 1e-9) ++c.violations;
  return v;
}

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

SimplexResult nelder_mead(std::vector<double> x0, double step, double tol, long budget, Counter& c) {
  const std::size_t d = x0.size();
  std::vector<std::vector<double>> pts(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step;
  std::vector<double> vals(d + 1);
  for (std::size_t i = 0; i <= d; ++i) vals[i] = gauged(pts[i], c);
  const long start = c.evaluations;

  SimplexResult out;
  std::vector<std::size_t> idx(d + 1);
  while (true) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const auto& best = pts[idx[0]];
    double diam = 0.0;
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t k = 0; k < d; ++k) diam = std::max(diam, std::abs(pts[idx[i]][k] - best[k]));
    if (diam < tol) {
      out.converged = true;
      break;
    }
    if (c.evaluations - start >= budget) break;
    ++out.iterations;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[idx[i]][k] / static_cast<double>(d);
    const std::size_t worst = idx[d];
    auto along = [&](double t) {
      std::vector<double> y(d);
      for (std::size_t k = 0; k < d; ++k) y[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
      return y;
    };
    const auto xr = along(-1.0);
    const double fr = gauged(xr, c);
    if (fr < vals[idx[0]]) {
      const auto xe = along(-2.0);
      const double fe = gauged(xe, c);
      if (fe < fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[idx[d - 1]]) {
      pts[worst] = xr;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    const auto xc = along(outside ? -0.5 : 0.5);
    const double fc = gauged(xc, c);
    if (fc < std::min(fr, vals[worst])) {
      pts[worst] = xc;
      vals[worst] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= d; ++i) {
      auto& p = pts[idx[i]];
      for (std::size_t k = 0; k < d; ++k) p[k] = best[k] + 0.5 * (p[k] - best[k]);
      vals[idx[i]] = gauged(p, c);
    }
  }
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const std::size_t b = *std::min_element(idx.begin(), idx.end(),
                                          [&](std::size_t x, std::size_t y) { return vals[x] < vals[y]; });
  out.x = pts[b];
  out.value = vals[b];
  return out;
}

std::vector<double> start_point(int n, int restart, std::uint64_t seed, std::string& kind) {
  std::vector<double> x(static_cast<std::size_t>(n - 1));
  if (restart % 2 == 0) {
    // Kronecker sequence with a restart-dependent irrational step.
    kind = "low-discrepancy";
    const double alpha = std::fmod(std::sqrt(2.0 + 3.0 * restart) * std::numbers::phi, 1.0);
    const double offset = std::fmod((restart + 1) * std::numbers::sqrt2, 1.0);
    for (int j = 1; j < n; ++j)
      x[static_cast<std::size_t>(j - 1)] = kTwoPi * std::fmod(j * alpha + offset, 1.0);
  } else {
    kind = "uniform";
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    for (auto& v : x) v = rng.uniform(0.0, kTwoPi);
  }
  return x;
}

// Moves the zero with the closest neighbour to the middle of the widest gap,
// then re-gauges so that theta_1 = 0.
std::vector<double> spread_move(const std::vector<double>& x) {
  std::vector<double> a(x.size() + 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) a[i + 1] = std::fmod(std::fmod(x[i], kTwoPi) + kTwoPi, kTwoPi);
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a[i] < a[j]; });
  const std::size_t m = a.size();
  auto gap_after = [&](std::size_t k) {
    const double next = k + 1 < m ? a[order[k + 1]] : a[order[0]] + kTwoPi;
    return next - a[order[k]];
  };
  std::size_t crowded = 0, widest = 0;
  double crowd = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) {
    const double g = std::min(gap_after(k), gap_after((k + m - 1) % m));
    if (g < crowd) crowd = g, crowded = k;
    if (gap_after(k) > gap_after(widest)) widest = k;
  }
  a[order[crowded]] = a[order[widest]] + 0.5 * gap_after(widest);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = a[i + 1] - a[0];
  return y;
}

}  // namespace

double extremal_entropy_value() { return 1.0 - std::log(2.0); }

double objective(const std::vector<double>& angles, cplx leading) {
  if (angles.empty()) throw Error(ErrorKind::InvalidArgument, "objective needs at least one angle");
  std::vector<cplx> roots;
  roots.reserve(angles.size());
  for (double a : angles) roots.push_back(std::polar(1.0, a));
  const Coeffs c = detail::expand_roots<double>(leading, roots);
  const double N = parseval_norm(c);
  const double E = log_pair_spectral(c, FactoredPoly{leading, roots});
  return E / N - std::log(N);
}

double angle_gap_deviation(std::vector<double> angles) {
  const std::size_t n = angles.size();
  if (n == 0) return 0.0;
  for (auto& a : angles) {
    a = std::fmod(a, kTwoPi);
    if (a < 0) a += kTwoPi;
  }
  std::sort(angles.begin(), angles.end());
  const double ideal = kTwoPi / static_cast<double>(n);
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double next = i + 1 < n ? angles[i + 1] : angles[0] + kTwoPi;
    dev = std::max(dev, std::abs(next - angles[i] - ideal));
  }
  return dev;
}

ExtremalResult minimize(int n, int restarts, const SearchConfig& config) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be positive");
  ExtremalResult res;
  res.n = n;
  if (n == 1) {
    res.angles = {0.0};
    res.entropy = objective(res.angles);
    res.gap = res.entropy - extremal_entropy_value();
    res.converged = true;
    res.min_objective_seen = res.entropy;
    res.lower_bound_violations = res.entropy < extremal_entropy_value() - 1e-9 ? 1 : 0;
    res.trace.push_back({0, "trivial", 0, 1, res.entropy, true});
    return res;
  }

  struct Outcome {
    SimplexResult best;
    Counter counter;
    RestartTrace trace;
  };
  std::vector<Outcome> outcomes(static_cast<std::size_t>(restarts));
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
    Outcome& o = outcomes[r];
    o.trace.index = static_cast<int>(r);
    std::vector<double> x = start_point(n, static_cast<int>(r), config.seed, o.trace.start);
    SimplexResult cur = nelder_mead(x, config.initial_step, config.diameter_tol, config.max_evaluations, o.counter);
    int iterations = cur.iterations;
    // Re-seed the simplex at the incumbent until it stops improving.
    for (int polish = 0; polish < 4 && cur.converged; ++polish) {
      const long left = config.max_evaluations - o.counter.evaluations;
      if (left <= static_cast<long>(n) + 1) break;
      SimplexResult next = nelder_mead(cur.x, 0.05, config.diameter_tol, left, o.counter);
      iterations += next.iterations;
      const double gain = cur.value - next.value;
      if (next.value <= cur.value) {
        next.converged = next.converged && cur.converged;
        cur = next;
      }
      if (gain < 1e-14) break;
    }
    // Basin hopping: kick the incumbent and keep the result when it improves.
    Rng kicks(derive_seed(config.seed, static_cast<std::uint64_t>(r), 0x686f70ULL));
    for (int hop = 0; hop < config.hops; ++hop) {
      const long left = config.max_evaluations - o.counter.evaluations;
      if (left <= static_cast<long>(n) + 1) break;
      std::vector<double> y =
          hop % 2 == 0 ? spread_move(cur.x) : cur.x;
      if (hop % 2 == 1)
        for (auto& v : y) v += kicks.uniform(-config.hop_scale, config.hop_scale);
      SimplexResult next = nelder_mead(y, config.initial_step / 2, config.diameter_tol, left, o.counter);
      iterations += next.iterations;
      if (next.value < cur.value) cur = next;
    }
    o.best = cur;
    o.trace.iterations = iterations;
    o.trace.evaluations = static_cast<int>(o.counter.evaluations);
    o.trace.best = cur.value;
    o.trace.converged = cur.converged;
  }, config.threads);

  std::size_t winner = 0;
  res.min_objective_seen = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    const Outcome& o = outcomes[r];
    res.trace.push_back(o.trace);
    res.lower_bound_violations += o.counter.violations;
    res.min_objective_seen = std::min(res.min_objective_seen, o.counter.min_seen);
    res.converged = res.converged || o.best.converged;
    if (o.best.value < outcomes[winner].best.value) winner = r;
  }
  const Outcome& w = outcomes[winner];
  res.best_restart = static_cast<int>(winner);
  res.angles.assign(1, 0.0);
  for (double v : w.best.x) {
    double a = std::fmod(v, kTwoPi);
    if (a < 0) a += kTwoPi;
    res.angles.push_back(a);
  }
  res.entropy = w.best.value;
  res.gap = res.entropy - extremal_entropy_value();
  res.angle_gap_deviation = angle_gap_deviation(res.angles);
  return res;
}

double CoalescenceRow::max_deviation() const {
  return std::max({d_entropy, d_jensen, d_polar, d_gamma, d_norm, d_moment});
}

std::vector<double> dyadic_schedule(int first, int last) {
  std::vector<double> s;
  for (int k = first; k <= last; ++k) s.push_back(std::ldexp(1.0, -k));
  return s;
}

CoalescenceTable coalescence_experiment(const CirclePoly& input, const std::vector<double>& schedule,
                                        std::uint64_t seed) {
  if (schedule.empty()) throw Error(ErrorKind::InvalidArgument, "empty schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0)) throw Error(ErrorKind::InvalidArgument, "schedule entries must be positive");
    if (i > 0 && !(schedule[i] < schedule[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "schedule must be strictly decreasing");
  }
  const CirclePoly p = normalize_self_inversive(input).normalized;
  CoalescenceTable table;
  const RatioFunctionalValue lim = ratio_functional(p);
  table.entropy = lim.entropy_term;
  table.jensen = lim.jensen_term;
  table.polar = lim.value;
  table.gamma = gamma_remainder(p);
  table.norm = parseval_norm(p);

  for (double eps : schedule) {
    const CirclePoly pe = perturb_roots(p, eps, seed);
    const RatioFunctionalValue v = ratio_functional(pe);
    CoalescenceRow row;
    row.epsilon = eps;
    row.entropy = v.entropy_term;
    row.jensen = v.jensen_term;
    row.polar = v.value;
    row.gamma = gamma_remainder(pe);
    row.norm = parseval_norm(pe);
    row.moment_value = polar_term_via_moments(moments(polar_factor(pe)), pe.degree());
    row.d_entropy = std::abs(row.entropy - table.entropy);
    row.d_jensen = std::abs(row.jensen - table.jensen);
    row.d_polar = std::abs(row.polar - table.polar);
    row.d_gamma = std::abs(row.gamma - table.gamma);
    row.d_norm = std::abs(row.norm - table.norm);
    row.d_moment = std::abs(row.moment_value - table.polar);
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace circent
