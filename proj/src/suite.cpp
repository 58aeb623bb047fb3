#include "circent/suite.hpp"

#include "circent/blaschke.hpp"
#include "circent/detail/kernels.hpp"
#include "circent/error.hpp"
#include "circent/io.hpp"
#include "circent/parallel.hpp"
#include "circent/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace circent {

namespace {

double schur_triple(std::uint64_t seed) {
  Rng rng(seed);
  const int n = rng.integer(2, 10);
  BlaschkeParams phi;
  const int zeros = rng.integer(0, 3);
  for (int i = 0; i < zeros; ++i) phi.zeros.push_back(rng.in_disk(0.95));
  phi.gamma = rng.unimodular();
  Coeffs f(static_cast<std::size_t>(n + 2), 0.0);
  for (std::size_t j = 1; j < f.size(); ++j) f[j] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return schur_contraction_check(phi, f, n).min_slack;
}

CirclePoly off_circle_instance(Rng& rng, int n) {
  std::vector<cplx> roots;
  for (int i = 0; i < n; ++i) roots.push_back(rng.unimodular());
  roots[0] *= 1.25;
  return CirclePoly::from_coefficients(detail::expand_roots<double>(1.0, roots));
}

}  // namespace

InstanceResult check_instance(const CirclePoly& p, const SuiteConfig& config, std::uint64_t schur_seed) {
  InstanceResult row;
  row.n = p.degree();
  VerifyOptions opts;
  opts.precision = config.precision;
  opts.cross_check = config.cross_check;
  opts.quadrature = config.quadrature;
  opts.gap_tol = config.gap_tol;
  EntropyReport rep;
  try {
    rep = verify_main(p, opts);
  } catch (const Error& e) {
    row.status = "input_error";
    row.detail = std::string(to_string(e.kind()));
    return row;
  }
  row.simple_zeros = rep.simple_zeros;
  row.norm = rep.norm;
  row.entropy = rep.entropy;
  row.jensen = rep.jensen;
  row.polar = rep.polar;
  row.gamma = rep.gamma;
  row.main_gap = rep.main_gap;
  row.strengthened_gap = rep.strengthened_gap;
  row.polar_gap = rep.polar_gap;
  row.jensen_gap = rep.jensen_gap;
  row.split_residual = std::abs(rep.split_residual);
  row.moment_residual = rep.moment_residual;
  row.moment_norm_residual = rep.moment_norm_residual;
  row.route_residual = rep.route_residual;
  row.extremal = rep.extremal;
  std::vector<std::string> problems = rep.violations;

  const CirclePoly s = normalize_self_inversive(p).normalized;
  const MomentSequence m = moments(polar_factor(s), 6, -1, config.precision);
  const double m0 = m.at(0).real();
  for (const cplx& v : m.over_range) row.vanishing = std::max(row.vanishing, std::abs(v) / m0);
  double largest = 0.0;
  for (int k = 1; k < row.n; ++k) largest = std::max(largest, std::abs(m.at(k)));
  row.bound_slack = rep.gamma - largest;
  if (row.simple_zeros) {
    if (row.vanishing >= 1e-8) problems.emplace_back("moment_vanishing");
    if (row.bound_slack < -1e-9) problems.emplace_back("moment_bound");
    if (row.moment_norm_residual >= 1e-9) problems.emplace_back("norm_identity");
  }
  if (row.split_residual > 1e-9) problems.emplace_back("split");

  if (config.schur) {
    row.schur_slack = schur_triple(schur_seed);
    if (row.schur_slack < -1e-12) problems.emplace_back("schur");
  }

  row.status = problems.empty() ? "ok" : "violation";
  for (std::size_t i = 0; i < problems.size(); ++i) row.detail += (i ? ";" : "") + problems[i];
  return row;
}

SuiteResult run_suite(const SuiteConfig& config) {
  if (config.degree_min < 1 || config.degree_max < config.degree_min)
    throw Error(ErrorKind::InvalidArgument, "invalid degree range");
  if (config.count < 1) throw Error(ErrorKind::InvalidArgument, "count must be positive");
  if (config.multiple_fraction < 0.0 || config.multiple_fraction > 1.0)
    throw Error(ErrorKind::InvalidArgument, "multiple fraction must lie in [0, 1]");

  const int degrees = config.degree_max - config.degree_min + 1;
  const std::size_t total = static_cast<std::size_t>(degrees) * static_cast<std::size_t>(config.count);
  SuiteResult out;
  out.rows.resize(total);
  parallel_for(total, [&](std::size_t idx) {
    const int n = config.degree_min + static_cast<int>(idx / static_cast<std::size_t>(config.count));
    const auto i = static_cast<std::uint64_t>(idx % static_cast<std::size_t>(config.count));
    const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(n), i);
    Rng rng(seed);
    InstanceResult row;
    const bool corrupt = config.inject_off_circle_every > 0 &&
                         (idx + 1) % static_cast<std::size_t>(config.inject_off_circle_every) == 0;
    const bool forced = n >= 2 && rng.uniform() < config.multiple_fraction;
    try {
      const CirclePoly p = corrupt ? off_circle_instance(rng, n)
                                   : random_circle_poly(rng, n, RandomPolyOptions{.force_multiple = forced});
      row = check_instance(p, config, derive_seed(seed, 0x5c4u));
    } catch (const Error& e) {
      row.n = n;
      row.status = "input_error";
      row.detail = std::string(to_string(e.kind()));
    }
    row.seed = seed;
    row.forced_multiple = forced && !corrupt;
    out.rows[idx] = row;
  }, config.threads);

  SuiteSummary& s = out.summary;
  constexpr double inf = std::numeric_limits<double>::infinity();
  s.min_main_gap = s.min_strengthened_gap = s.min_polar_gap = s.min_jensen_gap = inf;
  s.min_bound_slack = s.min_schur_slack = inf;
  for (const auto& r : out.rows) {
    ++s.instances;
    if (r.status == "input_error") {
      ++s.input_errors;
      continue;
    }
    if (r.status != "ok") ++s.failures;
    s.min_main_gap = std::min(s.min_main_gap, r.main_gap);
    s.min_strengthened_gap = std::min(s.min_strengthened_gap, r.strengthened_gap);
    s.min_polar_gap = std::min(s.min_polar_gap, r.polar_gap);
    s.min_jensen_gap = std::min(s.min_jensen_gap, r.jensen_gap);
    s.max_split_residual = std::max(s.max_split_residual, r.split_residual);
    s.max_route_residual = std::max(s.max_route_residual, r.route_residual);
    if (config.schur) s.min_schur_slack = std::min(s.min_schur_slack, r.schur_slack);
    if (!r.simple_zeros) continue;
    s.max_moment_residual = std::max(s.max_moment_residual, r.moment_residual);
    s.max_moment_norm_residual = std::max(s.max_moment_norm_residual, r.moment_norm_residual);
    s.max_vanishing = std::max(s.max_vanishing, r.vanishing);
    if (r.n >= 2) s.min_bound_slack = std::min(s.min_bound_slack, r.bound_slack);
  }
  return out;
}

std::string suite_to_csv(const SuiteResult& r) {
  std::ostringstream os;
  os << "seed,n,simple_zeros,forced_multiple,N,E,jensen_term,polar_term,gamma,main_gap,strengthened_gap,"
        "polar_gap,jensen_gap,split_residual,moment_residual,moment_norm_residual,vanishing,bound_slack,"
        "schur_slack,route_residual,extremal,status,detail\n";
  for (const auto& x : r.rows) {
    os << x.seed << ',' << x.n << ',' << int{x.simple_zeros} << ',' << int{x.forced_multiple};
    for (double v : {x.norm, x.entropy, x.jensen, x.polar, x.gamma, x.main_gap, x.strengthened_gap, x.polar_gap,
                     x.jensen_gap, x.split_residual, x.moment_residual, x.moment_norm_residual, x.vanishing,
                     x.bound_slack, x.schur_slack, x.route_residual})
      os << ',' << format_double(v);
    os << ',' << int{x.extremal} << ',' << x.status << ',' << x.detail << '\n';
  }
  return os.str();
}

}  // namespace circent
