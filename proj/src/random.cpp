#include "circent/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circent {

cplx Rng::unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

cplx Rng::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
}

CirclePoly random_circle_poly(Rng& rng, int n, const RandomPolyOptions& opts) {
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (auto& a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  if (opts.force_multiple && n >= 2) {
    const int mult = rng.integer(2, std::max(2, std::min(n, opts.max_multiplicity)));
    for (int k = 1; k < mult; ++k) angles[static_cast<std::size_t>(k)] = angles[0];
    // Occasionally a second coincident pair.
    if (n - mult >= 2 && rng.uniform() < 0.3)
      angles[static_cast<std::size_t>(mult + 1)] = angles[static_cast<std::size_t>(mult)];
  }
  std::vector<cplx> roots;
  roots.reserve(angles.size());
  for (double a : angles) roots.push_back(std::polar(1.0, a));
  cplx lead = rng.unimodular();
  if (opts.normalize_scale) {
    const double n_monic = parseval_norm(CirclePoly::from_roots(roots, 1.0));
    const double target = std::exp2(rng.uniform(-2.0, 2.0));
    lead *= std::sqrt(target / n_monic);
  }
  return CirclePoly::from_roots(std::move(roots), lead);
}

}  // namespace circent
