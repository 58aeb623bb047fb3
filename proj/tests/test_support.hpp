#pragma once

// Shared generators and independent oracles for the unit tests.

#include "circent/polycircle.hpp"
#include "circent/random.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace circent::oracle {

inline constexpr double kPi = std::numbers::pi;

inline cplx eval(CoeffView c, cplx z) {
  cplx s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
  return s;
}

/// Horner in long double.
inline std::complex<long double> eval_ld(CoeffView c, std::complex<long double> z) {
  std::complex<long double> s = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + std::complex<long double>(*it);
  return s;
}

/// Random polynomial with pairwise separated zeros.
inline CirclePoly random_simple(Rng& rng, int n, double min_gap = 1e-3) {
  while (true) {
    CirclePoly p = random_circle_poly(rng, n);
    if (p.simple_zeros(min_gap)) return p;
  }
}

/// Integral of f over [0, 2 pi) divided by 2 pi, split at the given angles so
/// that each piece has its singularities at the endpoints only.
template <class F>
double circle_mean_split(F f, std::vector<double> cuts) {
  for (auto& c : cuts) {
    c = std::fmod(c, 2 * kPi);
    if (c < 0) c += 2 * kPi;
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return b - a < 1e-14; }), cuts.end());
  if (cuts.empty()) cuts.push_back(0.0);
  boost::math::quadrature::tanh_sinh<double> ts(12);
  double total = 0.0;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = i + 1 < cuts.size() ? cuts[i + 1] : cuts[0] + 2 * kPi;
    if (b - a < 1e-15) continue;
    total += ts.integrate([&](double t) { return f(t); }, a, b);
  }
  return total / (2 * kPi);
}

/// Oracle for the integral of |A|^2 log|B|^2 when the circle zeros of B are
/// known (by angle).
inline double log_pair_oracle(CoeffView a, CoeffView b, const std::vector<double>& cuts) {
  auto f = [&](double t) {
    const cplx z = std::polar(1.0, t);
    const double w = std::norm(eval(a, z));
    const double v = std::norm(eval(b, z));
    if (w == 0.0 || v == 0.0) return 0.0;
    return w * std::log(v);
  };
  return circle_mean_split(f, cuts);
}

}  // namespace circent::oracle
