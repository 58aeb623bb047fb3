#pragma once

#include <functional>

namespace circent {

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool depth_exhausted = false;
};

/// Recursive bisection with the 7-point Gauss / 15-point Kronrod pair. The
/// tolerance is absolute and is split evenly between the two halves on every
/// bisection.
AdaptiveResult gauss_kronrod_adaptive(const std::function<double(double)>& f, double a, double b,
                                      double tol, int max_depth);

/// (1/nodes) sum f(2 pi i / nodes), i.e. the mean over the circle.
double trapezoid_mean(const std::function<double(double)>& f, int nodes);

}  // namespace circent
