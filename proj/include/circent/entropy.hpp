#pragma once

// Entropy functionals of circle-zero polynomials and the inequalities that
// bound them.

#include "circent/blaschke.hpp"
#include "circent/log_integrals.hpp"
#include "circent/polycircle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace circent {

using Rational = boost::multiprecision::cpp_rational;

/// Fourier coefficient k of h(w) = |1+w|^2 log|1+w|^2 on the circle:
/// 2, 3/2, then 2(-1)^k / (k(k^2-1)). Symmetric in k.
Rational h_fourier(int k);

/// h(e^{it}) with h(-1) = 0.
double h_function(double t);

/// Symmetric partial sum s_L(e^{it}); L < 1 gives the constant term.
double h_partial_sum(double t, int L);

/// Sup-norm bound for h - s_L from the coefficient tail, 2 / (L(L+1)).
double h_tail_bound(int L);

/// Independent numerical value of the k-th coefficient.
double h_fourier_quadrature(int k, double tolerance = 1e-13);

/// Sum_{k=2}^{n-1} 1/(k(k^2-1)), summed exactly.
Rational telescoping_sum(int n);

/// 1/4 - 1/(2n(n-1)).
Rational telescoping_closed_form(int n);

/// 2 M_0 + 3 Re M_1 + 4 sum_{k=2}^{n-1} (-1)^k/(k(k^2-1)) Re M_k.
double polar_term_via_moments(const MomentSequence& m, int n);

/// 2 M_0 + 2 Re M_1.
double norm_via_moments(const MomentSequence& m);

/// Trapezoidal mean of |1 + r|^2 over the circle; 2 for simple zeros.
double mu_mass_check(const PolarDecomposition& d, int nodes = 1 << 14);

struct VerifyOptions {
  Precision precision = Precision::Double;
  bool cross_check = false;  // also evaluate E and J by quadrature
  QuadratureConfig quadrature{};
  double gap_tol = tol::gap;
  double eq_tol = tol::eq;
  double identity_tol = 1e-8;  // relative to N, moment formula residual
};

struct EntropyReport {
  int n = 0;
  cplx eta = 1.0;
  bool simple_zeros = false;

  double norm = 0.0;      // N(p)
  double entropy = 0.0;   // E(p)
  double jensen = 0.0;    // J(p) = int |p|^2 log |q|^2
  double polar = 0.0;     // J_n(p) = E - J
  double gamma = 0.0;     // Gamma(p)
  double remainder = 0.0; // 2 Gamma / (n(n-1)), zero for n = 1

  double main_bound = 0.0;          // N (1 + log(N/2))
  double strengthened_bound = 0.0;  // main_bound + remainder
  double polar_bound = 0.0;         // N + remainder
  double jensen_bound = 0.0;        // N log(N/2)

  double main_gap = 0.0;
  double strengthened_gap = 0.0;
  double polar_gap = 0.0;
  double jensen_gap = 0.0;

  double split_residual = 0.0;  // E - (J + J_n)

  double moment_value = 0.0;         // moment formula for J_n
  double moment_norm = 0.0;          // 2 M_0 + 2 Re M_1
  double moment_residual = 0.0;      // |J_n - moment_value| / N
  double moment_norm_residual = 0.0; // |N - moment_norm| / N
  bool moment_advisory = false;      // multiple zeros: formula outside hypotheses

  std::string entropy_route = "spectral";
  std::string jensen_route = "spectral";
  std::optional<double> entropy_quadrature;
  std::optional<double> jensen_quadrature;
  double route_residual = 0.0;

  bool extremal = false;
  double extremal_margin = 0.0;  // max_{0<j<n} |a_j| / max(|a_0|, |a_n|)

  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Normalizes p to self-inversive form, evaluates every functional and checks
/// all four inequalities. Throws RootsOffCircle if normalization fails.
EntropyReport verify_main(const CirclePoly& p, const VerifyOptions& opts = {});

/// J - N log(N/2).
double jensen_gap(const CirclePoly& p);

}  // namespace circent
