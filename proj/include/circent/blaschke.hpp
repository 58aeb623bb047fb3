#pragma once

// Power series of the Blaschke quotient r = q*/q, the moments
// M_k = <r^k q, q>, and the weighted Schur contraction check.

#include "circent/polycircle.hpp"
#include "circent/types.hpp"

#include <vector>

namespace circent {

/// Taylor coefficients 0..K of 1/q; throws ZeroConstantTerm when q(0) == 0.
Coeffs series_inverse(CoeffView q, int K);

/// Coefficients 0..K of a * b.
Coeffs series_multiply(CoeffView a, CoeffView b, int K);

struct RatioSeries {
  Coeffs r;  // r_0 .. r_K, r_0 == 0
  int order = 0;
};

/// r = qstar / q expanded at the origin. K < 0 selects 4n.
RatioSeries blaschke_quotient(const PolarDecomposition& d, int K = -1);

/// qstar(z)/q(z) evaluated as a rational function.
cplx blaschke_value(const PolarDecomposition& d, cplx z);

struct MomentSequence {
  int degree = 0;
  bool simple_zeros = false;
  int truncation_order = 0;
  std::vector<cplx> values;      // M_0 .. M_{n-1}
  std::vector<cplx> over_range;  // M_n .. M_{n+extra-1}

  /// M_k from either list; zero beyond the computed range.
  cplx at(int k) const;
  /// True when the theorem behind the moment formulas does not apply.
  bool outside_hypotheses() const { return !simple_zeros; }
};

/// K < 0 selects the default order 4n + guard.
MomentSequence moments(const PolarDecomposition& d, int extra = 6, int K = -1,
                       Precision precision = Precision::Double);

/// M_k by trapezoidal quadrature of |q|^2 (qstar/q)^k on `nodes` points.
cplx moment_quadrature(const PolarDecomposition& d, int k, int nodes = 1 << 14);

/// gamma * prod (z - alpha) / (1 - conj(alpha) z).
struct BlaschkeParams {
  std::vector<cplx> zeros;
  cplx gamma = 1.0;
};

/// Taylor coefficients 0..K of the Blaschke product; throws ZeroOnBoundary
/// when some zero has modulus >= 1 - tol::sep.
Coeffs blaschke_series(const BlaschkeParams& phi, int K);

struct SchurContractionReport {
  int n = 0;
  double sn_product = 0.0;  // S_n(phi f)
  double sn_input = 0.0;    // S_n(f)
  std::vector<double> al_product;  // A_l(phi f), l = 0..n-1
  std::vector<double> al_input;    // A_l(f)
  double min_slack = 0.0;          // smallest of all (input - product) differences
  bool passed = false;
};

/// f must have f_0 == 0; n >= 2.
SchurContractionReport schur_contraction_check(const BlaschkeParams& phi, CoeffView f, int n,
                                               int guard = 8, double slack_tol = 1e-12);

}  // namespace circent
