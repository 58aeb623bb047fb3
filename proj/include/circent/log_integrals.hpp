#pragma once

// Integrals of |A|^2 log|B|^2 over the unit circle (normalized measure).
//
// Two routes are provided: an exact spectral route that pairs the Fourier
// coefficients of |A|^2 with the log series of each linear factor of B, and
// an adaptive quadrature route that resolves the logarithmic singularities
// numerically. With x log x = 0 at x = 0, both are finite for every pair of
// nonzero polynomials.

#include "circent/polycircle.hpp"
#include "circent/types.hpp"

#include <string>
#include <vector>

namespace circent {

/// Fourier coefficients of |A(e^{it})|^2: c_k for k = -n..n.
class TrigSquare {
 public:
  explicit TrigSquare(CoeffView a);

  int degree() const noexcept { return static_cast<int>(pos_.size()) - 1; }
  cplx coeff(int k) const;
  /// c_0 .. c_n.
  const Coeffs& nonnegative() const noexcept { return pos_; }
  double eval(double t) const;

 private:
  Coeffs pos_;
};

/// Throws ZeroPolynomial when A is identically zero.
TrigSquare trig_square(CoeffView a);

struct RootCertificate {
  std::vector<cplx> roots;
  std::vector<double> residuals;  // backward error per root
  double max_residual = 0.0;
  cplx leading = 0.0;
  int roots_at_infinity = 0;
};

/// Companion matrix eigenvalues with one Newton polish step. Throws
/// IllConditioned when a certificate exceeds `root_tol`, ZeroPolynomial for
/// B == 0.
RootCertificate poly_roots(CoeffView b, double root_tol = tol::root);

/// B = leading * prod (z - root), with roots known.
struct FactoredPoly {
  cplx leading = 1.0;
  std::vector<cplx> roots;
};

struct SpectralCertificate {
  double near_boundary = 0.0;  // largest | |rho| - 1 | below tol::sep; such roots are used as is
  double max_root_residual = 0.0;
};

/// Exact spectral route with roots found from coefficients.
double log_pair_spectral(CoeffView a, CoeffView b, SpectralCertificate* cert = nullptr,
                         Precision precision = Precision::Double);

/// Exact spectral route with the factorization of B supplied by the caller.
double log_pair_spectral(CoeffView a, const FactoredPoly& b, SpectralCertificate* cert = nullptr,
                         Precision precision = Precision::Double);

struct QuadratureConfig {
  int base_nodes = 1 << 12;
  double tolerance = 1e-9;
  int max_depth = 40;
  double window = 1e-2;
};

struct QuadratureReport {
  double value = 0.0;
  double error_estimate = 0.0;
  int singular_points = 0;
  int evaluations = 0;
  bool adaptive = false;
};

/// Adaptive integration of |A|^2 log|B|^2. Throws BudgetExceeded when the
/// refinement depth is exhausted before the tolerance is met.
QuadratureReport log_pair_quadrature_report(CoeffView a, CoeffView b,
                                            const QuadratureConfig& config = {});
inline double log_pair_quadrature(CoeffView a, CoeffView b, const QuadratureConfig& config = {}) {
  return log_pair_quadrature_report(a, b, config).value;
}

/// Factorization of the polar factor q = p - (1/n) Dp of a CirclePoly.
/// Zeros of q on the circle sit exactly at multiple zeros tau of p, with
/// multiplicity one less; those are divided out exactly and the cofactor's
/// roots are computed numerically.
FactoredPoly polar_factor_roots(const CirclePoly& p, SpectralCertificate* cert = nullptr);

struct RatioFunctionalValue {
  double value = 0.0;        // J_n(P) = entropy_term - jensen_term
  double entropy_term = 0.0;  // int |P|^2 log |P|^2
  double jensen_term = 0.0;   // int |P|^2 log |Q|^2
  std::string route;          // "spectral" or "quadrature"
};

enum class Route { Spectral, Quadrature };

/// Always a difference of two log integrals, never a pointwise quotient.
RatioFunctionalValue ratio_functional(const CirclePoly& p, Route route = Route::Spectral,
                                      const QuadratureConfig& config = {},
                                      Precision precision = Precision::Double);

}  // namespace circent
