#pragma once

// Polynomials whose zeros all lie on the unit circle.

#include "circent/types.hpp"

#include <cstdint>
#include <vector>

namespace circent {

/// A polynomial a * prod (z - tau_v) with |tau_v| = 1. Roots are the primary
/// data; coefficients are expanded once at construction.
class CirclePoly {
 public:
  /// Roots are projected onto the circle; throws NonUnimodularRoot when some
  /// |root| deviates from 1 by more than `unimod_tol`, ZeroLeading when
  /// leading == 0.
  static CirclePoly from_roots(std::vector<cplx> roots, cplx leading,
                               double unimod_tol = tol::unimod);

  /// Roots at angles theta_v.
  static CirclePoly from_angles(const std::vector<double>& angles, cplx leading = 1.0);

  /// Recovers the root list from a coefficient vector (trailing zeros are
  /// dropped). Roots within `cluster_tol` of each other are merged into one
  /// multiple root at the projected cluster centroid. Throws RootsOffCircle
  /// when a recovered root is off the circle by more than `circle_tol` or when
  /// the re-expanded roots fail to reproduce the input.
  static CirclePoly from_coefficients(const Coeffs& coeffs, double circle_tol = 1e-6,
                                      double cluster_tol = 1e-5);

  /// c (omega + z^n).
  static CirclePoly binomial(int n, cplx omega, cplx c = 1.0);

  int degree() const noexcept { return static_cast<int>(roots_.size()); }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  const std::vector<cplx>& roots() const noexcept { return roots_; }
  cplx leading() const noexcept { return leading_; }

  /// All angles in [0, 2pi).
  std::vector<double> angles() const;

  /// eta * p, same roots.
  CirclePoly scaled(cplx eta) const;

  /// Coefficients replaced by (a_j + conj(a_{n-j})) / 2, same roots. Only
  /// meaningful when p is already self-inversive up to rounding.
  CirclePoly symmetrized() const;

  /// Pairwise chordal distance of the roots exceeds `sep`.
  bool simple_zeros(double sep = tol::sep) const;

 private:
  CirclePoly(std::vector<cplx> roots, cplx leading);

  std::vector<cplx> roots_;
  cplx leading_;
  Coeffs coeffs_;
};

/// f*(z) = z^n conj(f(1/conj z)) relative to degree n. Throws DegreeOverflow
/// if f has a nonzero coefficient above degree n.
Coeffs reflect(CoeffView f, int n);

/// q = p - (1/n) Dp and qstar = (1/n) Dp of a self-inversive p.
struct PolarDecomposition {
  CirclePoly parent;
  Coeffs q;      // degree <= n-1, size n
  Coeffs qstar;  // size n+1, qstar[0] == 0
  bool simple_zeros = false;

  int degree() const noexcept { return parent.degree(); }
};

/// Throws NotSelfInversive when reflect(p) differs from p beyond tolerance.
PolarDecomposition polar_factor(const CirclePoly& p, double expand_tol = tol::expand);

enum class EtaBranch {
  Canonical,   // Re eta >= 0, ties toward Im eta > 0
  NearestOne,  // the square root closest to 1
};

struct NormalizationResult {
  cplx eta;
  cplx lambda;  // p* = lambda p
  CirclePoly normalized;
};

/// Finds eta with |eta| = 1 such that eta * p is self-inversive.
NormalizationResult normalize_self_inversive(const CirclePoly& p,
                                             EtaBranch branch = EtaBranch::Canonical,
                                             double expand_tol = tol::expand);

bool is_self_inversive(CoeffView coeffs, double expand_tol = tol::expand);

/// Sum |a_j|^2 (= integral of |p|^2 dm).
double parseval_norm(CoeffView coeffs);
inline double parseval_norm(const CirclePoly& p) { return parseval_norm(p.coeffs()); }

/// Sum_{j=1}^{n-1} j(n-j)/n^2 |a_j|^2.
double gamma_remainder(const CirclePoly& p);

/// Sum_{j=1}^{n-1} ((n-j)/j) |g_j|^2; requires n >= 2.
double weighted_form_Sn(CoeffView g, int n);

/// Sum_{j=0}^{l} |g_j|^2.
double partial_energy_Al(CoeffView g, int l);

/// Rotates root v (in a seed-dependent order) by epsilon * (k+1)/n, then
/// renormalizes to a self-inversive polynomial with the eta branch nearest 1.
/// Throws SeparationFailure if the rotated roots are not pairwise distinct.
CirclePoly perturb_roots(const CirclePoly& p, double epsilon, std::uint64_t seed = 0);

}  // namespace circent
