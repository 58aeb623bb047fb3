#include "circent/entropy.hpp"

#include "circent/detail/kernels.hpp"
#include "circent/error.hpp"
#include "circent/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circent {

namespace {

double remainder_term(double gamma, int n) {
  return n >= 2 ? 2.0 * gamma / (static_cast<double>(n) * (n - 1)) : 0.0;
}

}  // namespace

Rational h_fourier(int k) {
  k = std::abs(k);
  if (k == 0) return Rational(2);
  if (k == 1) return Rational(3, 2);
  const boost::multiprecision::cpp_int kk = k;
  const boost::multiprecision::cpp_int den = kk * (kk * kk - 1);
  return Rational((k % 2 == 0 ? 2 : -2), 1) / Rational(den);
}

double h_function(double t) {
  // |1 + e^{it}|^2 = 4 cos^2(t/2), accurate near t = pi.
  const double c = std::cos(0.5 * t);
  const double x = 4.0 * c * c;
  return x == 0.0 ? 0.0 : x * std::log(x);
}

double h_partial_sum(double t, int L) {
  double s = 2.0;
  if (L >= 1) s += 3.0 * std::cos(t);
  for (int k = 2; k <= L; ++k) {
    const double coef = 2.0 / (static_cast<double>(k) * (static_cast<double>(k) * k - 1.0));
    s += (k % 2 == 0 ? 2.0 : -2.0) * coef * std::cos(k * t);
  }
  return s;
}

double h_tail_bound(int L) {
  if (L < 1) throw Error(ErrorKind::InvalidArgument, "L must be positive");
  return 2.0 / (static_cast<double>(L) * (L + 1));
}

double h_fourier_quadrature(int k, double tolerance) {
  k = std::abs(k);
  auto f = [k](double t) { return h_function(t) * std::cos(k * t); };
  // h is even; the only non-smooth point is t = pi, an endpoint.
  const AdaptiveResult r = gauss_kronrod_adaptive(f, 0.0, std::numbers::pi, tolerance, 50);
  return r.value / std::numbers::pi;
}

Rational telescoping_sum(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  Rational s = 0;
  for (int k = 2; k <= n - 1; ++k) {
    const boost::multiprecision::cpp_int kk = k;
    s += Rational(1) / Rational(kk * (kk * kk - 1));
  }
  return s;
}

Rational telescoping_closed_form(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be at least 2");
  const boost::multiprecision::cpp_int nn = n;
  return Rational(1, 4) - Rational(1) / Rational(2 * nn * (nn - 1));
}

double polar_term_via_moments(const MomentSequence& m, int n) {
  double s = 2.0 * m.at(0).real();
  if (n == 1) return s;
  s += 3.0 * m.at(1).real();
  for (int k = 2; k <= n - 1; ++k) {
    const double w = 4.0 / (static_cast<double>(k) * (static_cast<double>(k) * k - 1.0));
    s += (k % 2 == 0 ? w : -w) * m.at(k).real();
  }
  return s;
}

double norm_via_moments(const MomentSequence& m) { return 2.0 * m.at(0).real() + 2.0 * m.at(1).real(); }

double mu_mass_check(const PolarDecomposition& d, int nodes) {
  auto f = [&](double t) {
    const cplx z = std::polar(1.0, t);
    return std::norm(1.0 + blaschke_value(d, z));
  };
  return trapezoid_mean(f, nodes);
}

EntropyReport verify_main(const CirclePoly& input, const VerifyOptions& opts) {
  const NormalizationResult norm = [&] {
    try {
      return normalize_self_inversive(input);
    } catch (const Error& e) {
      throw Error(ErrorKind::RootsOffCircle, e.what());
    }
  }();
  const CirclePoly& p = norm.normalized;
  const int n = p.degree();

  EntropyReport rep;
  rep.n = n;
  rep.eta = norm.eta;
  rep.simple_zeros = p.simple_zeros();
  rep.norm = parseval_norm(p);
  rep.gamma = gamma_remainder(p);
  rep.remainder = remainder_term(rep.gamma, n);

  rep.entropy = log_pair_spectral(p.coeffs(), FactoredPoly{p.leading(), p.roots()}, nullptr, opts.precision);
  const PolarDecomposition d = polar_factor(p);
  try {
    rep.jensen = log_pair_spectral(p.coeffs(), polar_factor_roots(p), nullptr, opts.precision);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IllConditioned) throw;
    rep.jensen = log_pair_quadrature(p.coeffs(), d.q, opts.quadrature);
    rep.jensen_route = "quadrature";
  }
  // Difference form; never a pointwise quotient.
  rep.polar = rep.entropy - rep.jensen;
  rep.split_residual = rep.entropy - (rep.jensen + rep.polar);

  const double N = rep.norm;
  rep.jensen_bound = N * std::log(N / 2.0);
  rep.main_bound = N + rep.jensen_bound;
  rep.strengthened_bound = rep.main_bound + rep.remainder;
  rep.polar_bound = N + rep.remainder;
  rep.main_gap = rep.entropy - rep.main_bound;
  rep.strengthened_gap = rep.entropy - rep.strengthened_bound;
  rep.polar_gap = rep.polar - rep.polar_bound;
  rep.jensen_gap = rep.jensen - rep.jensen_bound;

  const MomentSequence m = moments(d, 6, -1, opts.precision);
  rep.moment_value = polar_term_via_moments(m, n);
  rep.moment_norm = norm_via_moments(m);
  rep.moment_residual = std::abs(rep.polar - rep.moment_value) / N;
  rep.moment_norm_residual = std::abs(N - rep.moment_norm) / N;
  rep.moment_advisory = !rep.simple_zeros;

  if (opts.cross_check) {
    rep.entropy_quadrature = log_pair_quadrature(p.coeffs(), p.coeffs(), opts.quadrature);
    rep.jensen_quadrature = log_pair_quadrature(p.coeffs(), d.q, opts.quadrature);
    rep.route_residual = std::max(std::abs(*rep.entropy_quadrature - rep.entropy),
                                  std::abs(*rep.jensen_quadrature - rep.jensen));
  }

  const Coeffs& a = p.coeffs();
  const double ends = std::max(std::abs(a.front()), std::abs(a.back()));
  double inner = 0.0;
  for (int j = 1; j < n; ++j) inner = std::max(inner, std::abs(a[static_cast<std::size_t>(j)]));
  rep.extremal_margin = inner / ends;
  rep.extremal = rep.extremal_margin < opts.eq_tol &&
                 std::abs(std::abs(a.front()) - std::abs(a.back())) < opts.eq_tol * ends;

  const double g = -opts.gap_tol;
  if (rep.jensen_gap < g) rep.violations.emplace_back("jensen");
  if (rep.polar_gap < g) rep.violations.emplace_back("polar");
  if (rep.main_gap < g) rep.violations.emplace_back("main");
  if (rep.strengthened_gap < g) rep.violations.emplace_back("strengthened");
  if (rep.simple_zeros && rep.moment_residual > opts.identity_tol) rep.violations.emplace_back("moment_identity");
  if (opts.cross_check && rep.route_residual > 1e-7 * std::max(1.0, N)) rep.violations.emplace_back("route_agreement");
  return rep;
}

double jensen_gap(const CirclePoly& p) {
  const CirclePoly s = normalize_self_inversive(p).normalized;
  const double N = parseval_norm(s);
  const double J = log_pair_spectral(s.coeffs(), polar_factor_roots(s));
  return J - N * std::log(N / 2.0);
}

}  // namespace circent
